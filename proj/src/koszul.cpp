#include "pk/koszul.hpp"

#include "pk/calculus.hpp"
#include "pk/homology.hpp"
#include "pk/linalg.hpp"
#include "pk/slices.hpp"

namespace pk {

Gen dual_gen(Gen g, Side from) {
    if (!kind_on_side(from, g.kind))
        throw UnsupportedSpace("generator " + name(g) + " does not live on side " + side_name(from));
    Kind k = g.kind == Kind::X    ? Kind::Xi
             : g.kind == Kind::Xi ? Kind::X
             : g.kind == Kind::Y  ? Kind::Eta
                                  : Kind::Y;
    Role r = g.role == Role::Var       ? Role::Partial
             : g.role == Role::Partial ? Role::Var
             : g.role == Role::Form    ? Role::Star
                                       : Role::Form;
    return {r, k, g.index};
}

namespace {

Poly map_letters(const Poly& a, Side from) {
    Poly out;
    for (const auto& [m, c] : a.terms()) {
        std::vector<Gen> word;
        for (Gen g : m.word()) word.push_back(dual_gen(g, from));
        Monomial mm;
        const int s = sort_word(word, mm);
        if (s != 0) out.add_term(mm, s * c); // s == 0 cannot happen: degrees match
    }
    return out;
}

} // namespace

Poly koszul_dual(const Poly& a, const Space& sp) {
    if (!is_polyvector(a, sp))
        throw DegreeMismatch("koszul_dual expects a polyvector on " + sp.str());
    return map_letters(a, sp.side);
}

Poly contraction_dual(const Poly& a, const Space& sp) {
    if (!is_polyvector(a, sp))
        throw DegreeMismatch("contraction_dual expects a polyvector on " + sp.str());
    Poly out;
    for (const auto& [m, c] : a.terms()) {
        // one -1 per xi coordinate letter on the NM side of the
        // correspondence; those letters are Dx on the MN side
        int flips = 0;
        for (const auto& [g, e] : m.factors) {
            const bool xi_letter = sp.side == Side::NM
                                       ? (g.role == Role::Var && g.kind == Kind::Xi)
                                       : (g.role == Role::Partial && g.kind == Kind::X);
            if (xi_letter) flips += e;
        }
        std::vector<Gen> word;
        for (Gen g : m.word()) word.push_back(dual_gen(g, sp.side));
        Monomial mm;
        const int s = sort_word(word, mm);
        if (s != 0) out.add_term(mm, (flips % 2 ? -s : s) * c);
    }
    return out;
}

Poly dual_transport_cochain(const Poly& a, const Space& sp) {
    if (!is_polyvector(a, sp))
        throw DegreeMismatch("dual_transport_cochain expects a polyvector on " + sp.str());
    Poly out;
    for (const auto& [m, c] : a.terms()) {
        // The coordinate pairings with even parity transport with a sign
        // flip, so the cochain map carries one factor of -1 per letter of
        // bi-degree (0,-1): Dx on one side, xi on the other.
        int flips = 0;
        for (const auto& [g, e] : m.factors)
            if (degree(g) == BiDegree{0, -1}) flips += e;
        std::vector<Gen> word;
        for (Gen g : m.word()) word.push_back(dual_gen(g, sp.side));
        Monomial mm;
        const int s = sort_word(word, mm);
        if (s != 0) out.add_term(mm, (flips % 2 ? -s : s) * c);
    }
    return out;
}

Poly dual_transport_chain(const Poly& a, const Space& sp) {
    if (!is_mixed_chain(a, sp))
        throw DegreeMismatch("dual_transport_chain expects a mixed chain on " + sp.str());
    return map_letters(a, sp.side);
}

namespace {

bool is_koszul_word(const Poly& a, const Space& sp) {
    return letters_are(a, [&](Gen g) {
        return valid_gen(sp, g) && (g.role == Role::Var || g.role == Role::Form);
    });
}

} // namespace

Poly koszul_d(const Poly& a, const Space& sp) {
    if (!is_koszul_word(a, sp))
        throw DegreeMismatch("koszul_d expects words in coordinates and suspensions");
    Poly out;
    unshuffle(
        a, [](Gen g) { return g.role == Role::Form; },
        [&](int sign, const Monomial& vpart, const Monomial& upart, const mpq_class& c) {
            const auto uw = upart.word();
            const auto vw = vpart.word();
            BiDegree before{0, 0};
            for (std::size_t j = 0; j < uw.size(); ++j) {
                const BiDegree dj = degree(uw[j]);
                bool neg = cross_odd(dj, before);
                before += dj;
                std::vector<Gen> word = vw;
                word.push_back({Role::Form, uw[j].kind, uw[j].index});
                for (std::size_t s = 0; s < uw.size(); ++s)
                    if (s != j) word.push_back(uw[s]);
                Monomial m;
                int sc = sort_word(word, m);
                if (sc == 0) continue;
                if (neg) sc = -sc;
                out.add_term(m, sign * sc * c);
            }
        });
    return out;
}

Poly koszul_h(const Poly& a, const Space& sp) {
    if (!is_koszul_word(a, sp))
        throw DegreeMismatch("koszul_h expects words in coordinates and suspensions");
    Poly out;
    unshuffle(
        a, [](Gen g) { return g.role == Role::Form; },
        [&](int sign, const Monomial& vpart, const Monomial& upart, const mpq_class& c) {
            const auto uw = upart.word();
            const auto vw = vpart.word();
            // suffix degrees of the v-word
            std::vector<BiDegree> suffix(vw.size() + 1, BiDegree{0, 0});
            for (int j = static_cast<int>(vw.size()) - 1; j >= 0; --j)
                suffix[j] = suffix[j + 1] + degree(vw[j]);
            for (std::size_t j = 0; j < vw.size(); ++j) {
                const bool neg = cross_odd(degree(vw[j]), suffix[j + 1]);
                std::vector<Gen> word;
                for (std::size_t t = 0; t < vw.size(); ++t)
                    if (t != j) word.push_back(vw[t]);
                word.push_back({Role::Var, vw[j].kind, vw[j].index});
                for (Gen g : uw) word.push_back(g);
                Monomial m;
                int sc = sort_word(word, m);
                if (sc == 0) continue;
                if (neg) sc = -sc;
                out.add_term(m, sign * sc * c);
            }
        });
    return out;
}

bool koszul_acyclic(const Space& sp, int max_len, std::size_t cap) {
    const std::vector<Gen> uz = coordinates(sp);
    const std::vector<Gen> vz = with_role(uz, Role::Form);

    for (int len = 1; len <= max_len; ++len) {
        // bases of all (p, q) blocks with p + q = len
        std::vector<std::vector<Monomial>> block(len + 1);
        for (int p = 0; p <= len; ++p)
            block[p] = monomials_two_alphabets(vz, p, uz, len - p, cap);

        for (int p = 0; p <= len; ++p) {
            for (const auto& b : block[p]) {
                const Poly e = Poly::term(b, 1);
                if (!koszul_d(koszul_d(e, sp), sp).is_zero()) return false;
                if (!koszul_h(koszul_h(e, sp), sp).is_zero()) return false;
                Poly hom = koszul_d(koszul_h(e, sp), sp) + koszul_h(koszul_d(e, sp), sp);
                if (!(hom - Poly(mpq_class(len)) * e).is_zero()) return false;
            }
        }

        // rank route: homology must vanish at every block
        std::vector<std::size_t> rank_out(len + 2, 0);
        for (int p = 0; p < len; ++p) {
            if (block[p].empty()) continue;
            // d: (p, q) -> (p+1, q-1)
            QMatrix m = operator_matrix([&](const Poly& x) { return koszul_d(x, sp); },
                                        block[p], block[p + 1]);
            rank_out[p] = rank_rref(m);
            if (rank_bareiss(m) != rank_out[p]) return false;
        }
        for (int p = 0; p <= len; ++p) {
            const std::size_t rank_in = p == 0 ? 0 : rank_out[p - 1];
            if (block[p].size() != rank_in + rank_out[p]) return false;
        }
    }
    return true;
}

bool verify_quadratic_duality(int m, int n) {
    const int N = m + n;
    if (N <= 0) return true;
    auto idx = [N](int a, int b) { return a * N + b; };

    // coordinate order: first m even (x / dual xi), last n odd (y / dual eta)
    auto pair_rel = [&](QMatrix& rows, int a, int b, int sgn) {
        QVec v(N * N, 0);
        v[idx(a, b)] += 1;
        v[idx(b, a)] += sgn;
        rows.push_back(std::move(v));
    };
    auto square_rel = [&](QMatrix& rows, int a) {
        QVec v(N * N, 0);
        v[idx(a, a)] = 1;
        rows.push_back(std::move(v));
    };

    // relations of A: x commute, y anticommute and square to zero, x-y commute
    QMatrix rel;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pair_rel(rel, i, j, -1);
    for (int s = m; s < N; ++s) {
        square_rel(rel, s);
        for (int t = s + 1; t < N; ++t) pair_rel(rel, s, t, +1);
    }
    for (int i = 0; i < m; ++i)
        for (int s = m; s < N; ++s) pair_rel(rel, i, s, -1);

    // relations of A^!: xi anticommute and square to zero, eta commute,
    // xi-eta anticommute
    QMatrix dual;
    for (int i = 0; i < m; ++i) {
        square_rel(dual, i);
        for (int j = i + 1; j < m; ++j) pair_rel(dual, i, j, +1);
    }
    for (int s = m; s < N; ++s)
        for (int t = s + 1; t < N; ++t) pair_rel(dual, s, t, -1);
    for (int i = 0; i < m; ++i)
        for (int s = m; s < N; ++s) pair_rel(dual, i, s, +1);

    // R-perp under the plain tensor-square pairing = nullspace of R rows;
    // a zero row keeps the ambient dimension visible when R is empty
    if (rel.empty()) rel.push_back(QVec(N * N, 0));
    const auto perp = nullspace(rel);

    // spans must match: equal ranks and no rank growth on stacking
    QMatrix a = perp;
    const std::size_t ra = a.empty() ? 0 : rank_rref(a);
    QMatrix b = dual;
    const std::size_t rb = rank_rref(b);
    if (ra != rb) return false;
    QMatrix both = perp;
    for (const auto& r : dual) both.push_back(r);
    if (rank_rref(both) != ra) return false;

    // dimension bookkeeping: dim R + dim R-perp = N^2
    QMatrix rcopy = rel;
    return rank_rref(rcopy) + ra == static_cast<std::size_t>(N * N);
}

} // namespace pk
