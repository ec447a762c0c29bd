#include "pk/calculus.hpp"

namespace pk {

Poly dbar(const Poly& f, Gen g) {
    const BiDegree dg = degree(g);
    Poly out;
    for (const auto& [m, c] : f.terms()) {
        const auto w = m.word();
        BiDegree prefix{0, 0};
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == g) {
                std::vector<Gen> rest;
                rest.reserve(w.size() - 1);
                for (std::size_t t = 0; t < w.size(); ++t)
                    if (t != i) rest.push_back(w[t]);
                Monomial mm;
                sort_word(rest, mm); // already sorted, sign +1
                out.add_term(mm, cross_odd(dg, prefix) ? -c : c);
            }
            prefix += degree(w[i]);
        }
    }
    return out;
}

Poly graded_d(const Poly& a, const std::map<Gen, Gen>& image) {
    Poly out;
    for (const auto& [m, c] : a.terms()) {
        const auto w = m.word();
        int wpar = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            auto it = image.find(w[i]);
            if (it != image.end()) {
                std::vector<Gen> repl = w;
                repl[i] = it->second;
                Monomial mm;
                int s = sort_word(repl, mm);
                if (s != 0) out.add_term(mm, (wpar & 1) ? -s * c : s * c);
            }
            wpar += degree(w[i]).w;
        }
    }
    return out;
}

Poly de_rham_d(const Poly& a, const Space& sp) {
    std::map<Gen, Gen> image;
    for (Gen z : coordinates(sp)) image[z] = Gen{Role::Form, z.kind, z.index};
    return graded_d(a, image);
}

Poly mixed_d(const Poly& a, const Space& sp) {
    std::map<Gen, Gen> image;
    const auto coeffs = mixed_coeff_gens(sp);
    const auto forms = mixed_form_gens(sp);
    for (std::size_t i = 0; i < coeffs.size(); ++i) image[coeffs[i]] = forms[i];
    return graded_d(a, image);
}

bool is_contraction_vector(Gen g, Scheme scheme, const Space& sp) {
    if (scheme == Scheme::Ordinary) return g.role == Role::Partial;
    if (sp.side == Side::MN)
        return (g.role == Role::Partial && g.kind == Kind::X) ||
               (g.role == Role::Var && g.kind == Kind::Y);
    return (g.role == Role::Partial && g.kind == Kind::Eta) ||
           (g.role == Role::Var && g.kind == Kind::Xi);
}

Gen paired_form(Gen v, Scheme scheme, const Space& sp) {
    if (!is_contraction_vector(v, scheme, sp))
        throw DegreeMismatch("not a vector letter under this scheme: " + name(v));
    if (scheme == Scheme::Ordinary || v.role == Role::Partial)
        return {Role::Form, v.kind, v.index};
    return {Role::Star, v.kind, v.index};
}

namespace {

Poly contract_single(Gen v, const Poly& omega, Scheme scheme, const Space& sp) {
    const Gen target = paired_form(v, scheme, sp);
    const BiDegree dv = degree(v);
    // Mixed pairing on NM: <xi*, xi> = -1; all other pairings are +1. The sign
    // is forced by [[i_P, d], i_Q] = i_{[P,Q]} holding on both sides at once.
    const bool flip =
        scheme == Scheme::Mixed && v.role == Role::Var && v.kind == Kind::Xi;
    Poly out;
    for (const auto& [m, c] : omega.terms()) {
        const auto w = m.word();
        BiDegree prefix{0, 0};
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == target) {
                std::vector<Gen> rest;
                rest.reserve(w.size() - 1);
                for (std::size_t t = 0; t < w.size(); ++t)
                    if (t != i) rest.push_back(w[t]);
                Monomial mm;
                sort_word(rest, mm);
                out.add_term(mm, (cross_odd(prefix, dv) != flip) ? -c : c);
            }
            prefix += degree(w[i]);
        }
    }
    return out;
}

} // namespace

void unshuffle(
    const Poly& a, const std::function<bool(Gen)>& left,
    const std::function<void(int, const Monomial&, const Monomial&, const mpq_class&)>& fn) {
    for (const auto& [m, c] : a.terms()) {
        std::vector<Gen> lw, rw;
        BiDegree rdeg{0, 0};
        bool odd = false;
        for (Gen g : m.word()) {
            if (left(g)) {
                if (cross_odd(degree(g), rdeg)) odd = !odd;
                lw.push_back(g);
            } else {
                rdeg += degree(g);
                rw.push_back(g);
            }
        }
        Monomial lm, rm;
        sort_word(lw, lm);
        sort_word(rw, rm);
        fn(odd ? -1 : 1, lm, rm, c);
    }
}

Poly contract(const Poly& P, const Poly& omega, Scheme scheme, const Space& sp) {
    Poly out;
    unshuffle(
        P, [&](Gen g) { return !is_contraction_vector(g, scheme, sp); },
        [&](int sign, const Monomial& coeff_part, const Monomial& vec_part, const mpq_class& c) {
            Poly cur = omega;
            const auto vw = vec_part.word();
            for (auto it = vw.rbegin(); it != vw.rend() && !cur.is_zero(); ++it)
                cur = contract_single(*it, cur, scheme, sp);
            out += Poly::term(coeff_part, sign * c) * cur;
        });
    return out;
}

Poly lie_derivative(const Poly& P, const Poly& omega, Scheme scheme, const Space& sp) {
    Poly even, odd;
    for (const auto& [m, c] : P.terms())
        ((m.degree().w & 1) ? odd : even).add_term(m, c);
    auto d = [&](const Poly& a) {
        return scheme == Scheme::Ordinary ? de_rham_d(a, sp) : mixed_d(a, sp);
    };
    Poly out;
    if (!even.is_zero())
        out += contract(even, d(omega), scheme, sp) - d(contract(even, omega, scheme, sp));
    if (!odd.is_zero())
        out += contract(odd, d(omega), scheme, sp) + d(contract(odd, omega, scheme, sp));
    return out;
}

int count_role(const Monomial& m, Role r) {
    int c = 0;
    for (const auto& [g, e] : m.factors)
        if (g.role == r) c += e;
    return c;
}

bool letters_are(const Poly& a, const std::function<bool(Gen)>& pred) {
    for (const auto& [m, c] : a.terms())
        for (const auto& [g, e] : m.factors)
            if (!pred(g)) return false;
    return true;
}

bool is_polyvector(const Poly& a, const Space& sp) {
    return letters_are(a, [&](Gen g) {
        return valid_gen(sp, g) && (g.role == Role::Var || g.role == Role::Partial);
    });
}

bool is_form(const Poly& a, const Space& sp) {
    return letters_are(a, [&](Gen g) {
        return valid_gen(sp, g) && (g.role == Role::Var || g.role == Role::Form);
    });
}

bool is_mixed_chain(const Poly& a, const Space& sp) {
    return letters_are(a, [&](Gen g) {
        if (!valid_gen(sp, g)) return false;
        if (sp.side == Side::MN)
            return (g.kind == Kind::X && (g.role == Role::Var || g.role == Role::Form)) ||
                   (g.kind == Kind::Y && (g.role == Role::Partial || g.role == Role::Star));
        return (g.kind == Kind::Eta && (g.role == Role::Var || g.role == Role::Form)) ||
               (g.kind == Kind::Xi && (g.role == Role::Partial || g.role == Role::Star));
    });
}

} // namespace pk
