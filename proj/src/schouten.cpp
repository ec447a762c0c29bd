#include "pk/schouten.hpp"

#include "pk/calculus.hpp"

namespace pk {
namespace {

constexpr BiDegree u{0, 1}; // suspension shift carried by bracket arguments

// One polyvector term split as coefficient * partial letters.
struct VTerm {
    mpq_class c;
    Monomial f;               // Var letters only
    std::vector<Gen> partials; // canonical order, with multiplicity
};

std::vector<VTerm> decompose(const Poly& P, const Space& sp) {
    if (!is_polyvector(P, sp))
        throw DegreeMismatch("Schouten bracket arguments must be polyvectors on " + sp.str());
    std::vector<VTerm> out;
    unshuffle(
        P, [](Gen g) { return g.role == Role::Var; },
        [&](int sign, const Monomial& f, const Monomial& d, const mpq_class& c) {
            out.push_back({sign * c, f, d.word()});
        });
    return out;
}

Gen var_of(Gen partial) { return {Role::Var, partial.kind, partial.index}; }

// First-order atom a * Dbar_A (partial absent on rank-0 coefficients).
struct Atom {
    Poly coeff;
    std::optional<Gen> partial;

    BiDegree plain() const {
        BiDegree d{0, 0};
        if (auto hd = coeff.homogeneous_degree()) d += *hd;
        if (partial) d += degree(*partial);
        return d;
    }

    Poly poly() const {
        return partial ? coeff * Poly::var(*partial) : coeff;
    }
};

// Derived commutator of first-order atoms: the second-order parts cancel
// and [Y, Z] = Y(z-coeff) Dz_B  -  (-1)^{<|Y|+u, |Z|+u>} Z(y-coeff) Dz_A,
// each summand written in that product order.
Poly atom_commutator(const Atom& y, const Atom& z) {
    Poly out;
    if (y.partial) {
        Poly a = y.coeff * dbar(z.coeff, var_of(*y.partial));
        if (z.partial) a = a * Poly::var(*z.partial);
        out += a;
    }
    if (z.partial) {
        Poly b = z.coeff * dbar(y.coeff, var_of(*z.partial));
        if (y.partial) b = b * Poly::var(*y.partial);
        if (!cross_odd(y.plain() + u, z.plain() + u)) b = -b;
        out += b;
    }
    return out;
}

std::vector<Atom> atoms_of(const VTerm& t) {
    std::vector<Atom> atoms;
    Poly f = Poly::term(t.f, t.c);
    if (t.partials.empty()) {
        atoms.push_back({f, std::nullopt});
    } else {
        atoms.push_back({f, t.partials[0]});
        for (std::size_t j = 1; j < t.partials.size(); ++j)
            atoms.push_back({Poly::one(), t.partials[j]});
    }
    return atoms;
}

} // namespace

// Expand both arguments into first-order atoms and apply the two-sided
// Leibniz rule, keeping every atom in place:
//   [P, Q] = sum_{s,t} (-1)^e  Y_{<s} Z_{<t} [Y_s, Z_t] Z_{>t} Y_{>s},
//   e = <sum_{j>s} |Y_j|, |Q|+u>  +  <|Y_s|+u, sum_{i<t} |Z_i|>.
Poly schouten(const Poly& P, const Poly& Q, const Space& sp) {
    Poly out;
    const auto pts = decompose(P, sp);
    const auto qts = decompose(Q, sp);
    for (const auto& pt : pts) {
        const auto ys = atoms_of(pt);
        std::vector<BiDegree> ydeg;
        for (const auto& y : ys) ydeg.push_back(y.plain());
        for (const auto& qt : qts) {
            const auto zs = atoms_of(qt);
            std::vector<BiDegree> zdeg;
            BiDegree qdeg = u;
            for (const auto& z : zs) {
                zdeg.push_back(z.plain());
                qdeg += zdeg.back();
            }

            for (std::size_t s = 0; s < ys.size(); ++s) {
                for (std::size_t t = 0; t < zs.size(); ++t) {
                    Poly c = atom_commutator(ys[s], zs[t]);
                    if (c.is_zero()) continue;
                    BiDegree after_y{0, 0}, before_z{0, 0};
                    for (std::size_t j = s + 1; j < ys.size(); ++j) after_y += ydeg[j];
                    for (std::size_t i = 0; i < t; ++i) before_z += zdeg[i];
                    bool neg = cross_odd(after_y, qdeg) != cross_odd(ydeg[s] + u, before_z);

                    Poly w = Poly::one();
                    for (std::size_t j = 0; j < s; ++j) w = w * ys[j].poly();
                    for (std::size_t i = 0; i < t; ++i) w = w * zs[i].poly();
                    w = w * c;
                    for (std::size_t i = t + 1; i < zs.size(); ++i) w = w * zs[i].poly();
                    for (std::size_t j = s + 1; j < ys.size(); ++j) w = w * ys[j].poly();
                    out += neg ? -w : w;
                }
            }
        }
    }
    return out;
}

// Closed coordinate form of the same bracket, computed term by term with
// flat sign exponents instead of atom commutators.  For one pair of terms
// f D_1..D_p and g E_1..E_q (plain letter degrees d_j = |D_j|, h_i = |E_i|):
//   sum_s (-1)^{m(s)} f D_{<s} (Dbar_{D_s} g) E D_{>s},
//       m(s) = <sum_{j>s} d_j, |Q|+u>;
//   sum_t (-1)^{n(t)} g E_{<t} (Dbar_{E_t} f) D_1 E_{>t} D_{>1},
//       n(t) = 1 + <sum_{j>=2} d_j, |Q|+u> + <|f|+d_1+u, |g|+sum_{i<=t} h_i+u>
// (d_1 dropped from n when p = 0, and then no D letters appear).
Poly schouten_coord(const Poly& P, const Poly& Q, const Space& sp) {
    Poly out;
    const auto pts = decompose(P, sp);
    const auto qts = decompose(Q, sp);
    for (const auto& pt : pts) {
        const std::size_t p = pt.partials.size();
        const BiDegree phi = pt.f.degree();
        std::vector<BiDegree> delta;
        for (Gen d : pt.partials) delta.push_back(degree(d));
        BiDegree delta_tail{0, 0}; // sum over j >= 2
        for (std::size_t j = 1; j < p; ++j) delta_tail += delta[j];
        const BiDegree theta = p ? phi + delta[0] + u : phi + u;

        for (const auto& qt : qts) {
            const std::size_t q = qt.partials.size();
            std::vector<BiDegree> eta;
            BiDegree qdeg = qt.f.degree();
            for (Gen e : qt.partials) {
                eta.push_back(degree(e));
                qdeg += eta.back();
            }
            const mpq_class cc = pt.c * qt.c;

            for (std::size_t s = 0; s < p; ++s) {
                Poly dg = dbar(Poly::term(qt.f, cc), var_of(pt.partials[s]));
                if (dg.is_zero()) continue;
                BiDegree after{0, 0};
                for (std::size_t j = s + 1; j < p; ++j) after += delta[j];
                bool neg = cross_odd(after, qdeg + u);
                Poly w = Poly::term(pt.f, 1);
                for (std::size_t j = 0; j < s; ++j) w = w * Poly::var(pt.partials[j]);
                w = w * dg;
                for (Gen e : qt.partials) w = w * Poly::var(e);
                for (std::size_t j = s + 1; j < p; ++j) w = w * Poly::var(pt.partials[j]);
                out += neg ? -w : w;
            }

            BiDegree gh = qt.f.degree(); // |g| + sum_{i<=t} h_i, updated in the loop
            for (std::size_t t = 0; t < q; ++t) {
                gh += eta[t];
                Poly df = dbar(Poly::term(pt.f, cc), var_of(qt.partials[t]));
                if (df.is_zero()) continue;
                bool neg = !(cross_odd(delta_tail, qdeg + u) != cross_odd(theta, gh + u));
                Poly w = Poly::term(qt.f, 1);
                for (std::size_t i = 0; i < t; ++i) w = w * Poly::var(qt.partials[i]);
                w = w * df;
                if (p) w = w * Poly::var(pt.partials[0]);
                for (std::size_t i = t + 1; i < q; ++i) w = w * Poly::var(qt.partials[i]);
                for (std::size_t j = 1; j < p; ++j) w = w * Poly::var(pt.partials[j]);
                out += neg ? -w : w;
            }
        }
    }
    return out;
}

} // namespace pk
