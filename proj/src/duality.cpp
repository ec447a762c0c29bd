#include "pk/duality.hpp"

#include <array>
#include <map>

#include "pk/calculus.hpp"
#include "pk/homology.hpp"
#include "pk/koszul.hpp"
#include "pk/random.hpp"
#include "pk/slices.hpp"

namespace pk {

Poly volume_form(const Space& sp) {
    std::vector<Gen> letters = mixed_form_gens(sp);
    Monomial m;
    const int s = sort_word(letters, m);
    return Poly::term(m, s);
}

Poly pd_map(const Poly& P, const Space& sp) {
    if (!is_polyvector(P, sp))
        throw DegreeMismatch("pd_map expects a polyvector on " + sp.str());
    return contract(P, volume_form(sp), Scheme::Mixed, sp);
}

namespace {

std::vector<Gen> family(const Space& sp, Role r, Kind k) {
    std::vector<Gen> out;
    for (int i = 1; i <= count_of(sp, k); ++i) out.push_back({r, k, i});
    return out;
}

// letter counts (#Var-even, #Partial-odd, #Form-even, #Star-odd) of a
// mixed chain monomial; PD restricts to a square block per value
std::array<int, 4> chain_class(const Monomial& m, Kind e, Kind o) {
    std::array<int, 4> c{0, 0, 0, 0};
    for (const auto& [g, ex] : m.factors) {
        if (g.role == Role::Var && g.kind == e) c[0] += ex;
        else if (g.role == Role::Partial && g.kind == o) c[1] += ex;
        else if (g.role == Role::Form && g.kind == e) c[2] += ex;
        else c[3] += ex; // Star letters of the odd kind
    }
    return c;
}

std::vector<Monomial> combine(const std::vector<Monomial>& lhs, const std::vector<Monomial>& rhs) {
    std::vector<Monomial> out;
    out.reserve(lhs.size() * rhs.size());
    Monomial prod;
    for (const auto& a : lhs)
        for (const auto& b : rhs) {
            if (mul(a, b, prod) != 0) out.push_back(prod);
        }
    return out;
}

} // namespace

Poly pd_inverse(const Poly& a, const Space& sp) {
    if (!is_mixed_chain(a, sp))
        throw DegreeMismatch("pd_inverse expects a mixed chain on " + sp.str());
    const Kind e = even_kind(sp.side), o = odd_kind(sp.side);
    const int me = count_of(sp, e), no = count_of(sp, o);

    std::map<std::array<int, 4>, Poly> classes;
    for (const auto& [m, c] : a.terms()) classes[chain_class(m, e, o)].add_term(m, c);

    const PolyOp op = [&sp](const Poly& p) { return pd_map(p, sp); };
    Poly out;
    for (auto& [key, comp] : classes) {
        // source polyvector class hitting this chain class
        const int va = key[0], po = key[1], fe = key[2], so = key[3];
        const auto src = combine(
            monomials_two_alphabets(family(sp, Role::Var, e), va,
                                    family(sp, Role::Var, o), no - so),
            monomials_two_alphabets(family(sp, Role::Partial, e), me - fe,
                                    family(sp, Role::Partial, o), po));
        const auto tgt = combine(
            monomials_two_alphabets(family(sp, Role::Var, e), va,
                                    family(sp, Role::Partial, o), po),
            monomials_two_alphabets(family(sp, Role::Form, e), fe,
                                    family(sp, Role::Star, o), so));
        QMatrix m = operator_matrix(op, src, tgt);

        QVec rhs(tgt.size(), 0);
        {
            std::map<Monomial, std::size_t> index;
            for (std::size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = i;
            for (const auto& [mono, c] : comp.terms()) {
                auto it = index.find(mono);
                if (it == index.end())
                    throw DimensionMismatch("pd_inverse: monomial outside its class basis");
                rhs[it->second] = c;
            }
        }
        const auto sol = solve(std::move(m), std::move(rhs));
        if (!sol) throw DimensionMismatch("pd_inverse: element is not in the image of pd_map");
        for (std::size_t j = 0; j < src.size(); ++j) out.add_term(src[j], (*sol)[j]);
    }
    return out;
}

bool unimodular(const QuadraticBivector& pi) {
    return poisson_boundary(pi, volume_form(pi.space)).is_zero();
}

Poly bv_delta(const Poly& a, const Space& sp) {
    Poly even, odd; // by weight parity
    for (const auto& [m, c] : a.terms())
        ((m.degree().w & 1) ? odd : even).add_term(m, c);
    Poly out;
    if (!even.is_zero()) out -= pd_inverse(mixed_d(pd_map(even, sp), sp), sp);
    if (!odd.is_zero()) out += pd_inverse(mixed_d(pd_map(odd, sp), sp), sp);
    return out;
}

Poly bv_defect(const Poly& a, const Poly& b, const Space& sp) {
    Poly defect;
    Poly beven, bodd;
    for (const auto& [m, c] : b.terms())
        ((m.degree().w & 1) ? bodd : beven).add_term(m, c);
    const Poly da = bv_delta(a, sp);
    for (int par = 0; par < 2; ++par) {
        const Poly& bp = par ? bodd : beven;
        if (bp.is_zero()) continue;
        const int sgn = par ? -1 : 1; // (-1)^{w(b)}
        Poly rhs = mpq_class(sgn) * bv_delta(a * bp, sp);
        rhs -= da * bp;
        rhs -= mpq_class(sgn) * (a * bv_delta(bp, sp));
        defect += schouten(a, bp, sp) - rhs;
    }
    return defect;
}

bool bv_identity_check(const QuadraticBivector& pi, unsigned seed, int samples) {
    const Space& sp = pi.space;
    Rng rng(seed);
    if (!bv_delta(Poly::one(), sp).is_zero()) return false;

    for (int it = 0; it < samples; ++it) {
        const int va = rng.uniform(0, 2), ka = rng.uniform(0, 2);
        const int vb = rng.uniform(0, 2), kb = rng.uniform(0, 2);
        const Poly a = random_polyvector(rng, sp, va, ka, 2);
        const Poly b = random_polyvector(rng, sp, vb, kb, 2);

        if (!bv_delta(bv_delta(a, sp), sp).is_zero()) return false;

        const Poly defect = bv_defect(a, b, sp);
        if (!defect.is_zero()) return false;
        if (!coboundary_membership(pi, defect)) return false;

        // Delta is a derivation of the bracket (split b by weight parity)
        Poly beven, bodd;
        for (const auto& [m, c] : b.terms())
            ((m.degree().w & 1) ? bodd : beven).add_term(m, c);
        for (int par = 0; par < 2; ++par) {
            const Poly& bp = par ? bodd : beven;
            if (bp.is_zero()) continue;
            const int sgn = par ? -1 : 1; // (-1)^{w(b)}
            Poly lhs = bv_delta(schouten(a, bp, sp), sp);
            Poly rhs = schouten(a, bv_delta(bp, sp), sp) -
                       mpq_class(sgn) * schouten(bv_delta(a, sp), bp, sp);
            if (!(lhs - rhs).is_zero()) return false;
        }

        // Delta commutes with the cochain transport
        const Poly lhs = dual_transport_cochain(bv_delta(a, sp), sp);
        const Poly rhs = bv_delta(dual_transport_cochain(a, sp), sp.dual());
        if (!(lhs - rhs).is_zero()) return false;

        // Delta keeps delta_pi-cocycles cocycles.  Everything above is
        // pi-independent; this is the part unimodularity buys, and it fails
        // frequently when pi is not unimodular.
        const Poly cocycle = poisson_coboundary(pi, a);
        const Poly img = bv_delta(cocycle, sp);
        if (!poisson_coboundary(pi, img).is_zero()) return false;
    }
    return true;
}

namespace {

// The calculus identities on one homogeneous sample: (i) wedge-bracket
// Leibniz, (ii) contraction multiplicativity, (iii) mixed Cartan,
// (iv) compatibility of the bracket with PD through contraction.
bool calculus_identities(const Poly& p, const Poly& q, const Poly& r, const Poly& c,
                         const Space& sp) {
    if (p.is_zero() || q.is_zero() || r.is_zero()) return true;
    const BiDegree dp = *p.homogeneous_degree();
    const BiDegree dq = *q.homogeneous_degree();

    // (i)
    {
        const Poly lhs = schouten(p * q, r, sp);
        Poly rhs = p * schouten(q, r, sp);
        Poly second = q * schouten(p, r, sp);
        if (cross_odd(dp, dq)) second = -second;
        rhs += second;
        if (!(lhs - rhs).is_zero()) return false;
    }

    // (ii)
    {
        const Poly lhs = contract(p * q, c, Scheme::Mixed, sp);
        const Poly rhs = contract(p, contract(q, c, Scheme::Mixed, sp), Scheme::Mixed, sp);
        if (!(lhs - rhs).is_zero()) return false;
    }

    // (iii)
    {
        const Poly lhs = contract(schouten(p, q, sp), c, Scheme::Mixed, sp);
        Poly rhs = lie_derivative(p, contract(q, c, Scheme::Mixed, sp), Scheme::Mixed, sp);
        Poly second = contract(q, lie_derivative(p, c, Scheme::Mixed, sp), Scheme::Mixed, sp);
        if (cross_odd(dp + BiDegree{0, 1}, dq)) second = -second;
        rhs -= second;
        if (!(lhs - rhs).is_zero()) return false;
    }

    // (iv)
    {
        const Poly lhs = pd_inverse(contract(p, pd_map(q, sp), Scheme::Mixed, sp), sp);
        if (!(lhs - p * q).is_zero()) return false;
    }
    return true;
}

} // namespace

bool dc_identity_check(const Space& sp, unsigned seed, int samples) {
    Rng rng(seed);
    const Space dsp = sp.dual();
    for (int it = 0; it < samples; ++it) {
        const Poly p = random_homogeneous_polyvector(rng, sp, rng.uniform(0, 2), rng.uniform(0, 2), 2);
        const Poly q = random_homogeneous_polyvector(rng, sp, rng.uniform(0, 2), rng.uniform(0, 2), 2);
        const Poly r = random_homogeneous_polyvector(rng, sp, rng.uniform(0, 2), rng.uniform(0, 2), 2);
        const Poly c = random_mixed_chain(rng, sp, rng.uniform(0, 2), rng.uniform(0, 2), 2);

        if (!calculus_identities(p, q, r, c, sp)) return false;

        // the transported samples must reach the same verdict on the dual side
        if (!calculus_identities(contraction_dual(p, sp), contraction_dual(q, sp),
                                 contraction_dual(r, sp), dual_transport_chain(c, sp), dsp))
            return false;
    }
    return true;
}

} // namespace pk
