#include "pk/poisson.hpp"

#include "pk/calculus.hpp"

namespace pk {
namespace {

bool quadratic_bivector_shape(const Poly& pi, const Space& sp) {
    if (!is_polyvector(pi, sp)) return false;
    for (const auto& [m, c] : pi.terms())
        if (count_role(m, Role::Partial) != 2 || count_role(m, Role::Var) != 2) return false;
    return true;
}

} // namespace

bool is_restricted(const Poly& pi, const Space& sp) {
    if (pi.is_zero()) return true;
    if (!quadratic_bivector_shape(pi, sp)) return false;
    const auto d = pi.homogeneous_degree();
    return d && *d == BiDegree{0, -2};
}

QuadraticBivector make_bivector(const Poly& pi, const Space& sp) {
    if (!quadratic_bivector_shape(pi, sp))
        throw RankError("expected a quadratic bivector: two coordinates and two partials per term");
    return {sp, pi, is_restricted(pi, sp)};
}

Poly poisson_bracket_fn(const QuadraticBivector& pi, const Poly& f, const Poly& g) {
    const auto fn = [&](const Poly& a) {
        return letters_are(a, [&](Gen h) { return valid_gen(pi.space, h) && h.role == Role::Var; });
    };
    if (!fn(f) || !fn(g))
        throw DegreeMismatch("poisson_bracket_fn arguments must be coordinate polynomials");
    const Poly two_form = de_rham_d(f, pi.space) * de_rham_d(g, pi.space);
    return contract(pi.value, two_form, Scheme::Ordinary, pi.space);
}

bool is_poisson(const QuadraticBivector& pi) {
    return schouten(pi.value, pi.value, pi.space).is_zero();
}

bool is_poisson_coeff(const QuadraticBivector& pi) {
    for (const auto& [m, c] : pi.value.terms())
        if (m.degree().p & 1)
            throw DegreeMismatch(
                "coefficient Jacobi oracle is stated for even-parity bivector terms");
    const auto zs = coordinates(pi.space);
    const int n = static_cast<int>(zs.size());

    // omega[i][j] = {z_i, z_j}
    std::vector<std::vector<Poly>> omega(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            omega[i][j] = poisson_bracket_fn(pi, Poly::var(zs[i]), Poly::var(zs[j]));

    auto third = [&](int a, int b, int c) {
        // (-1)^{<|z_a|,|z_c|>} sum_i omega^{ai} Dbar_{z_i} omega^{bc}
        Poly acc;
        for (int i = 0; i < n; ++i) {
            if (omega[a][i].is_zero()) continue;
            acc += omega[a][i] * dbar(omega[b][c], zs[i]);
        }
        return cross_odd(degree(zs[a]), degree(zs[c])) ? -acc : acc;
    };

    for (int j = 0; j < n; ++j)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                Poly jac = third(j, s, t) + third(s, t, j) + third(t, j, s);
                if (!jac.is_zero()) return false;
            }
    return true;
}

Poly poisson_coboundary(const QuadraticBivector& pi, const Poly& P) {
    return schouten(P, pi.value, pi.space);
}

Poly poisson_boundary(const QuadraticBivector& pi, const Poly& a) {
    if (!pi.restricted)
        throw NotRestricted("poisson_boundary needs a restricted quadratic bivector");
    if (!is_mixed_chain(a, pi.space))
        throw DegreeMismatch("poisson_boundary acts on mixed chains");
    const Space& sp = pi.space;
    return contract(pi.value, mixed_d(a, sp), Scheme::Mixed, sp) -
           mixed_d(contract(pi.value, a, Scheme::Mixed, sp), sp);
}

} // namespace pk
