#pragma once

#include "pk/poly.hpp"
#include "pk/schouten.hpp"
#include "pk/space.hpp"

namespace pk {

// Quadratic bivector: every term is (coordinate)*(coordinate)*Dz*Dz'.
// `restricted` additionally means bi-homogeneous of total degree (0,-2);
// the weight is -2 automatically, so this is a parity condition.
struct QuadraticBivector {
    Space space;
    Poly value;
    bool restricted = false;
};

// Validates the quadratic bivector shape; throws RankError otherwise.
QuadraticBivector make_bivector(const Poly& pi, const Space& sp);

bool is_restricted(const Poly& pi, const Space& sp);

// {f, g} = i_pi(df ^ dg) for functions f, g (no Partial/Form letters).
Poly poisson_bracket_fn(const QuadraticBivector& pi, const Poly& f, const Poly& g);

// [pi, pi] == 0 through the Schouten bracket.
bool is_poisson(const QuadraticBivector& pi);

// Independent Jacobi check on the coefficient matrix
// omega^{ij} = {z_i, z_j}: for all (j,s,t)
//   sum_cyc (-1)^{<|z_j|,|z_t|>} omega^{ji} Dbar_{z_i} omega^{st} = 0.
// Valid for bivectors whose terms all have even parity (restricted ones
// always do); throws DegreeMismatch on odd-parity terms, where this
// identity would need parity-dependent corrections.
bool is_poisson_coeff(const QuadraticBivector& pi);

// delta = [ -, pi ]: cochain differential on polyvectors, (v,k) -> (v+1,k+1).
Poly poisson_coboundary(const QuadraticBivector& pi, const Poly& P);

// d_pi = i_pi d~ - d~ i_pi: chain differential on mixed chains,
// (v,k) -> (v+1,k-1).  Requires a restricted bivector.
Poly poisson_boundary(const QuadraticBivector& pi, const Poly& a);

} // namespace pk
