#pragma once

#include "pk/poisson.hpp"
#include "pk/poly.hpp"
#include "pk/space.hpp"

namespace pk {

// The canonical top mixed form: dx_1..dx_m ys_1..ys_n on MN,
// deta_1..deta_n xis_1..xis_m on NM.  Bi-degree (-n, m) resp. (-m, n).
Poly volume_form(const Space& sp);

// Poincare duality PD(P) = i_P(volume): a signed monomial bijection from
// polyvectors onto mixed chains.
Poly pd_map(const Poly& P, const Space& sp);

// Exact inverse, solved class by class (monomials grouped by their
// letter counts per alphabet block, where PD restricts to a square
// invertible matrix).
Poly pd_inverse(const Poly& a, const Space& sp);

// d_pi(volume) == 0.
bool unimodular(const QuadraticBivector& pi);

// BV operator Delta = (-1)^{w(a)+1} PD^{-1} d~ PD(a) on weight-
// homogeneous a, extended additively.  Delta^2 = 0 and Delta(1) = 0.
Poly bv_delta(const Poly& a, const Space& sp);

// Defect of the bracket generator identity
//   [a,b] = (-1)^{w(b)} Delta(a^b) - Delta(a)^b - (-1)^{w(b)} a^Delta(b)
// for weight-homogeneous a, b; identically zero at chain level.
Poly bv_defect(const Poly& a, const Poly& b, const Space& sp);

// Checks, on random polyvector samples:
//   - Delta^2 = 0 and Delta(1) = 0,
//   - the bracket defect vanishes (hence is a coboundary for any pi),
//   - Delta is a derivation of the bracket:
//       Delta[a,b] = [a, Delta b] - (-1)^{w(b)} [Delta a, b],
//   - Delta commutes with dual_transport_cochain,
//   - Delta keeps delta_pi-cocycles cocycles, so it descends to Poisson
//     cohomology.  The last point is the unimodularity gate: it fails
//     frequently when pi is not unimodular, all else being pi-independent.
bool bv_identity_check(const QuadraticBivector& pi, unsigned seed, int samples);

// Differential-calculus identities on random samples:
//   (i)   [P^Q, R] = P^[Q, R] + (-1)^{<|P|,|Q|>} Q^[P, R]
//         (wedge-bracket Leibniz in the form used by the cup product),
//   (ii)  i_{P^Q} = i_P i_Q on mixed chains,
//   (iii) i_{[P,Q]} = [[i_P, d~], i_Q] (mixed Cartan formula),
//   (iv)  PD^{-1}(i_P(PD(Q))) = P^Q,
// then re-runs all four on the transported samples (contraction_dual for
// polyvectors, dual_transport_chain for chains) and requires the dual
// side to reach the same verdicts.
bool dc_identity_check(const Space& sp, unsigned seed, int samples);

} // namespace pk
