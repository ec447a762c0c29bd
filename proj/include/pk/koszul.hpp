#pragma once

#include "pk/poly.hpp"
#include "pk/space.hpp"

namespace pk {

// Coordinate correspondence between the two sides, degree-preserving:
//   x_i <-> Dxi_i,  Dx_i <-> xi_i,  y_j <-> Deta_j,  Dy_j <-> eta_j,
//   dx_i <-> xis_i, ys_j <-> deta_j.
Gen dual_gen(Gen g, Side from);

// Degree-preserving algebra isomorphism on polyvectors; swaps the slice
// indices (v, k) -> (k, v).  Involutive.  This is the map that defines the
// dual bivector: it preserves the Poisson property.
Poly koszul_dual(const Poly& a, const Space& sp);

// Variant of koszul_dual matched to the mixed contraction: each NM-side
// monomial (input or output) also picks up (-1)^{number of xi coordinate
// letters}, the letters that act by contraction in the mixed scheme there.
// Involutive.  Satisfies, for the chain companion F below,
//   F(contract(P, w)) = contract(contraction_dual(P), F(w))
// and hence intertwines the Poisson boundaries of pi and
// contraction_dual(pi) exactly.  Agrees with koszul_dual whenever neither
// side of the correspondence carries xi coordinate letters.
Poly contraction_dual(const Poly& a, const Space& sp);

// Sign-twisted variant of koszul_dual: each term also picks up
// (-1)^{number of letters of bi-degree (0,-1)} (Dx on one side, xi on the
// other).  This is the cochain map: it intertwines the Poisson coboundary
// of any restricted bivector pi with that of dual_transport_cochain(pi).
// The twist and the plain map agree whenever the argument has no letters
// of bi-degree (0,-1), in particular on every bivector built purely from
// the odd coordinate family.  Involutive algebra map.
Poly dual_transport_cochain(const Poly& a, const Space& sp);

// Companion isomorphism on mixed chains; preserves (v, k).  Involutive.
Poly dual_transport_chain(const Poly& a, const Space& sp);

// Koszul complex of the side in suspended form: words mix coordinates z
// (Var letters) with their suspensions sz, represented by the Form
// letters dz (same bi-degree (p, w+1)).
//   d(v-word, u-word) = sum_j +- (v-word ^ su_j, u-word \ u_j)
//   h(v-word, u-word) = sum_j +- (v-word \ v_j, s^{-1}v_j ^ u-word)
// satisfy d^2 = 0, h^2 = 0 and dh + hd = (p+q) id on words with p
// suspended and q plain letters.
Poly koszul_d(const Poly& a, const Space& sp);
Poly koszul_h(const Poly& a, const Space& sp);

// Exhaustively checks, for every word length 1 <= L <= max_len: d^2 = 0,
// dh + hd = L id on the full slice basis, and rank-computed homology 0
// at every (p, q) with p + q = L.  Throws SliceTooLarge past cap.
bool koszul_acyclic(const Space& sp, int max_len, std::size_t cap = 20000);

// The quadratic relation spaces of the two sides are each other's
// annihilators under the tensor-square pairing <a (x) b, c* (x) d*> =
// <a,c*><b,d*>.  Verified by exact row reduction on (m+n)^2 coordinates.
bool verify_quadratic_duality(int m, int n);

} // namespace pk
