#pragma once

#include <functional>
#include <map>

#include "pk/poly.hpp"
#include "pk/space.hpp"

namespace pk {

// Graded derivative with respect to the letter g.  As an operator it has
// bi-degree -|g|, so the sign picked up over a prefix of degree D
// is (-1)^{<|g|, D>}.  Works for any role: deriving by a Partial letter
// removes Partial factors from polyvector words.
Poly dbar(const Poly& f, Gen g);

// Generic degree-(0,1) differential: replaces single letters by their
// image under `image`, with sign (-1)^{w(prefix)}.  Letters outside the
// map are annihilated (but still contribute to prefix signs).  Every
// image must have the letter's degree plus (0,1).
Poly graded_d(const Poly& a, const std::map<Gen, Gen>& image);

// de Rham differential on forms: z -> dz for every coordinate.
Poly de_rham_d(const Poly& a, const Space& sp);

// Mixed differential on mixed chains: x -> dx, Dy -> ys on MN,
// eta -> deta, Dxi -> xis on NM.
Poly mixed_d(const Poly& a, const Space& sp);

// Contraction alphabet: which letters act and what they pair with.
enum class Scheme {
    Ordinary, // polyvectors acting on de Rham forms: Dz matches dz
    Mixed     // mixed polyvectors on mixed chains: vector letters match
              // their mixed forms (Dx~dx, y~ys on MN; Deta~deta, xi~xis on NM)
};

// True when g acts as a vector direction under the scheme.
bool is_contraction_vector(Gen g, Scheme scheme, const Space& sp);

// The form letter a vector letter pairs with (kind and index preserved).
Gen paired_form(Gen vector_letter, Scheme scheme, const Space& sp);

// i_P(omega).  Coefficient letters multiply without sign, vector letters
// apply left to right with the rightmost acting first; a rank-0 P just
// multiplies.  A single vector V removes its paired letter at each
// position with sign (-1)^{<|prefix|, |V|>}.
Poly contract(const Poly& P, const Poly& omega, Scheme scheme, const Space& sp);

// Lie derivative L_P = i_P d - (-1)^{w(P)} d i_P for weight-homogeneous
// P (extended additively over the weight decomposition).  `d` is the
// scheme's differential: de Rham for Ordinary, mixed for Mixed.
Poly lie_derivative(const Poly& P, const Poly& omega, Scheme scheme, const Space& sp);

// Splits each term of a canonical monomial into the subword of letters
// satisfying `left` and the complementary subword, with the Koszul sign
// of the unshuffle.  Calls fn(sign, left_part, right_part, coeff).
void unshuffle(
    const Poly& a, const std::function<bool(Gen)>& left,
    const std::function<void(int, const Monomial&, const Monomial&, const mpq_class&)>& fn);

// Letter counters.
int count_role(const Monomial& m, Role r);
bool letters_are(const Poly& a, const std::function<bool(Gen)>& pred);
bool is_polyvector(const Poly& a, const Space& sp);
bool is_form(const Poly& a, const Space& sp);
bool is_mixed_chain(const Poly& a, const Space& sp);

} // namespace pk
