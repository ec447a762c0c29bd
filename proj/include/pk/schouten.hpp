#pragma once

#include "pk/poly.hpp"
#include "pk/space.hpp"

namespace pk {

// Schouten-Nijenhuis bracket of polyvectors, computed by splitting each
// term into its first coefficient-carrying factor and the remaining bare
// partials and letting the derived first-order commutator act.  This is
// the reference route.
Poly schouten(const Poly& P, const Poly& Q, const Space& sp);

// Same bracket through the closed coordinate formula
//   [P,Q] = sum_s (-1)^{mu(s)} f (Dbar_{D_s} g) D_{!=s} E
//         + sum_t (-1)^{nu(t)} g (Dbar_{E_t} f) D E_{!=t}
// on terms P = f D_1..D_p, Q = g E_1..E_q.  Implemented independently of
// the reference route so the two can cross-check each other.
Poly schouten_coord(const Poly& P, const Poly& Q, const Space& sp);

} // namespace pk
