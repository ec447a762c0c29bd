#pragma once

#include <random>

#include "pk/poly.hpp"
#include "pk/space.hpp"

namespace pk {

// Deterministic sampling helpers for property tests; all draws come from
// one seeded engine so runs are reproducible.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(unsigned seed) : eng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    mpq_class coeff(int bound = 4) {
        int v = uniform(-bound, bound);
        return mpq_class(v == 0 ? 1 : v);
    }
};

// Random canonical monomial with v Var letters and k Partial letters.
Monomial random_cochain_monomial(Rng& rng, const Space& sp, int v, int k);

// Random mixed chain monomial with v coefficient letters and k form letters.
Monomial random_chain_monomial(Rng& rng, const Space& sp, int v, int k);

// Random polyvector supported on a (v, k) slice with <= terms terms.
Poly random_polyvector(Rng& rng, const Space& sp, int v, int k, int terms);

// Same, restricted to one bi-degree (that of the first sampled term).
Poly random_homogeneous_polyvector(Rng& rng, const Space& sp, int v, int k, int terms);

Poly random_mixed_chain(Rng& rng, const Space& sp, int v, int k, int terms);

// Random quadratic bivector; restricted ones are bi-homogeneous of
// degree (0, -2).
Poly random_quadratic_bivector(Rng& rng, const Space& sp, int terms, bool restricted);

} // namespace pk
