#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "pk/generators.hpp"

namespace pk {

// Canonical monomial: factors sorted by generator, exponents >= 1,
// odd generators with exponent exactly 1.  The empty list is 1.
struct Monomial {
    std::vector<std::pair<Gen, int>> factors;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    bool is_one() const { return factors.empty(); }

    BiDegree degree() const {
        BiDegree d{0, 0};
        for (const auto& [g, e] : factors) for (int t = 0; t < e; ++t) d += pk::degree(g);
        return d;
    }

    // Total number of letters, counted with multiplicity.
    int length() const {
        int L = 0;
        for (const auto& [g, e] : factors) L += e;
        return L;
    }

    int exponent(Gen g) const {
        for (const auto& [h, e] : factors) if (h == g) return e;
        return 0;
    }

    // Letters in canonical order, repeated with multiplicity.
    std::vector<Gen> word() const {
        std::vector<Gen> w;
        for (const auto& [g, e] : factors) for (int t = 0; t < e; ++t) w.push_back(g);
        return w;
    }

    std::string str() const;
};

// Product of canonical monomials.  Returns the sign in {-1, 0, +1}; the
// sign is 0 exactly when an odd generator would acquire exponent >= 2.
int mul(const Monomial& a, const Monomial& b, Monomial& out);

// Canonicalize a word of letters given in arbitrary order.
int sort_word(const std::vector<Gen>& word, Monomial& out);

} // namespace pk
