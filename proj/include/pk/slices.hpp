#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "pk/monomial.hpp"
#include "pk/space.hpp"

namespace pk {

// Cochain slices live in the polyvector algebra and count (Var letters,
// Partial letters).  Chain slices live in the mixed chain algebra and
// count (coefficient letters, form letters).
enum class ComplexKind : unsigned char { Cochain = 0, Chain = 1 };

inline const char* complex_kind_name(ComplexKind k) {
    return k == ComplexKind::Cochain ? "cochain" : "chain";
}

inline constexpr std::size_t default_slice_cap = 20000;

// All canonical monomials with the given letter counts; refined to one
// bi-degree when `deg` is set.  Throws SliceTooLarge past `cap`.
std::vector<Monomial> slice_basis(
    const Space& sp, ComplexKind kind, int v, int k,
    std::optional<BiDegree> deg = std::nullopt,
    std::size_t cap = default_slice_cap);

// Bi-degrees occurring in the (v, k) slice, sorted.
std::vector<BiDegree> slice_degrees(const Space& sp, ComplexKind kind, int v, int k);

// Canonical monomials with exactly c1 letters from alpha1 and c2 from
// alpha2 (disjoint alphabets, odd letters at most once each).
std::vector<Monomial> monomials_two_alphabets(
    std::vector<Gen> alpha1, int c1, std::vector<Gen> alpha2, int c2,
    std::size_t cap = default_slice_cap);

// Closed-form dimension of a full chain slice: the coefficient alphabet
// is all even and the form alphabet all odd, so this is
// multichoose(m+n, v) * binom(m+n, k).
mpz_class chain_slice_count(const Space& sp, int v, int k);

mpz_class binom(int n, int k);
mpz_class multichoose(int n, int k);

} // namespace pk
