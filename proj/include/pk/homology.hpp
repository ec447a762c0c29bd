#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pk/linalg.hpp"
#include "pk/poisson.hpp"
#include "pk/slices.hpp"

namespace pk {

struct SliceId {
    ComplexKind kind;
    int v = 0;
    int k = 0;
    // Bi-degree refinement; present when the differential is
    // bi-homogeneous (always for chains, for cochains when pi is).
    bool graded = false;
    int p = 0;
    int w = 0;

    friend bool operator==(const SliceId&, const SliceId&) = default;
    friend auto operator<=>(const SliceId&, const SliceId&) = default;

    std::string str() const;
};

struct SliceReport {
    SliceId id;
    std::size_t dim = 0;
    std::size_t rank_in = 0;  // rank of the differential into this slice
    std::size_t rank_out = 0; // rank of the differential out of it
    std::size_t homology_dim = 0;
    bool complete = true; // ranks are exact, never lower bounds
};

// Any linear degree-preserving-by-slices operator on Poly.
using PolyOp = std::function<Poly(const Poly&)>;

// Matrix of op on the given bases: column j = coordinates of op(basis
// monomial j) in target_basis.  Throws DimensionMismatch when the image
// leaves the span of target_basis.
QMatrix operator_matrix(const PolyOp& op,
                        const std::vector<Monomial>& source_basis,
                        const std::vector<Monomial>& target_basis);

// Poisson cohomology dimensions of delta = [-, pi] on all cochain slices
// with v + k <= max_words.  Slices are refined by bi-degree when pi is
// bi-homogeneous.  Both exact rank routines must agree on every matrix.
std::vector<SliceReport> cohomology_dims(
    const QuadraticBivector& pi, int max_words,
    std::size_t cap = default_slice_cap);

// Poisson homology of d_pi on mixed chain slices, v + k <= max_words.
// Requires a restricted bivector.
std::vector<SliceReport> homology_dims(
    const QuadraticBivector& pi, int max_words,
    std::size_t cap = default_slice_cap);

// Is `cocycle` a coboundary (resp. boundary)?  Checks the cocycle
// condition first and throws DegreeMismatch if it fails.  On success
// optionally returns a primitive through `witness`.
bool coboundary_membership(const QuadraticBivector& pi, const Poly& cocycle,
                           Poly* witness = nullptr,
                           std::size_t cap = default_slice_cap);
bool boundary_membership(const QuadraticBivector& pi, const Poly& cycle,
                         Poly* witness = nullptr,
                         std::size_t cap = default_slice_cap);

// Representatives of a basis of the (co)homology of one slice.
std::vector<Poly> class_representatives(const QuadraticBivector& pi,
                                        const SliceId& slice,
                                        std::size_t cap = default_slice_cap);

} // namespace pk
