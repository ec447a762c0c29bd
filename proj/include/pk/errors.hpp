#pragma once

#include <stdexcept>
#include <string>

namespace pk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in incompatible bi-degrees or different spaces.
struct DegreeMismatch : Error { using Error::Error; };

// A bivector (or polyvector) does not have the rank an operation requires.
struct RankError : Error { using Error::Error; };

// Operation requires a restricted quadratic bivector and got a general one.
struct NotRestricted : Error { using Error::Error; };

// Operation requires [pi,pi] = 0 and the input fails it.
struct NotPoisson : Error { using Error::Error; };

// Operation requires a unimodular structure and the input fails it.
struct NotUnimodular : Error { using Error::Error; };

// A graded slice exceeds the configured basis cap.
struct SliceTooLarge : Error { using Error::Error; };

// Vector/matrix dimensions disagree in an exact linear-algebra routine.
struct DimensionMismatch : Error { using Error::Error; };

// Expression text that the grammar rejects.
struct ParseError : Error { using Error::Error; };

// Generator or operation not defined on the requested space.
struct UnsupportedSpace : Error { using Error::Error; };

} // namespace pk
