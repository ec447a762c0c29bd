#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace pk {

using QVec = std::vector<mpq_class>;
using QMatrix = std::vector<QVec>; // row major, rows of equal length

// Rank by Gauss-Jordan elimination over Q.
std::size_t rank_rref(QMatrix a);

// Rank by Bareiss fraction-free elimination over Z after clearing row
// denominators.  Independent of rank_rref on purpose.
std::size_t rank_bareiss(const QMatrix& a);

// Reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(QMatrix& a);

// One solution of A x = b, or nullopt when inconsistent.
std::optional<QVec> solve(QMatrix a, QVec b);

// Basis of the right nullspace of A.
std::vector<QVec> nullspace(QMatrix a);

} // namespace pk
