#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bfa {

// Dense linear algebra over F2 for dimensions up to 32; rows are bitmasks
// (bit j = column j). Everything here is Gaussian elimination in one guise
// or another.
namespace gf2 {

int rank(std::vector<std::uint32_t> rows, int ncols);

// Basis of the null space {x : Mx = 0}.
std::vector<std::uint32_t> null_space(const std::vector<std::uint32_t>& rows, int ncols);

// Inverse of a square matrix, or nullopt if singular.
std::optional<std::vector<std::uint32_t>> invert(const std::vector<std::uint32_t>& rows, int n);

// y = Mx over F2 (rows dotted with x).
std::uint32_t mat_vec(const std::vector<std::uint32_t>& rows, std::uint32_t x);

// Reduce a spanning set to an independent basis (row-echelon pivots).
std::vector<std::uint32_t> row_basis(const std::vector<std::uint32_t>& vectors, int ncols);

inline int dot(std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a & b) & 1; }

}  // namespace gf2
}  // namespace bfa
