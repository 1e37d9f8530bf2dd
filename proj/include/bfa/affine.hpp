#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bfa/gf2.hpp"
#include "bfa/truth_table.hpp"

namespace bfa {

// Invertible affine map phi(x) = Mx + w on F2^n. Invertibility of M is
// checked at construction.
class AffineMap {
public:
    AffineMap(int nvars, std::vector<std::uint32_t> matrix_rows, std::uint32_t translation);

    static AffineMap identity(int nvars);
    static AffineMap random(int nvars, std::mt19937_64& rng);

    int vars() const { return n_; }
    const std::vector<std::uint32_t>& rows() const { return rows_; }
    std::uint32_t translation() const { return w_; }

    std::uint32_t apply(std::uint32_t x) const { return gf2::mat_vec(rows_, x) ^ w_; }
    std::uint32_t apply_linear(std::uint32_t x) const { return gf2::mat_vec(rows_, x); }

    AffineMap inverse() const;

private:
    int n_;
    std::vector<std::uint32_t> rows_;
    std::uint32_t w_;
};

// Table of f(phi(x)). Weight, F(f) and the |Walsh| multiset are invariant.
TruthTable apply_affine(const TruthTable& t, const AffineMap& phi);

}  // namespace bfa
