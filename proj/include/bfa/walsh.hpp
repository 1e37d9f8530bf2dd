#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bfa/truth_table.hpp"

namespace bfa {

// Walsh spectrum of a Boolean function: W_f(a) = sum_x (-1)^(f(x) + a.x),
// indexed like truth-table points. Values are 64-bit so downstream moment
// accumulations can reuse the type.
class WalshSpectrum {
public:
    WalshSpectrum(int nvars, std::vector<std::int64_t> values);

    int vars() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }
    std::span<const std::int64_t> values() const { return values_; }
    std::int64_t operator[](std::uint32_t a) const { return values_[a]; }

private:
    int n_;
    std::vector<std::int64_t> values_;
};

// In-place butterfly on a scratch copy, O(n 2^n). values[0] equals F(f).
WalshSpectrum wht(const TruthTable& t);

// L(f) = max |W_f(a)|.
std::int64_t linearity(const WalshSpectrum& s);
// N(f) = 2^(n-1) - L(f)/2.
std::int64_t nonlinearity(const WalshSpectrum& s);
std::int64_t nonlinearity(const TruthTable& t);

// n must be even / odd respectively; a parity mismatch is an error, not false.
bool is_bent(const TruthTable& t);
bool is_semi_bent(const TruthTable& t);

}  // namespace bfa
