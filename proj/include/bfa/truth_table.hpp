#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bfa/error.hpp"

namespace bfa {

// Evaluation table of a Boolean function on n variables, word-packed with 64
// points per machine word. Point x encodes (x_1,...,x_n) with x_1 as the
// least significant bit; bit i of the index corresponds to variable x_{i+1}.
// Immutable in spirit: every operation returns a fresh table.
class TruthTable {
public:
    static constexpr int kMaxVars = 24;

    explicit TruthTable(int nvars);
    TruthTable(int nvars, std::vector<std::uint64_t> words);

    static TruthTable from_bits(int nvars, const std::vector<std::uint8_t>& bits);

    int vars() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }
    std::size_t word_count() const { return words_.size(); }
    std::span<const std::uint64_t> words() const { return words_; }
    std::uint64_t* data() { return words_.data(); }

    bool get(std::uint32_t x) const {
        return (words_[x >> 6] >> (x & 63)) & 1u;
    }
    void set(std::uint32_t x, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (x & 63);
        if (v)
            words_[x >> 6] |= bit;
        else
            words_[x >> 6] &= ~bit;
    }

    std::uint64_t weight() const;
    bool balanced() const { return weight() == size() / 2; }
    // F(f) = 2^n - 2 w(f); zero exactly for balanced functions.
    std::int64_t fourier() const {
        return static_cast<std::int64_t>(size()) - 2 * static_cast<std::int64_t>(weight());
    }

    bool constant_zero() const;
    bool constant_one() const;
    bool is_constant() const { return constant_zero() || constant_one(); }

    // D_a f with (D_a f)(x) = f(x + a) + f(x).
    TruthTable derivative(std::uint32_t a) const;
    // D_b D_a f; symmetric in (a, b), identically zero when a == b.
    TruthTable second_derivative(std::uint32_t a, std::uint32_t b) const;

    // Degree of the ANF (0 for both constants).
    int algebraic_degree() const;

    TruthTable operator^(const TruthTable& other) const;
    TruthTable& operator^=(const TruthTable& other);
    TruthTable complemented() const;

    bool operator==(const TruthTable&) const = default;

private:
    void check_point(std::uint32_t x) const;

    int n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace bfa
