#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

// Scalar reference implementations, shared so that the SIMD backends can fall
// back to them for sizes below their vector width.

namespace bfa::kern::detail {

// kNegMask[j]: bits whose index has bit j clear (the x_{j+1}=0 half of a word).
inline constexpr std::uint64_t kNegMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

// Permute the bits of w by p -> p ^ t for t < 64.
inline std::uint64_t permute_bits_xor(std::uint64_t w, std::uint64_t t) {
    while (t != 0) {
        const int j = std::countr_zero(t);
        const std::uint64_t s = 1ull << j;
        const std::uint64_t neg = kNegMask[j];
        w = ((w >> s) & neg) | ((w << s) & ~neg);
        t &= t - 1;
    }
    return w;
}

inline std::uint64_t popcount_scalar(const std::uint64_t* words, std::size_t nwords) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i) total += std::popcount(words[i]);
    return total;
}

inline void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* a,
                             const std::uint64_t* b, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] = a[i] ^ b[i];
}

inline void xor_translate_scalar(std::uint64_t* dst, const std::uint64_t* src,
                                 std::size_t nwords, std::uint64_t a) {
    const std::uint64_t lo = a & 63u;
    const std::size_t hi = static_cast<std::size_t>(a >> 6);
    for (std::size_t i = 0; i < nwords; ++i) {
        dst[i] = src[i] ^ permute_bits_xor(src[i ^ hi], lo);
    }
}

inline void mobius_scalar(std::uint64_t* words, std::size_t nwords, int nvars) {
    const int in_word = nvars < 6 ? nvars : 6;
    for (int j = 0; j < in_word; ++j) {
        const std::uint64_t s = 1ull << j;
        const std::uint64_t neg = kNegMask[j];
        for (std::size_t i = 0; i < nwords; ++i) words[i] ^= (words[i] & neg) << s;
    }
    for (int j = 6; j < nvars; ++j) {
        const std::size_t step = std::size_t{1} << (j - 6);
        for (std::size_t base = 0; base < nwords; base += 2 * step)
            for (std::size_t t = 0; t < step; ++t)
                words[base + step + t] ^= words[base + t];
    }
}

inline void fwht_scalar(std::int64_t* a, std::size_t n) {
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int64_t x = a[j];
                const std::int64_t y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
}

inline std::int64_t max_abs_scalar(const std::int64_t* v, std::size_t n) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t u =
            v[i] < 0 ? 0ull - static_cast<std::uint64_t>(v[i]) : static_cast<std::uint64_t>(v[i]);
        if (u > m) m = u;
    }
    return static_cast<std::int64_t>(m);
}

inline std::uint64_t sum_pow4_scalar(const std::int64_t* v, std::size_t n) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t sq = static_cast<std::uint64_t>(v[i]) * static_cast<std::uint64_t>(v[i]);
        acc += sq * sq;
    }
    return acc;
}

}  // namespace bfa::kern::detail
