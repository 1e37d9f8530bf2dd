#pragma once

#include <cstddef>
#include <cstdint>

// Inner-loop kernels behind every exhaustive sweep in the library: packed-word
// popcounts, the XOR-translate t[x] ^ t[x ^ a], the F2 Moebius transform on
// packed truth tables, and the in-place Walsh-Hadamard butterfly on signed
// 64-bit lanes. Each kernel has a scalar reference implementation; an AVX2
// variant (x86-64) and a NEON variant (aarch64) are selected at runtime and
// equivalence-tested against the scalar path.
//
// Conventions shared by all backends:
//  - truth tables are packed LSB-first: bit x of the table lives in
//    words[x >> 6] at bit position (x & 63); unused high bits are zero
//  - fwht/max_abs/sum_pow4 operate on arrays of 2^n int64 lanes
//  - sum_pow4 accumulates v^4 mod 2^64 per lane; exact whenever the true sum
//    fits (always the case for Walsh spectra, where sum v^4 <= 2^(4n))

namespace bfa::kern {

struct Kernels {
    const char* name;

    // Total popcount over nwords packed words.
    std::uint64_t (*popcount)(const std::uint64_t* words, std::size_t nwords);

    // dst[i] = a[i] ^ b[i].
    void (*xor_words)(std::uint64_t* dst, const std::uint64_t* a,
                      const std::uint64_t* b, std::size_t nwords);

    // dst[x] = src[x] ^ src[x ^ a] over bit-indexed tables. dst must not
    // alias src. `a` must be below the table's bit length.
    void (*xor_translate)(std::uint64_t* dst, const std::uint64_t* src,
                          std::size_t nwords, std::uint64_t a);

    // In-place F2 Moebius transform over 2^nvars packed bits (an involution;
    // converts truth table <-> ANF coefficient table).
    void (*mobius)(std::uint64_t* words, std::size_t nwords, int nvars);

    // In-place unnormalized Walsh-Hadamard transform; size is a power of two.
    void (*fwht)(std::int64_t* vals, std::size_t size);

    // max |v| over the array (values must stay clear of INT64_MIN).
    std::int64_t (*max_abs)(const std::int64_t* vals, std::size_t size);

    // sum of v^4 mod 2^64.
    std::uint64_t (*sum_pow4)(const std::int64_t* vals, std::size_t size);
};

const Kernels& scalar_kernels();
const Kernels* avx2_kernels();  // nullptr if not compiled in or CPU lacks AVX2
const Kernels* neon_kernels();  // nullptr off aarch64

// The backend in use; auto-detected on first call (best available wins).
const Kernels& active_kernels();

// Test hook: force a backend by name ("scalar", "avx2", "neon").
// Returns false and leaves the selection unchanged if unavailable.
bool select_backend(const char* name);

}  // namespace bfa::kern
