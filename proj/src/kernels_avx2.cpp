// AVX2 kernel backend. This translation unit is compiled with -mavx2 and only
// on x86-64; the dispatcher checks CPU support at runtime before handing out
// the table. Every kernel falls back to the scalar path for arrays below one
// vector (4 words / 4 lanes).

#include "bfa/kernels.hpp"

#ifdef __AVX2__

#include <immintrin.h>

#include "kernels_detail.hpp"

namespace bfa::kern {
namespace {

using detail::kNegMask;

inline std::uint64_t hsum_epi64(__m256i v) {
    const __m128i lo = _mm256_castsi256_si128(v);
    const __m128i hi = _mm256_extracti128_si256(v, 1);
    const __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

// 64x64 -> low 64 multiply per lane (AVX2 has no mullo_epi64).
inline __m256i mullo_epi64(__m256i a, __m256i b) {
    const __m256i a_hi = _mm256_srli_epi64(a, 32);
    const __m256i b_hi = _mm256_srli_epi64(b, 32);
    const __m256i ll = _mm256_mul_epu32(a, b);
    const __m256i lh = _mm256_mul_epu32(a, b_hi);
    const __m256i hl = _mm256_mul_epu32(a_hi, b);
    const __m256i cross = _mm256_add_epi64(lh, hl);
    return _mm256_add_epi64(ll, _mm256_slli_epi64(cross, 32));
}

inline __m256i abs_epi64(__m256i v) {
    const __m256i sign = _mm256_cmpgt_epi64(_mm256_setzero_si256(), v);
    return _mm256_sub_epi64(_mm256_xor_si256(v, sign), sign);
}

std::uint64_t popcount_avx2(const std::uint64_t* words, std::size_t nwords) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_nibble = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        const __m256i lo = _mm256_and_si256(v, low_nibble);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibble);
        const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                            _mm256_shuffle_epi8(lut, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; i < nwords; ++i) total += std::popcount(words[i]);
    return total;
}

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(va, vb));
    }
    for (; i < nwords; ++i) dst[i] = a[i] ^ b[i];
}

void xor_translate_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords,
                        std::uint64_t a) {
    if (nwords < 4) {
        detail::xor_translate_scalar(dst, src, nwords, a);
        return;
    }
    // nwords is a power of two here, so four-word blocks always stay in range.
    const std::uint64_t lo = a & 63u;
    const std::size_t hi = static_cast<std::size_t>(a >> 6);
    const std::size_t hi_block = hi & ~std::size_t{3};
    const unsigned lane = static_cast<unsigned>(hi & 3);

    // Hoist the per-bit (shift, mask) pairs of the in-word permutation.
    int shifts[6];
    __m256i negs[6];
    __m256i poss[6];
    int nsteps = 0;
    for (std::uint64_t t = lo; t != 0; t &= t - 1) {
        const int j = std::countr_zero(t);
        shifts[nsteps] = 1 << j;
        negs[nsteps] = _mm256_set1_epi64x(static_cast<long long>(kNegMask[j]));
        poss[nsteps] = _mm256_set1_epi64x(static_cast<long long>(~kNegMask[j]));
        ++nsteps;
    }

    for (std::size_t i = 0; i < nwords; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + (i ^ hi_block)));
        switch (lane) {
            case 1: v = _mm256_permute4x64_epi64(v, _MM_SHUFFLE(2, 3, 0, 1)); break;
            case 2: v = _mm256_permute4x64_epi64(v, _MM_SHUFFLE(1, 0, 3, 2)); break;
            case 3: v = _mm256_permute4x64_epi64(v, _MM_SHUFFLE(0, 1, 2, 3)); break;
            default: break;
        }
        for (int s = 0; s < nsteps; ++s) {
            const __m256i right = _mm256_and_si256(_mm256_srli_epi64(v, shifts[s]), negs[s]);
            const __m256i left = _mm256_and_si256(_mm256_slli_epi64(v, shifts[s]), poss[s]);
            v = _mm256_or_si256(right, left);
        }
        const __m256i orig = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(orig, v));
    }
}

void mobius_avx2(std::uint64_t* words, std::size_t nwords, int nvars) {
    if (nwords < 4) {
        detail::mobius_scalar(words, nwords, nvars);
        return;
    }
    const int in_word = nvars < 6 ? nvars : 6;
    for (int j = 0; j < in_word; ++j) {
        const int s = 1 << j;
        const __m256i neg = _mm256_set1_epi64x(static_cast<long long>(kNegMask[j]));
        std::size_t i = 0;
        for (; i + 4 <= nwords; i += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
            v = _mm256_xor_si256(v, _mm256_slli_epi64(_mm256_and_si256(v, neg), s));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(words + i), v);
        }
        for (; i < nwords; ++i) words[i] ^= (words[i] & kNegMask[j]) << s;
    }
    for (int j = 6; j < nvars; ++j) {
        const std::size_t step = std::size_t{1} << (j - 6);
        for (std::size_t base = 0; base < nwords; base += 2 * step) {
            std::size_t t = 0;
            for (; t + 4 <= step; t += 4) {
                const __m256i lo =
                    _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + base + t));
                __m256i hi = _mm256_loadu_si256(
                    reinterpret_cast<const __m256i*>(words + base + step + t));
                hi = _mm256_xor_si256(hi, lo);
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(words + base + step + t), hi);
            }
            for (; t < step; ++t) words[base + step + t] ^= words[base + t];
        }
    }
}

void fwht_avx2(std::int64_t* a, std::size_t n) {
    if (n < 4) {
        detail::fwht_scalar(a, n);
        return;
    }
    // Stages h=1 and h=2 run in-register on each block of four lanes.
    for (std::size_t i = 0; i < n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i s = _mm256_permute4x64_epi64(v, _MM_SHUFFLE(2, 3, 0, 1));
        __m256i sum = _mm256_add_epi64(v, s);
        __m256i diff = _mm256_sub_epi64(s, v);
        v = _mm256_blend_epi32(sum, diff, 0xCC);
        s = _mm256_permute4x64_epi64(v, _MM_SHUFFLE(1, 0, 3, 2));
        sum = _mm256_add_epi64(v, s);
        diff = _mm256_sub_epi64(s, v);
        v = _mm256_blend_epi32(sum, diff, 0xF0);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), v);
    }
    for (std::size_t h = 4; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; j += 4) {
                const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j));
                const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j + h));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + j), _mm256_add_epi64(x, y));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + j + h),
                                    _mm256_sub_epi64(x, y));
            }
        }
    }
}

std::int64_t max_abs_avx2(const std::int64_t* v, std::size_t n) {
    __m256i mx = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = abs_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
        mx = _mm256_blendv_epi8(mx, x, _mm256_cmpgt_epi64(x, mx));
    }
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), mx);
    std::int64_t m = 0;
    for (const std::int64_t lane : lanes)
        if (lane > m) m = lane;
    for (; i < n; ++i) {
        const std::int64_t u = v[i] < 0 ? -v[i] : v[i];
        if (u > m) m = u;
    }
    return m;
}

std::uint64_t sum_pow4_avx2(const std::int64_t* v, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        const __m256i sq = mullo_epi64(x, x);
        acc = _mm256_add_epi64(acc, mullo_epi64(sq, sq));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; i < n; ++i) {
        const std::uint64_t sq =
            static_cast<std::uint64_t>(v[i]) * static_cast<std::uint64_t>(v[i]);
        total += sq * sq;
    }
    return total;
}

}  // namespace

const Kernels* avx2_kernels() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Kernels table = {
        "avx2",        popcount_avx2, xor_words_avx2, xor_translate_avx2,
        mobius_avx2,   fwht_avx2,     max_abs_avx2,   sum_pow4_avx2,
    };
    return &table;
}

}  // namespace bfa::kern

#else

namespace bfa::kern {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace bfa::kern

#endif  // __AVX2__
