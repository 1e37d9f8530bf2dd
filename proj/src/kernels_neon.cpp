// NEON kernel backend (aarch64, where NEON is baseline). Vectorizes the
// popcount, XOR and butterfly loops; the bit-permutation kernels fall through
// to the scalar reference, which GCC/Clang auto-vectorize reasonably there.

#include "bfa/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include "kernels_detail.hpp"

namespace bfa::kern {
namespace {

std::uint64_t popcount_neon(const std::uint64_t* words, std::size_t nwords) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        const uint8x16_t v = vld1q_u8(reinterpret_cast<const std::uint8_t*>(words + i));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
    }
    std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < nwords; ++i) total += std::popcount(words[i]);
    return total;
}

void xor_words_neon(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        const uint64x2_t va = vld1q_u64(a + i);
        const uint64x2_t vb = vld1q_u64(b + i);
        vst1q_u64(dst + i, veorq_u64(va, vb));
    }
    for (; i < nwords; ++i) dst[i] = a[i] ^ b[i];
}

void fwht_neon(std::int64_t* a, std::size_t n) {
    if (n < 2) return;
    // h=1 stage on two-lane registers, wider stages as plain vector loops.
    for (std::size_t i = 0; i < n; i += 2) {
        const int64x2_t v = vld1q_s64(a + i);
        const int64x2_t s = vextq_s64(v, v, 1);  // [a1, a0]
        const int64x2_t sum = vaddq_s64(v, s);
        const int64x2_t diff = vsubq_s64(s, v);
        vst1q_s64(a + i, vcombine_s64(vget_low_s64(sum), vget_high_s64(diff)));
    }
    for (std::size_t h = 2; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; j += 2) {
                const int64x2_t x = vld1q_s64(a + j);
                const int64x2_t y = vld1q_s64(a + j + h);
                vst1q_s64(a + j, vaddq_s64(x, y));
                vst1q_s64(a + j + h, vsubq_s64(x, y));
            }
        }
    }
}

std::int64_t max_abs_neon(const std::int64_t* v, std::size_t n) {
    uint64x2_t mx = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const int64x2_t x = vld1q_s64(v + i);
        const uint64x2_t ax = vreinterpretq_u64_s64(vabsq_s64(x));
        mx = vbslq_u64(vcgtq_u64(ax, mx), ax, mx);
    }
    std::uint64_t m = vgetq_lane_u64(mx, 0);
    if (vgetq_lane_u64(mx, 1) > m) m = vgetq_lane_u64(mx, 1);
    for (; i < n; ++i) {
        const std::uint64_t u =
            v[i] < 0 ? 0ull - static_cast<std::uint64_t>(v[i]) : static_cast<std::uint64_t>(v[i]);
        if (u > m) m = u;
    }
    return static_cast<std::int64_t>(m);
}

}  // namespace

const Kernels* neon_kernels() {
    static const Kernels table = {
        "neon",
        popcount_neon,
        xor_words_neon,
        detail::xor_translate_scalar,
        detail::mobius_scalar,
        fwht_neon,
        max_abs_neon,
        detail::sum_pow4_scalar,
    };
    return &table;
}

}  // namespace bfa::kern

#else

namespace bfa::kern {
const Kernels* neon_kernels() { return nullptr; }
}  // namespace bfa::kern

#endif  // __aarch64__
