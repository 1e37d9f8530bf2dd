#include "bfa/splitcubic.hpp"

#include <bit>
#include <map>

#include "bfa/walsh.hpp"

namespace bfa {
namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

}  // namespace

std::int64_t split_fourier(const Anf& g, const Anf& h) {
    return g.to_table().fourier() * h.to_table().fourier();
}

std::int64_t split_weight(const Anf& g, const Anf& h) {
    const int s = g.vars();
    const int m = h.vars();
    const std::int64_t wg = static_cast<std::int64_t>(g.to_table().weight());
    const std::int64_t wh = static_cast<std::int64_t>(h.to_table().weight());
    return pow2(m) * wg + pow2(s) * wh - 2 * wg * wh;
}

std::int64_t multi_split_fourier(std::span<const Anf> parts, int n) {
    if (n < 1 || n > TruthTable::kMaxVars) throw Error("variable count out of range");
    std::uint32_t seen = 0;
    int r = 0;
    std::int64_t product = 1;
    for (const Anf& part : parts) {
        if (part.vars() > n) throw Error("part declared on more variables than n");
        const std::uint32_t sup = part.support();
        if (sup & seen) throw Error("parts must use pairwise-disjoint variable blocks");
        seen |= sup;
        r += std::popcount(sup);
        if (sup == 0)
            product *= part.constant_term() ? -1 : 1;
        else
            product *= part.compacted().to_table().fourier();
    }
    if (r > n) throw Error("blocks exceed the ambient variable count");
    return pow2(n - r) * product;
}

std::int64_t monomial_sum_weight(int m, int k, int n) {
    if (m < 1 || k < 1) throw Error("block size and count must be positive");
    if (m * k > n) throw Error("mk must not exceed n");
    std::int64_t f = pow2(n - m * k);
    for (int i = 0; i < k; ++i) f *= pow2(m) - 2;
    return pow2(n - 1) - f / 2;
}

std::int64_t monomial_sum_nl(int m, int k, int n) {
    if (m <= 1) throw Error("nonlinearity form requires m > 1");
    return monomial_sum_weight(m, k, n);
}

std::int64_t genconv_weight(const Anf& g, const Anf& h, int m) {
    if (m < 1) throw Error("pivot block size must be positive");
    if (g.vars() != h.vars()) throw Error("g and h must share the variable count");
    const std::int64_t wg = static_cast<std::int64_t>(g.to_table().weight());
    const std::int64_t wh = static_cast<std::int64_t>(h.to_table().weight());
    return (pow2(m) - 1) * wh + wg;
}

bool genconv_balanced(const Anf& g, const Anf& h, int m) {
    if (m < 1) throw Error("pivot block size must be positive");
    if (g.vars() != h.vars()) throw Error("g and h must share the variable count");
    return (pow2(m) - 1) * h.to_table().fourier() + g.to_table().fourier() == 0;
}

std::int64_t genconv_walsh(const Anf& g, const Anf& h, int m, std::uint32_t a, std::uint32_t b) {
    if (m < 1) throw Error("pivot block size must be positive");
    if (g.vars() != h.vars()) throw Error("g and h must share the variable count");
    if (a >= (std::uint32_t{1} << m)) throw Error("pivot-block point out of range");
    const WalshSpectrum wg = wht(g.to_table());
    const WalshSpectrum wh = wht(h.to_table());
    if (a == 0) return (pow2(m) - 1) * wh[b] + wg[b];
    const int lambda = std::popcount(a) & 1;
    const std::int64_t diff = wg[b] - wh[b];
    return lambda ? -diff : diff;
}

std::int64_t genconv_nl_bound(const Anf& g, const Anf& h, int m) {
    if (m < 1) throw Error("pivot block size must be positive");
    if (g.vars() != h.vars()) throw Error("g and h must share the variable count");
    return (pow2(m) - 1) * nonlinearity(h.to_table()) + nonlinearity(g.to_table());
}

ConvPartClass classify_conv_part(const Anf& f) {
    ConvPartClass out;
    out.degree = f.degree();
    if (out.degree > 2) throw Error("convolutional part must have degree <= 2");
    if (f.is_constant()) {
        out.kind = f.is_zero() ? ConvPartKind::Zero : ConvPartKind::One;
        return out;
    }
    if (out.degree <= 1) {
        out.kind = ConvPartKind::Balanced;
        return out;
    }
    const QuadraticClass qc = classify_quadratic(f);
    out.k = qc.k;
    switch (qc.kind) {
        case QuadKind::Balanced: out.kind = ConvPartKind::Balanced; break;
        case QuadKind::UnbalancedPlus: out.kind = ConvPartKind::QuadPlus; break;
        case QuadKind::UnbalancedMinus: out.kind = ConvPartKind::QuadMinus; break;
    }
    return out;
}

std::int64_t conv_part_weight(const ConvPartClass& c, int n) {
    switch (c.kind) {
        case ConvPartKind::Zero: return 0;
        case ConvPartKind::One: return pow2(n);
        case ConvPartKind::Balanced: return pow2(n - 1);
        case ConvPartKind::QuadPlus: return pow2(n - 1) - pow2(n - c.k - 1);
        case ConvPartKind::QuadMinus: return pow2(n - 1) + pow2(n - c.k - 1);
    }
    return 0;
}

std::int64_t conv_part_nl(const ConvPartClass& c, int n) {
    if (c.degree <= 1) return 0;
    return pow2(n - 1) - pow2(n - c.k - 1);
}

namespace {

bool part_constant(const ConvPartClass& c) {
    return c.kind == ConvPartKind::Zero || c.kind == ConvPartKind::One;
}

bool part_unbal_quad(const ConvPartClass& c) {
    return c.kind == ConvPartKind::QuadPlus || c.kind == ConvPartKind::QuadMinus;
}

std::string case_row(const ConvPartClass& g, const ConvPartClass& h) {
    const bool gb = g.kind == ConvPartKind::Balanced;
    const bool hb = h.kind == ConvPartKind::Balanced;
    if (gb && hb) return "both-balanced";
    if ((hb && g.kind == ConvPartKind::Zero) || (gb && h.kind == ConvPartKind::Zero))
        return "balanced-and-zero";
    if ((hb && g.kind == ConvPartKind::One) || (gb && h.kind == ConvPartKind::One))
        return "balanced-and-one";
    if (part_unbal_quad(h) && g.kind == ConvPartKind::Zero) return "h-unbalanced-quadratic-g-zero";
    if (part_unbal_quad(h) && g.kind == ConvPartKind::One) return "h-unbalanced-quadratic-g-one";
    if (h.kind == ConvPartKind::Zero && part_unbal_quad(g)) return "h-zero-g-unbalanced-quadratic";
    if (h.kind == ConvPartKind::One && part_unbal_quad(g)) return "h-one-g-unbalanced-quadratic";
    if (part_unbal_quad(h) && gb) return "h-unbalanced-quadratic-g-balanced";
    if (hb && part_unbal_quad(g)) return "h-balanced-g-unbalanced-quadratic";
    if (h.kind == ConvPartKind::QuadPlus && g.kind == ConvPartKind::QuadPlus)
        return "h-plus-g-plus";
    if (h.kind == ConvPartKind::QuadMinus && g.kind == ConvPartKind::QuadMinus)
        return "h-minus-g-minus";
    if (h.kind == ConvPartKind::QuadMinus && g.kind == ConvPartKind::QuadPlus)
        return "h-minus-g-plus";
    if (h.kind == ConvPartKind::QuadPlus && g.kind == ConvPartKind::QuadMinus)
        return "h-plus-g-minus";
    // Both parts constant: the assembled function is affine, outside the
    // theorem's hypothesis but still covered by the weight sum.
    if (part_constant(g) && part_constant(h)) return "both-constant";
    return "unclassified";
}

}  // namespace

std::pair<std::int64_t, CubicWeightCase> cubic_conv_weight(const Anf& g, const Anf& h) {
    if (g.vars() != h.vars()) throw Error("g and h must share the variable count");
    const int n = g.vars();
    const ConvPartClass cg = classify_conv_part(g);
    const ConvPartClass ch = classify_conv_part(h);
    CubicWeightCase kase;
    kase.row = case_row(cg, ch);
    if (part_unbal_quad(ch)) kase.k = ch.k;
    if (part_unbal_quad(cg)) kase.l = cg.k;
    return {conv_part_weight(cg, n) + conv_part_weight(ch, n), std::move(kase)};
}

bool cubic_conv_balanced(const Anf& g, const Anf& h) {
    if (g.vars() != h.vars()) throw Error("g and h must share the variable count");
    const int n = g.vars();
    const ConvPartClass cg = classify_conv_part(g);
    const ConvPartClass ch = classify_conv_part(h);
    return conv_part_weight(cg, n) + conv_part_weight(ch, n) == pow2(n);
}

std::int64_t cubic_nl_bound(const ConvPartClass& g, const ConvPartClass& h, int n) {
    return conv_part_nl(g, n) + conv_part_nl(h, n);
}

std::int64_t cubic_nl_bound(const Anf& g, const Anf& h) {
    if (g.vars() != h.vars()) throw Error("g and h must share the variable count");
    return cubic_nl_bound(classify_conv_part(g), classify_conv_part(h), g.vars());
}

namespace {

using MemoKey = std::pair<int, std::vector<std::uint32_t>>;
using Memo = std::map<MemoKey, std::int64_t>;

const char* part_label(const ConvPartClass& c) {
    switch (c.kind) {
        case ConvPartKind::Zero: return "constant-zero";
        case ConvPartKind::One: return "constant-one";
        case ConvPartKind::Balanced: return c.degree == 2 ? "balanced-quadratic" : "balanced-affine";
        case ConvPartKind::QuadPlus: return "quadratic-plus";
        case ConvPartKind::QuadMinus: return "quadratic-minus";
    }
    return "";
}

int lowest_cubic_pivot(const Anf& f) {
    int pivot = 0;
    for (const std::uint32_t m : f.monomials()) {
        if (std::popcount(m) != 3) continue;
        const int v = std::countr_zero(m) + 1;
        if (pivot == 0 || v < pivot) pivot = v;
    }
    return pivot;
}

std::int64_t algorithm1_rec(const Anf& f, Memo& memo, Algorithm1Trace* trace) {
    const MemoKey key{f.vars(), f.monomials()};
    if (const auto it = memo.find(key); it != memo.end()) return it->second;

    std::int64_t w = 0;
    const int deg = f.degree();
    if (deg <= 2) {
        const ConvPartClass c = classify_conv_part(f);
        w = conv_part_weight(c, f.vars());
        if (trace) trace->nodes.push_back({f.vars(), 0, "closed-form", part_label(c), w});
    } else {
        const int pivot = lowest_cubic_pivot(f);
        auto [g, h] = f.pivot_split(pivot);
        const Anf gh = g + h;
        if (h.degree() <= 2) {
            auto [weight, kase] = cubic_conv_weight(gh, h);
            w = weight;
            if (trace) trace->nodes.push_back({f.vars(), pivot, "table", kase.row, w});
        } else {
            w = algorithm1_rec(gh, memo, trace) + algorithm1_rec(h, memo, trace);
            if (trace) trace->nodes.push_back({f.vars(), pivot, "recurse", "", w});
        }
    }
    memo.emplace(key, w);
    return w;
}

}  // namespace

std::int64_t algorithm1_weight(const Anf& f) {
    if (f.degree() != 3) throw Error("the recursive weight algorithm requires a cubic input");
    Memo memo;
    return algorithm1_rec(f, memo, nullptr);
}

std::int64_t algorithm1_weight(const Anf& f, Algorithm1Trace& trace) {
    if (f.degree() != 3) throw Error("the recursive weight algorithm requires a cubic input");
    Memo memo;
    return algorithm1_rec(f, memo, &trace);
}

}  // namespace bfa
