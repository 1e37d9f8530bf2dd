#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bfa/anf.hpp"
#include "bfa/quadratic.hpp"

namespace bfa {

// ---------------------------------------------------------------------------
// Splitting identities
// ---------------------------------------------------------------------------

// F(f) of f = g(x_1..x_s) + h(x_{s+1}..x_n) as the product F(g|)F(h|) of the
// restrictions to their own blocks.
std::int64_t split_fourier(const Anf& g, const Anf& h);

// Closed-form weight of the same direct sum:
// 2^(n-s) w(g|) + 2^s w(h|) - 2 w(g|) w(h|).
std::int64_t split_weight(const Anf& g, const Anf& h);

// F(f) for f = sum of parts on pairwise-disjoint variable blocks inside
// F2^n: 2^(n-r) * prod F(f_i|), r = total support size. Parts with
// overlapping supports are rejected.
std::int64_t multi_split_fourier(std::span<const Anf> parts, int n);

// Weight of the sum of k disjoint AND-blocks of m variables each:
// 2^(n-1) - 2^(n-mk-1) (2^m - 2)^k. Balanced only for m = 1.
std::int64_t monomial_sum_weight(int m, int k, int n);

// Nonlinearity of the same function; requires m > 1.
std::int64_t monomial_sum_nl(int m, int k, int n);

// ---------------------------------------------------------------------------
// Generalized convolutional products  f = (x_1..x_m) g' + (1 + x_1..x_m) h'
// ---------------------------------------------------------------------------

// w(f) = (2^m - 1) w(h|) + w(g|).
std::int64_t genconv_weight(const Anf& g, const Anf& h, int m);

// f balanced  <=>  (2^m - 1) F(h|) + F(g|) = 0.
bool genconv_balanced(const Anf& g, const Anf& h, int m);

// Walsh value of f at alpha = (a, b) split over the pivot block and the
// function block:
//   a = 0:  (2^m - 1) W_h(b) + W_g(b)
//   else :  (-1)^(a_1+..+a_m) (W_g(b) - W_h(b))
std::int64_t genconv_walsh(const Anf& g, const Anf& h, int m, std::uint32_t a, std::uint32_t b);

// Lower bound N(f) >= (2^m - 1) N(h|) + N(g|).
std::int64_t genconv_nl_bound(const Anf& g, const Anf& h, int m);

// ---------------------------------------------------------------------------
// The m = 1 cubic case table
// ---------------------------------------------------------------------------

enum class ConvPartKind { Zero, One, Balanced, QuadPlus, QuadMinus };

// Classification of one branch of the convolutional product: constant,
// balanced, or unbalanced quadratic with rank parameter k. `k` is also set
// for balanced quadratics (their nonlinearity needs it); -1 otherwise.
struct ConvPartClass {
    ConvPartKind kind = ConvPartKind::Zero;
    int degree = 0;
    int k = -1;
};

ConvPartClass classify_conv_part(const Anf& f);

// Weight of the part as a function on n variables.
std::int64_t conv_part_weight(const ConvPartClass& c, int n);
// Nonlinearity of the part (0 for affine parts).
std::int64_t conv_part_nl(const ConvPartClass& c, int n);

// One row of the weight case table for f = x_{n+1} g + (1 + x_{n+1}) h with
// deg(g), deg(h) <= 2. `k` is h's rank parameter, `l` is g's (-1 when the
// part is not an unbalanced quadratic).
struct CubicWeightCase {
    std::string row;
    int k = -1;
    int l = -1;
};

// Weight of the assembled (n+1)-variable function plus the case-table row it
// falls under. Requires deg(g), deg(h) <= 2.
std::pair<std::int64_t, CubicWeightCase> cubic_conv_weight(const Anf& g, const Anf& h);

// Balanced iff both parts are balanced or the parts' weights sum to 2^n
// (an equivalent-complement pair of unbalanced quadratics, or 0 against 1).
bool cubic_conv_balanced(const Anf& g, const Anf& h);

// Lower bound on N(f) for the m = 1 case: N(g|) + N(h|) from the part
// classifications.
std::int64_t cubic_nl_bound(const ConvPartClass& g, const ConvPartClass& h, int n);
std::int64_t cubic_nl_bound(const Anf& g, const Anf& h);

// ---------------------------------------------------------------------------
// Recursive weight of cubic functions
// ---------------------------------------------------------------------------

struct Algorithm1Node {
    int vars = 0;        // ambient variable count at this node
    int pivot = 0;       // pivot variable; 0 for closed-form leaves
    std::string branch;  // "table", "recurse" or "closed-form"
    std::string row;     // case-table row / part kind for leaf nodes
    std::int64_t weight = 0;
};

struct Algorithm1Trace {
    std::vector<Algorithm1Node> nodes;
};

// Weight of a cubic function by recursive decomposition f = x_p g + h with a
// quadratic cofactor g: resolve via the case table once deg(h) <= 2,
// otherwise recurse on g+h and h and add. The pivot is the lowest-indexed
// variable in a cubic monomial; shared subfunctions are memoized within one
// invocation. Requires deg(f) = 3.
std::int64_t algorithm1_weight(const Anf& f);
std::int64_t algorithm1_weight(const Anf& f, Algorithm1Trace& trace);

}  // namespace bfa
