#include "bfa/quadratic.hpp"

#include <bit>

#include "bfa/gf2.hpp"

namespace bfa {
namespace {

constexpr int kLinearSpaceScanCap = 12;

}  // namespace

BilinearRank bilinear_rank(const Anf& f) {
    if (f.degree() > 2) throw Error("bilinear form requires degree <= 2");
    const int n = f.vars();
    std::vector<std::uint32_t> rows(n, 0);
    for (const std::uint32_t m : f.monomials()) {
        if (std::popcount(m) != 2) continue;
        const int i = std::countr_zero(m);
        const int j = 31 - std::countl_zero(m);
        rows[i] |= std::uint32_t{1} << j;
        rows[j] |= std::uint32_t{1} << i;
    }
    BilinearRank out;
    out.k = gf2::rank(rows, n) / 2;
    out.radical = gf2::null_space(rows, n);
    return out;
}

LinearSpaceBasis linear_space(const TruthTable& t) {
    const Anf f = Anf::from_table(t);
    LinearSpaceBasis out;
    if (f.degree() <= 2) {
        // V(f) is exactly the radical of the bilinear form; D_a f is then the
        // constant f(a) + f(0).
        const BilinearRank br = bilinear_rank(f);
        const bool f0 = f.evaluate(0);
        out.basis = br.radical;
        for (const std::uint32_t a : out.basis)
            out.constants.push_back(static_cast<std::uint8_t>(f.evaluate(a) ^ f0));
        return out;
    }
    if (t.vars() > kLinearSpaceScanCap)
        throw CapExceeded("linear-space scan is capped at n <= " +
                          std::to_string(kLinearSpaceScanCap) + " for degree > 2");
    std::vector<std::uint32_t> members;
    std::vector<std::uint8_t> member_value;
    for (std::uint32_t a = 1; a < t.size(); ++a) {
        const TruthTable d = t.derivative(a);
        if (d.constant_zero()) {
            members.push_back(a);
            member_value.push_back(0);
        } else if (d.constant_one()) {
            members.push_back(a);
            member_value.push_back(1);
        }
    }
    out.basis = gf2::row_basis(members, t.vars());
    for (const std::uint32_t a : out.basis) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i] == a) {
                out.constants.push_back(member_value[i]);
                break;
            }
        }
    }
    return out;
}

namespace {

// Split off the affine cofactors of x_i and x_j: f = x_i x_j + x_i A + x_j B + C
// with A, B, C free of both variables. The linear coefficient of x_i lands in
// A's constant term (x_i * 1), and likewise for x_j.
void cofactor_split(const Anf& f, int i, int j, Anf& a_out, Anf& b_out, Anf& c_out) {
    const int n = f.vars();
    const std::uint32_t bi = std::uint32_t{1} << i;
    const std::uint32_t bj = std::uint32_t{1} << j;
    std::vector<std::uint32_t> am, bm, cm;
    for (const std::uint32_t m : f.monomials()) {
        if (m == (bi | bj)) continue;
        if (m & bi)
            am.push_back(m & ~bi);
        else if (m & bj)
            bm.push_back(m & ~bj);
        else
            cm.push_back(m);
    }
    a_out = Anf(n, std::move(am));
    b_out = Anf(n, std::move(bm));
    c_out = Anf(n, std::move(cm));
}

// Dickson-style reduction: repeatedly pull out one hyperbolic pair
// x_i x_j via the substitution (x_i, x_j) <- (x_i + B, x_j + A), leaving
// C + A*B on the remaining variables. Returns the affine residual and the
// number of pairs extracted.
std::pair<Anf, int> reduce_to_affine(Anf f) {
    int steps = 0;
    for (;;) {
        std::uint32_t quad = 0;
        for (const std::uint32_t m : f.monomials())
            if (std::popcount(m) == 2) {
                quad = m;
                break;
            }
        if (quad == 0) break;
        const int i = std::countr_zero(quad);
        const int j = 31 - std::countl_zero(quad);
        Anf a(f.vars()), b(f.vars()), c(f.vars());
        cofactor_split(f, i, j, a, b, c);
        f = c + a * b;
        ++steps;
    }
    return {std::move(f), steps};
}

}  // namespace

QuadraticClass classify_quadratic(const Anf& f) {
    if (f.degree() > 2) throw Error("classify_quadratic requires degree 2");
    if (f.degree() < 2) throw Error("classify_quadratic rejects affine input");
    const int n = f.vars();
    const BilinearRank br = bilinear_rank(f);

    QuadraticClass out;
    out.k = br.k;
    out.dim_v = n - 2 * br.k;

    // Balanced iff the derivative constant is 1 somewhere on the radical; the
    // constant map a -> f(a) + f(0) is linear there, so basis vectors suffice.
    const bool f0 = f.evaluate(0);
    for (const std::uint32_t a : br.radical) {
        if (f.evaluate(a) ^ f0) {
            out.kind = QuadKind::Balanced;
            return out;
        }
    }

    const auto [residual, steps] = reduce_to_affine(f);
    if (steps != br.k || residual.degree() > 0)
        throw Error("canonical reduction disagrees with the bilinear rank");
    out.kind = residual.constant_term() ? QuadKind::UnbalancedMinus : QuadKind::UnbalancedPlus;
    return out;
}

std::int64_t quadratic_weight(const QuadraticClass& c, int n) {
    const std::int64_t half = std::int64_t{1} << (n - 1);
    switch (c.kind) {
        case QuadKind::Balanced: return half;
        case QuadKind::UnbalancedPlus: return half - (std::int64_t{1} << (n - c.k - 1));
        case QuadKind::UnbalancedMinus: return half + (std::int64_t{1} << (n - c.k - 1));
    }
    return half;
}

std::int64_t quadratic_nl(const QuadraticClass& c, int n) {
    return (std::int64_t{1} << (n - 1)) - (std::int64_t{1} << (n - c.k - 1));
}

bool quadratics_affine_equivalent(const Anf& g, const Anf& h) {
    if (g.vars() != h.vars()) throw Error("variable counts differ");
    const int n = g.vars();
    const QuadraticClass cg = classify_quadratic(g);
    const QuadraticClass ch = classify_quadratic(h);
    return quadratic_weight(cg, n) == quadratic_weight(ch, n) &&
           quadratic_nl(cg, n) == quadratic_nl(ch, n);
}

}  // namespace bfa
