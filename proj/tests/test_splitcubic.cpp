#include <random>

#include "bfa/splitcubic.hpp"
#include "bfa/walsh.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace bfa;
using namespace bfa::testutil;

TEST_CASE("split_fourier") {
    const Anf and2(2, {0b11});
    CHECK(split_fourier(and2, and2) == 4);
    CHECK(split_fourier(and2, and2) == direct_sum(and2, and2).to_table().fourier());
    CHECK(split_fourier(Anf::variable(2, 1), and2) == 0);
    CHECK(split_fourier(Anf::constant_one(2), Anf::constant_one(3)) == 32);
}

TEST_CASE("split_weight") {
    const Anf and2(2, {0b11});
    CHECK(split_weight(and2, and2) == 6);
    CHECK(split_weight(and2, and2) ==
          static_cast<std::int64_t>(direct_sum(and2, and2).to_table().weight()));
    CHECK(split_weight(Anf::variable(2, 1), and2) == 8);  // balanced g -> 2^(n-1)
    CHECK(split_weight(and2, Anf::zero(2)) == 4);         // h = 0 -> 2^(n-s) w(g|)
}

TEST_CASE("multi_split_fourier") {
    // Single part: F(g) = 2^(n-s) F(g|).
    const Anf and_lo(6, {0b000011});
    CHECK(multi_split_fourier(std::vector<Anf>{and_lo}, 6) == 16 * 2);

    // Three AND blocks filling n = 6.
    const std::vector<Anf> blocks = {Anf(6, {0b000011}), Anf(6, {0b001100}), Anf(6, {0b110000})};
    CHECK(multi_split_fourier(blocks, 6) == 8);
    CHECK(multi_split_fourier(blocks, 6) ==
          (blocks[0] + blocks[1] + blocks[2]).to_table().fourier());

    // A balanced part zeroes the product.
    const std::vector<Anf> with_bal = {Anf(6, {0b000011}), Anf::variable(6, 3)};
    CHECK(multi_split_fourier(with_bal, 6) == 0);

    const std::vector<Anf> overlap = {Anf(6, {0b000011}), Anf(6, {0b000110})};
    CHECK_THROWS_AS(multi_split_fourier(overlap, 6), Error);
}

TEST_CASE("multi_split_fourier equals brute force on random disjoint parts") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 6;
        // Partition the variables into up to three blocks.
        std::vector<std::vector<int>> blocks(1 + rng() % 3);
        for (int v = 1; v <= n; ++v) blocks[rng() % blocks.size()].push_back(v);
        std::vector<Anf> parts;
        Anf total = Anf::zero(n);
        for (const auto& vars : blocks) {
            if (vars.empty()) continue;
            // Random function on this block.
            std::vector<std::uint32_t> monos;
            for (std::uint32_t pick = 0; pick < (1u << vars.size()); ++pick) {
                if (rng() & 1) continue;
                std::uint32_t m = 0;
                for (std::size_t i = 0; i < vars.size(); ++i)
                    if ((pick >> i) & 1) m |= std::uint32_t{1} << (vars[i] - 1);
                monos.push_back(m);
            }
            parts.emplace_back(n, std::move(monos));
            total = total + parts.back();
        }
        CHECK(multi_split_fourier(parts, n) == total.to_table().fourier());
    }
}

TEST_CASE("monomial_sum closed forms") {
    CHECK(monomial_sum_weight(3, 2, 6) == 14);
    CHECK(monomial_sum_weight(1, 1, 1) == 1);
    CHECK(monomial_sum_weight(2, 2, 4) == 6);
    CHECK_THROWS_AS(monomial_sum_weight(3, 2, 5), Error);

    CHECK(monomial_sum_nl(2, 2, 4) == 6);
    CHECK(monomial_sum_nl(3, 1, 3) == 1);
    CHECK(monomial_sum_nl(3, 2, 6) == 14);
    CHECK_THROWS_AS(monomial_sum_nl(1, 1, 2), Error);

    // Against brute force: assemble the k disjoint AND-blocks.
    for (int m = 1; m <= 3; ++m) {
        for (int k = 1; m * k <= 6; ++k) {
            const int n = 6;
            std::vector<std::uint32_t> monos;
            for (int i = 0; i < k; ++i)
                monos.push_back(((std::uint32_t{1} << m) - 1) << (m * i));
            const Anf f(n, std::move(monos));
            CHECK(monomial_sum_weight(m, k, n) ==
                  static_cast<std::int64_t>(f.to_table().weight()));
            if (m > 1) CHECK(monomial_sum_nl(m, k, n) == nonlinearity(f.to_table()));
        }
    }
}

TEST_CASE("generalized convolutional weight and balancedness") {
    CHECK(genconv_weight(Anf::variable(1, 1), Anf::constant_one(1), 2) == 7);
    CHECK(genconv_weight(Anf::variable(1, 1), Anf::constant_one(1), 2) ==
          static_cast<std::int64_t>(
              conv_product(Anf::variable(1, 1), Anf::constant_one(1), 2).to_table().weight()));

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + rng() % 3;
        const int m = 1 + rng() % 3;
        const Anf g = random_anf(rng, n, n);
        const Anf h = random_anf(rng, n, n);
        const Anf f = conv_product(g, h, m);
        CHECK(genconv_weight(g, h, m) == static_cast<std::int64_t>(f.to_table().weight()));
        CHECK(genconv_balanced(g, h, m) == f.to_table().balanced());
        // Both balanced -> balanced; exactly one balanced -> unbalanced.
        const bool gb = g.to_table().balanced();
        const bool hb = h.to_table().balanced();
        if (gb && hb) CHECK(genconv_balanced(g, h, m));
        if (gb != hb) CHECK_FALSE(genconv_balanced(g, h, m));
    }
}

TEST_CASE("cubic case table on the spec examples") {
    const Anf q2(2, {0b11});
    auto [w1, case1] = cubic_conv_weight(q2 + Anf::constant_one(2), q2);
    CHECK(w1 == 4);
    CHECK(case1.row == "h-plus-g-minus");
    CHECK(case1.k == 1);
    CHECK(case1.l == 1);

    const Anf bal(2, {0b01, 0b10});
    auto [w2, case2] = cubic_conv_weight(bal, bal);
    CHECK(w2 == 4);
    CHECK(case2.row == "both-balanced");

    auto [w3, case3] = cubic_conv_weight(Anf::zero(2), q2);
    CHECK(w3 == 1);
    CHECK(case3.row == "h-unbalanced-quadratic-g-zero");
    CHECK(case3.k == 1);
}

TEST_CASE("cubic_conv_balanced") {
    CHECK(cubic_conv_balanced(Anf(2, {0b01, 0b10}), Anf::variable(2, 1)));
    CHECK(cubic_conv_balanced(Anf(2, {0b11, 0b00}), Anf(2, {0b11})));
    CHECK_FALSE(cubic_conv_balanced(Anf(2, {0b11}), Anf(2, {0b11})));
}

TEST_CASE("case table equals brute force for every (g,h) pair at n=2") {
    const std::vector<Anf> all = all_quadratic_or_less(2);
    for (const Anf& g : all) {
        for (const Anf& h : all) {
            const auto [w, kase] = cubic_conv_weight(g, h);
            const Anf f = conv_product(g, h, 1);
            CHECK(w == static_cast<std::int64_t>(f.to_table().weight()));
            CHECK(cubic_conv_balanced(g, h) == f.to_table().balanced());
        }
    }
}

TEST_CASE("recursive cubic weight") {
    CHECK(algorithm1_weight(Anf(3, {0b111})) == 1);
    CHECK(algorithm1_weight(Anf(6, {0b000111, 0b111000})) == 14);
    // x1x2x3 + x1x4 + x2: weight 8 by 16-point enumeration.
    const Anf f(4, {0b0111, 0b1001, 0b0010});
    CHECK(oracle_weight(f) == 8);
    CHECK(algorithm1_weight(f) == 8);

    CHECK_THROWS_AS(algorithm1_weight(Anf(3, {0b011})), Error);

    std::mt19937_64 rng(43);
    for (int n = 4; n <= 8; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const Anf g = random_anf_of_degree(rng, n, 3);
            CHECK(algorithm1_weight(g) == static_cast<std::int64_t>(g.to_table().weight()));
        }
    }

    Algorithm1Trace trace;
    CHECK(algorithm1_weight(Anf(3, {0b111}), trace) == 1);
    REQUIRE(trace.nodes.size() == 1);
    CHECK(trace.nodes[0].pivot == 1);
    CHECK(trace.nodes[0].branch == "table");
}

TEST_CASE("walsh case formula for the generalized product") {
    // Formula collapses for g = h.
    const Anf g(2, {0b11, 0b01});
    const WalshSpectrum wg = wht(g.to_table());
    for (std::uint32_t b = 0; b < 4; ++b) {
        CHECK(genconv_walsh(g, g, 2, 0, b) == 4 * wg[b]);
        CHECK(genconv_walsh(g, g, 2, 1, b) == 0);
        CHECK(genconv_walsh(g, g, 2, 3, b) == 0);
    }

    // Spec worked value: m=2, g=x1, h=1 at alpha = 0 gives -6 = F(f).
    CHECK(genconv_walsh(Anf::variable(1, 1), Anf::constant_one(1), 2, 0, 0) == -6);

    // Exhaustive match against the assembled spectrum.
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + rng() % 3;
        const int m = 1 + rng() % 3;
        const Anf gg = random_anf(rng, n, n);
        const Anf hh = random_anf(rng, n, n);
        const WalshSpectrum full = wht(conv_product(gg, hh, m).to_table());
        for (std::uint32_t alpha = 0; alpha < (1u << (n + m)); ++alpha) {
            const std::uint32_t a = alpha & ((1u << m) - 1);
            const std::uint32_t b = alpha >> m;
            CHECK(genconv_walsh(gg, hh, m, a, b) == full[alpha]);
        }
    }
}

TEST_CASE("nonlinearity bounds") {
    CHECK(genconv_nl_bound(Anf::variable(2, 1), Anf(2, {0b10, 0b00}), 2) == 0);

    // m=1, g = x1x2+x3x4, h = x1x2 on four variables: bound 10.
    const Anf g4(4, {0b0011, 0b1100});
    const Anf h4(4, {0b0011});
    CHECK(genconv_nl_bound(g4, h4, 1) == 10);
    CHECK(nonlinearity(conv_product(g4, h4, 1).to_table()) >= 10);

    CHECK(cubic_nl_bound(Anf(2, {0b11}), Anf(2, {0b11, 0b00})) == 2);

    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + rng() % 3;
        const int m = 1 + rng() % 3;
        const Anf gg = random_anf(rng, n, n);
        const Anf hh = random_anf(rng, n, n);
        const std::int64_t actual = nonlinearity(conv_product(gg, hh, m).to_table());
        CHECK(actual >= genconv_nl_bound(gg, hh, m));
        if (m == 1 && gg.degree() <= 2 && hh.degree() <= 2)
            CHECK(actual >= cubic_nl_bound(gg, hh));
    }
}
