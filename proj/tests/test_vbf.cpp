#include <random>

#include "bfa/quadratic.hpp"
#include "bfa/search.hpp"
#include "bfa/vbf.hpp"
#include "bfa/walsh.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace bfa;
using namespace bfa::testutil;

namespace {

// The worked APN permutation on F2^3:
// f1 = x1x3 + x2x3 + x1, f2 = x2x3 + x1 + x2, f3 = x1x2 + x1 + x2 + x3.
VectorialBf example_apn3() {
    return VectorialBf::from_anfs({
        Anf(3, {0b101, 0b110, 0b001}),
        Anf(3, {0b110, 0b001, 0b010}),
        Anf(3, {0b011, 0b001, 0b010, 0b100}),
    });
}

// Random vBf with every coordinate of degree <= max_deg and deg(F) == want.
VectorialBf random_vbf_of_degree(std::mt19937_64& rng, int n, int want) {
    for (;;) {
        std::vector<Anf> coords;
        for (int i = 0; i < n; ++i) coords.push_back(random_anf(rng, n, want));
        const VectorialBf f = VectorialBf::from_anfs(coords);
        if (f.degree() == want) return f;
    }
}

}  // namespace

TEST_CASE("components and degree") {
    const VectorialBf f = example_apn3();
    CHECK(f.component(0b001) == f.coordinates()[0]);
    CHECK(f.component(0b011) == (f.coordinates()[0] ^ f.coordinates()[1]));
    CHECK_THROWS_AS(f.component(0), Error);
    CHECK(f.degree() == 2);
    for (std::uint32_t lambda = 1; lambda < 8; ++lambda)
        CHECK(f.component(lambda).algebraic_degree() == 2);
}

TEST_CASE("permutation test") {
    CHECK(is_permutation(VectorialBf::identity(3)));
    CHECK_FALSE(is_permutation(VectorialBf(std::vector<TruthTable>(3, TruthTable(3)))));
    CHECK(is_permutation(example_apn3()));

    // Equivalent to all components balanced.
    std::mt19937_64 rng(51);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Anf> coords;
            for (int i = 0; i < n; ++i) coords.push_back(random_anf(rng, n, 2));
            const VectorialBf f = VectorialBf::from_anfs(coords);
            bool all_bal = true;
            for (std::uint32_t lambda = 1; lambda < f.size() && all_bal; ++lambda)
                all_bal = f.component(lambda).balanced();
            CHECK(is_permutation(f) == all_bal);
        }
    }
}

TEST_CASE("ddt") {
    const VectorialBf id3 = VectorialBf::identity(3);
    const DduTable d = ddt(id3);
    CHECK(d.delta() == 8);  // affine bijection: every derivative is constant
    CHECK_FALSE(is_apn_ddt(id3));

    const DduTable dex = ddt(example_apn3());
    CHECK(dex.delta() == 2);
    CHECK(is_apn_ddt(example_apn3()));

    // Row sums partition the domain, and all counts are even.
    for (std::uint32_t a = 1; a < 8; ++a) {
        int sum = 0;
        for (std::uint32_t b = 0; b < 8; ++b) {
            sum += dex.at(a, b);
            CHECK(dex.at(a, b) % 2 == 0);
        }
        CHECK(sum == 8);
    }
}

TEST_CASE("power moments on the worked example") {
    const VectorialBf f = example_apn3();
    CHECK(power_moment_L4(f) == Int128{7168});
    CHECK(first_order_moment(f) == 896);
    CHECK(second_order_moment(f) == 896);

    const VectorialBf id3 = VectorialBf::identity(3);
    CHECK(power_moment_L4(id3) == Int128{28672});
    CHECK(first_order_moment(id3) > 896);
    CHECK(second_order_moment(id3) > 896);
}

TEST_CASE("second-order identity 2^n * sum = L4 holds for any degree") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Anf> coords;
        for (int i = 0; i < 3; ++i) coords.push_back(random_anf(rng, 3, 3));
        const VectorialBf f = VectorialBf::from_anfs(coords);
        CHECK(Int128{8} * Int128{second_order_moment(f)} == power_moment_L4(f));
    }
}

TEST_CASE("M_a values") {
    // Affine: every second derivative vanishes.
    const TruthTable aff = Anf(3, {0b001, 0b000}).to_table();
    const MProfile mp = m_profile(aff);
    for (std::uint32_t a = 1; a < 8; ++a) CHECK(mp.values[a] == 8);
    CHECK(mp.total == 8 * 7);

    // Bent: M(f) = 0.
    CHECK(m_profile(Anf(2, {0b11}).to_table()).total == 0);

    // Semi-bent on three variables: M(f) = 2^n.
    CHECK(m_profile(Anf(3, {0b011, 0b100}).to_table()).total == 8);
}

TEST_CASE("both M_a paths agree") {
    std::mt19937_64 rng(53);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const Anf f = random_anf(rng, n, 3);
            const TruthTable t = f.to_table();
            for (std::uint32_t a = 1; a < t.size(); ++a)
                CHECK(m_a_scan(t, a) == m_a_radical(t, a));
        }
    }
}

TEST_CASE("M_a value set for degree <= 3") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 300; ++trial) {
        const Anf f = random_anf(rng, 3, 3);
        const TruthTable t = f.to_table();
        for (std::uint32_t a = 1; a < 8; ++a) {
            const std::int64_t m = m_a(t, a);
            const TruthTable da = t.derivative(a);
            if (da.is_constant()) {
                CHECK(m == 8);
            } else if (da.balanced()) {
                CHECK(m == 0);
            } else {
                // 2^(n-j) for an even j.
                CHECK(m > 0);
                int j = 3;
                while ((std::int64_t{1} << (3 - j)) != m && j >= 0) --j;
                CHECK(j % 2 == 0);
            }
            CHECK((m == 8) == da.is_constant());
            CHECK((m == 0) == da.balanced());
        }
    }
}

TEST_CASE("M totals and the L4 identity") {
    const VectorialBf f = example_apn3();
    CHECK(m_total(f) == 56);
    const MProfile mp = m_profile(f.component(1));
    CHECK(mp.total == 8);

    // Affine F: per-component total times component count.
    const VectorialBf id3 = VectorialBf::identity(3);
    CHECK(m_total(id3) == 8 * 7 * 7);

    std::mt19937_64 rng(55);
    for (const int n : {3, 4}) {
        for (int trial = 0; trial < 25; ++trial) {
            const VectorialBf g = random_vbf_of_degree(rng, n, 2 + static_cast<int>(rng() % 2));
            const Int128 expect = (Int128{1} << (3 * n)) * ((Int128{1} << n) - 1) +
                                  (Int128{1} << (2 * n)) * Int128{m_total(g)};
            CHECK(power_moment_L4(g) == expect);
        }
    }
}

TEST_CASE("APN via M") {
    CHECK(is_apn_via_m(example_apn3()));
    CHECK_THROWS_AS(is_apn_via_m(VectorialBf::identity(3)), Error);

    std::mt19937_64 rng(56);
    int non_apn_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const VectorialBf f = random_vbf_of_degree(rng, 4, 2);
        const bool apn = is_apn_ddt(f);
        CHECK(is_apn_via_m(f) == apn);
        if (!apn) {
            ++non_apn_seen;
            CHECK(m_total(f) > (std::int64_t{1} << 4) * ((std::int64_t{1} << 4) - 1));
        }
    }
    CHECK(non_apn_seen > 0);
}

TEST_CASE("partially bent") {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 30; ++trial)
        CHECK(is_partially_bent(random_anf_of_degree(rng, 4, 2).to_table()));
    CHECK(is_partially_bent(Anf(4, {0b0011, 0b1100}).to_table()));
    CHECK_FALSE(is_partially_bent(Anf(3, {0b111}).to_table()));
}

TEST_CASE("bent components and almost bent") {
    CHECK(bent_component_count(VectorialBf::identity(4)) == 0);
    CHECK_THROWS_AS(bent_component_count(VectorialBf::identity(3)), Error);
    CHECK_THROWS_AS(is_ab(VectorialBf::identity(4)), Error);

    const VectorialBf f = example_apn3();
    CHECK(is_ab(f));
    for (std::uint32_t lambda = 1; lambda < 8; ++lambda) {
        CHECK(is_semi_bent(f.component(lambda)));
        CHECK(nonlinearity(f.component(lambda)) == 2);
        CHECK(linear_space(f.component(lambda)).dim() == 1);
        CHECK(m_profile(f.component(lambda)).total == 8);
    }
}

TEST_CASE("Z_a and U_a structure") {
    const TruthTable q = Anf(2, {0b11}).to_table();
    const ZaStructure z0 = z_a_structure(q, 0);
    CHECK(z0.z_basis.size() == 2);
    CHECK_FALSE(z0.u_representative.has_value());

    const ZaStructure z = z_a_structure(q, 0b01);
    CHECK(z.z_basis.size() == 1);
    REQUIRE(z.u_representative.has_value());
    // Z = {0, a}; U = the other two points.
    CHECK(z.z_basis[0] == 0b01);
    const std::uint32_t u = *z.u_representative;
    CHECK((u == 0b10 || u == 0b11));

    std::mt19937_64 rng(58);
    for (int n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            const Anf f = random_anf(rng, n, n);
            const TruthTable t = f.to_table();
            const std::uint32_t a = static_cast<std::uint32_t>(rng() % t.size());
            const ZaStructure zs = z_a_structure(t, a);
            const TruthTable da = t.derivative(a);

            // Recover Z_a and U_a by scan and compare with the basis/coset view.
            std::vector<bool> in_z(t.size(), false);
            std::vector<bool> in_u(t.size(), false);
            std::size_t z_count = 0;
            for (std::uint32_t b = 0; b < t.size(); ++b) {
                const TruthTable dd = da.derivative(b);
                if (dd.constant_zero()) {
                    in_z[b] = true;
                    ++z_count;
                } else if (dd.constant_one()) {
                    in_u[b] = true;
                }
            }
            CHECK((std::size_t{1} << zs.z_basis.size()) == z_count);
            if (a != 0) CHECK(zs.z_basis.size() >= 1);

            // Closure under addition and {0, a} membership.
            CHECK(in_z[0]);
            CHECK(in_z[a]);
            std::vector<std::uint32_t> span{0};
            for (const std::uint32_t b : zs.z_basis) {
                const std::size_t cur = span.size();
                for (std::size_t i = 0; i < cur; ++i) span.push_back(span[i] ^ b);
            }
            for (const std::uint32_t s1 : span) {
                CHECK(in_z[s1]);
                for (const std::uint32_t s2 : span) CHECK(in_z[s1 ^ s2]);
            }

            // U_a is empty or the advertised coset of Z_a.
            if (zs.u_representative.has_value()) {
                for (const std::uint32_t s1 : span) CHECK(in_u[*zs.u_representative ^ s1]);
                std::size_t u_count = 0;
                for (std::uint32_t b = 0; b < t.size(); ++b) u_count += in_u[b];
                CHECK(u_count == span.size());
            } else {
                for (std::uint32_t b = 0; b < t.size(); ++b) CHECK_FALSE(in_u[b]);
            }
        }
    }
}

TEST_CASE("pure quadratic corollaries") {
    std::mt19937_64 rng(59);
    // M(F) = 2^n sum (2^dimV - 1) for pure quadratics.
    for (const int n : {3, 4, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Anf> coords;
            for (int i = 0; i < n; ++i) coords.push_back(random_anf_of_degree(rng, n, 2));
            const VectorialBf f = VectorialBf::from_anfs(coords);
            if (f.degree() != 2) continue;
            std::int64_t sum = 0;
            bool pure = true;
            for (std::uint32_t lambda = 1; lambda < f.size(); ++lambda) {
                const TruthTable c = f.component(lambda);
                if (c.algebraic_degree() != 2) pure = false;
                sum += (std::int64_t{1} << linear_space(c).dim()) - 1;
            }
            if (!pure) continue;
            CHECK(m_total(f) == (std::int64_t{1} << n) * sum);
            // APN <=> the dimension sum meets its floor.
            CHECK((sum == (std::int64_t{1} << n) - 1) == is_apn_ddt(f));
        }
    }
    // n odd pure quadratic: APN <=> every component semi-bent <=> M(F_l) = 2^n.
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Anf> coords;
        for (int i = 0; i < 3; ++i) coords.push_back(random_anf_of_degree(rng, 3, 2));
        const VectorialBf f = VectorialBf::from_anfs(coords);
        bool pure = true;
        for (std::uint32_t lambda = 1; lambda < 8; ++lambda)
            pure &= f.component(lambda).algebraic_degree() == 2;
        if (!pure) continue;
        const bool apn = is_apn_ddt(f);
        bool all_semi = true;
        bool all_m = true;
        for (std::uint32_t lambda = 1; lambda < 8; ++lambda) {
            all_semi &= is_semi_bent(f.component(lambda));
            all_m &= m_profile(f.component(lambda)).total == 8;
        }
        CHECK(apn == all_semi);
        CHECK(apn == all_m);
    }
}

TEST_CASE("search finds verified APN hits deterministically") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.mode = SearchConfig::Mode::Random;
    cfg.samples = 3000;
    cfg.seed = 1;
    cfg.threads = 1;
    const std::vector<SearchHit> hits1 = search_quadratic_apn(cfg);
    cfg.threads = 2;
    const std::vector<SearchHit> hits2 = search_quadratic_apn(cfg);
    REQUIRE(hits1.size() == hits2.size());
    for (std::size_t i = 0; i < hits1.size(); ++i) {
        CHECK(hits1[i].index == hits2[i].index);
        CHECK(hits1[i].coordinates == hits2[i].coordinates);
        CHECK(hits1[i].delta == 2);
        CHECK(hits1[i].almost_bent);
        // Hits reproduce from (seed, index) alone.
        CHECK(search_candidate(cfg, hits1[i].index) == hits1[i].coordinates);
    }

    SearchConfig bad = cfg;
    bad.mode = SearchConfig::Mode::Exhaustive;
    bad.n = 5;
    CHECK_THROWS_AS(search_quadratic_apn(bad), InfeasibleConfig);
}
