#pragma once

// Test-only oracles and generators. The oracles evaluate definitions
// point-by-point and stay independent of the library's fast paths.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "bfa/anf.hpp"
#include "bfa/truth_table.hpp"

namespace bfa::testutil {

// Weight by direct evaluation of the ANF at every point.
inline std::int64_t oracle_weight(const Anf& f) {
    std::int64_t w = 0;
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << f.vars()); ++x) w += f.evaluate(x);
    return w;
}

// Naive O(4^n) Walsh transform straight from the definition.
inline std::vector<std::int64_t> oracle_walsh(const TruthTable& t) {
    const std::uint32_t sz = static_cast<std::uint32_t>(t.size());
    std::vector<std::int64_t> out(sz);
    for (std::uint32_t a = 0; a < sz; ++a) {
        std::int64_t acc = 0;
        for (std::uint32_t x = 0; x < sz; ++x) {
            const int e = static_cast<int>(t.get(x)) ^ (std::popcount(a & x) & 1);
            acc += e ? -1 : 1;
        }
        out[a] = acc;
    }
    return out;
}

inline std::int64_t oracle_nonlinearity(const TruthTable& t) {
    std::int64_t lin = 0;
    for (const std::int64_t w : oracle_walsh(t)) {
        const std::int64_t u = w < 0 ? -w : w;
        if (u > lin) lin = u;
    }
    return (std::int64_t{1} << (t.vars() - 1)) - lin / 2;
}

inline TruthTable random_table(std::mt19937_64& rng, int n) {
    TruthTable t(n);
    for (std::uint32_t x = 0; x < t.size(); ++x)
        if (rng() & 1) t.set(x, true);
    return t;
}

// Random ANF with monomials of degree <= max_deg, each kept with probability
// `density`.
inline Anf random_anf(std::mt19937_64& rng, int n, int max_deg, double density = 0.5) {
    std::vector<std::uint32_t> monos;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        if (std::popcount(m) > max_deg) continue;
        if (coin(rng) < density) monos.push_back(m);
    }
    return Anf(n, std::move(monos));
}

// Random ANF guaranteed to have exactly the requested degree.
inline Anf random_anf_of_degree(std::mt19937_64& rng, int n, int deg, double density = 0.4) {
    for (;;) {
        const Anf f = random_anf(rng, n, deg, density);
        if (f.degree() == deg) return f;
    }
}

// All ANFs of degree <= 2 on n variables (coefficient-space enumeration).
inline std::vector<Anf> all_quadratic_or_less(int n) {
    std::vector<std::uint32_t> monos;  // constant, linear, quadratic
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
        if (std::popcount(m) <= 2) monos.push_back(m);
    std::vector<Anf> out;
    out.reserve(std::size_t{1} << monos.size());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << monos.size()); ++bits) {
        std::vector<std::uint32_t> chosen;
        for (std::size_t i = 0; i < monos.size(); ++i)
            if ((bits >> i) & 1) chosen.push_back(monos[i]);
        out.emplace_back(n, std::move(chosen));
    }
    return out;
}

}  // namespace bfa::testutil
