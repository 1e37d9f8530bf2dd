#include "bfa/search.hpp"

#include <algorithm>

#include "bfa/parallel.hpp"
#include "bfa/walsh.hpp"

namespace bfa {
namespace {

constexpr int kExhaustiveCap = 4;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Quadratic monomials in a fixed order: pairs (i, j), i < j, i ascending.
std::vector<std::uint32_t> quad_monomials(int n) {
    std::vector<std::uint32_t> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.push_back((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
    return out;
}

std::vector<Anf> candidate_from_bits(int n, const std::vector<std::uint32_t>& quads,
                                     const std::vector<std::uint64_t>& bits) {
    std::vector<Anf> coords;
    coords.reserve(n);
    const std::size_t per_coord = quads.size();
    for (int c = 0; c < n; ++c) {
        std::vector<std::uint32_t> monos;
        for (std::size_t q = 0; q < per_coord; ++q) {
            const std::size_t bit = static_cast<std::size_t>(c) * per_coord + q;
            if ((bits[bit >> 6] >> (bit & 63)) & 1) monos.push_back(quads[q]);
        }
        coords.emplace_back(n, std::move(monos));
    }
    return coords;
}

std::vector<std::uint64_t> candidate_bits(const SearchConfig& cfg, std::uint64_t index,
                                          std::size_t nbits) {
    const std::size_t nwords = (nbits + 63) / 64;
    std::vector<std::uint64_t> bits(nwords);
    if (cfg.mode == SearchConfig::Mode::Exhaustive) {
        bits[0] = index;
    } else {
        std::uint64_t state = cfg.seed + 0x9E3779B97F4A7C15ull * (index + 1);
        for (std::uint64_t& w : bits) w = splitmix64(state);
    }
    return bits;
}

void validate(const SearchConfig& cfg) {
    if (cfg.n < 2 || cfg.n > 12) throw InfeasibleConfig("search supports 2 <= n <= 12");
    if (cfg.mode == SearchConfig::Mode::Exhaustive && cfg.n > kExhaustiveCap)
        throw InfeasibleConfig("exhaustive mode is limited to n <= " +
                               std::to_string(kExhaustiveCap));
    if (cfg.target == SearchConfig::Target::BentComponents) {
        if (cfg.n % 2 != 0)
            throw InfeasibleConfig("a bent-component target needs even n");
        if (cfg.bent_components < 0)
            throw InfeasibleConfig("a bent-component target needs a count");
    }
}

}  // namespace

std::vector<Anf> search_candidate(const SearchConfig& cfg, std::uint64_t index) {
    validate(cfg);
    const std::vector<std::uint32_t> quads = quad_monomials(cfg.n);
    const std::size_t nbits = quads.size() * static_cast<std::size_t>(cfg.n);
    return candidate_from_bits(cfg.n, quads, candidate_bits(cfg, index, nbits));
}

std::vector<SearchHit> search_quadratic_apn(const SearchConfig& cfg) {
    validate(cfg);
    const int n = cfg.n;
    const std::vector<std::uint32_t> quads = quad_monomials(n);
    const std::size_t nbits = quads.size() * static_cast<std::size_t>(n);

    std::uint64_t total = cfg.samples;
    if (cfg.mode == SearchConfig::Mode::Exhaustive) {
        if (nbits >= 63) throw InfeasibleConfig("exhaustive coefficient space too large");
        total = std::uint64_t{1} << nbits;
    }

    const std::int64_t m_target =
        (std::int64_t{1} << n) * ((std::int64_t{1} << n) - 1);

    const int nthreads = resolve_threads(cfg.threads);
    std::vector<std::vector<SearchHit>> chunk_hits(nthreads);
    std::vector<std::uint64_t> chunk_start(nthreads + 1, total);
    {
        // Same contiguous split as parallel_for, recorded so chunks can be
        // merged in candidate order.
        const std::uint64_t per = total / std::max<std::uint64_t>(nthreads, 1);
        const std::uint64_t rem = total % std::max<std::uint64_t>(nthreads, 1);
        std::uint64_t s = 0;
        for (int i = 0; i < nthreads; ++i) {
            chunk_start[i] = s;
            s += per + (static_cast<std::uint64_t>(i) < rem ? 1 : 0);
        }
    }

    parallel_for(0, total, nthreads, [&](std::uint64_t lo, std::uint64_t hi) {
        int chunk = 0;
        while (chunk + 1 < nthreads && chunk_start[chunk + 1] <= lo) ++chunk;
        std::vector<SearchHit>& hits = chunk_hits[chunk];
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::vector<Anf> coords =
                candidate_from_bits(n, quads, candidate_bits(cfg, idx, nbits));
            const VectorialBf f = VectorialBf::from_anfs(coords);
            const std::int64_t m = m_total(f);
            if (m != m_target) continue;
            if (!is_apn_ddt(f)) continue;

            SearchHit hit;
            hit.index = idx;
            hit.coordinates = std::move(coords);
            hit.delta = 2;
            hit.m_value = m;
            hit.pure_quadratic = true;
            for (std::uint32_t lambda = 1; lambda < f.size() && hit.pure_quadratic; ++lambda)
                hit.pure_quadratic = f.component(lambda).algebraic_degree() == 2;
            if (n % 2 == 0) {
                hit.bent_components = bent_component_count(f);
                if (cfg.target == SearchConfig::Target::BentComponents &&
                    hit.bent_components != cfg.bent_components)
                    continue;
            } else {
                hit.almost_bent = is_ab(f);
            }
            hits.push_back(std::move(hit));
        }
    });

    std::vector<SearchHit> out;
    for (std::vector<SearchHit>& c : chunk_hits)
        for (SearchHit& h : c) out.push_back(std::move(h));
    std::sort(out.begin(), out.end(),
              [](const SearchHit& a, const SearchHit& b) { return a.index < b.index; });
    return out;
}

}  // namespace bfa
