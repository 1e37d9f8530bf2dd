#pragma once

#include <cstdint>
#include <vector>

#include "bfa/anf.hpp"
#include "bfa/vbf.hpp"

namespace bfa {

// Search over vectorial functions with random pure-quadratic coordinates
// (each of the n * C(n,2) coordinate-monomial bits i.i.d.; linear and
// constant parts zero, since adding affine terms to coordinates does not
// change APN-ness). Candidates pass the filter M(F) = 2^n (2^n - 1) and are
// then verified with the DDT before being reported. Deterministic under a
// fixed seed regardless of the worker count.
struct SearchConfig {
    enum class Mode { Random, Exhaustive };
    enum class Target { Apn, BentComponents };

    int n = 3;
    Mode mode = Mode::Random;
    std::uint64_t samples = 10000;  // random mode only
    std::uint64_t seed = 0;
    Target target = Target::Apn;
    int bent_components = -1;  // required count for Target::BentComponents
    int threads = 1;
};

struct SearchHit {
    std::uint64_t index = 0;
    std::vector<Anf> coordinates;
    int delta = 0;
    std::int64_t m_value = 0;
    bool pure_quadratic = false;  // every component has degree 2
    int bent_components = -1;     // n even only
    bool almost_bent = false;     // n odd only
};

std::vector<SearchHit> search_quadratic_apn(const SearchConfig& cfg);

// The candidate enumerated at `index` under `seed` (exposed for tests).
std::vector<Anf> search_candidate(const SearchConfig& cfg, std::uint64_t index);

}  // namespace bfa
