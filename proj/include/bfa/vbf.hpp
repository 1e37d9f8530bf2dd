#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bfa/anf.hpp"
#include "bfa/truth_table.hpp"

namespace bfa {

// Wide accumulator for the fourth power moment: L4 can reach 2^(5n), past
// int64 at the documented n <= 14 cap.
using Int128 = __int128;

std::string int128_to_string(Int128 v);

// Vectorial Boolean function F: F2^n -> F2^n given by n coordinate tables.
class VectorialBf {
public:
    explicit VectorialBf(std::vector<TruthTable> coordinates);
    static VectorialBf from_anfs(const std::vector<Anf>& coordinates);
    static VectorialBf identity(int nvars);

    int vars() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }
    const std::vector<TruthTable>& coordinates() const { return coords_; }

    // Component lambda.F as a Boolean function; lambda must be nonzero.
    TruthTable component(std::uint32_t lambda) const;

    // F as a lookup table, built on demand.
    std::vector<std::uint32_t> lut() const;

    // max over nonzero lambda of deg(F_lambda); capped at n <= 14.
    int degree(int threads = 1) const;

private:
    int n_;
    std::vector<TruthTable> coords_;
};

// ---------------------------------------------------------------------------
// Differential uniformity
// ---------------------------------------------------------------------------

// Full difference distribution table for a != 0 (n <= 12).
class DduTable {
public:
    DduTable(int nvars, std::vector<std::uint16_t> counts, int delta);

    int vars() const { return n_; }
    // delta_F(a, b) = |{x : F(x+a) + F(x) = b}|, a >= 1.
    std::uint16_t at(std::uint32_t a, std::uint32_t b) const;
    int delta() const { return delta_; }

private:
    int n_;
    std::vector<std::uint16_t> counts_;
    int delta_;
};

DduTable ddt(const VectorialBf& f);
// Early-exit APN test; agrees with ddt(f).delta() == 2.
bool is_apn_ddt(const VectorialBf& f);

// ---------------------------------------------------------------------------
// Walsh power moments
// ---------------------------------------------------------------------------

// L4(F) = sum over nonzero lambda of sum_a W_{F_lambda}(a)^4 (n <= 14).
// Lower-bounded by 2^(3n+1)(2^n - 1), with equality iff F is APN.
Int128 power_moment_L4(const VectorialBf& f, int threads = 1);

// sum over nonzero lambda and all a of F(D_a F_lambda)^2 (n <= 10).
// Equals 2^(2n+1)(2^n - 1) iff F is APN.
std::int64_t first_order_moment(const VectorialBf& f, int threads = 1);

// sum over nonzero lambda and all b, c of F(D_b D_c F_lambda).
// Generic triple loop at n <= 7; degree <= 3 inputs use the identity with
// M(F) (n <= 14). Equals 2^(2n+1)(2^n - 1) iff F is APN, and always
// satisfies 2^n * sum = L4(F).
std::int64_t second_order_moment(const VectorialBf& f, int threads = 1);

// ---------------------------------------------------------------------------
// The second-order-derivative parameter M
// ---------------------------------------------------------------------------

// Per-shift values M_a(f) = |Z_a(f)| - |U_a(f)| where Z_a / U_a collect the
// b with D_b D_a f identically 0 / 1; total sums over a != 0.
struct MProfile {
    std::vector<std::int64_t> values;  // indexed by a; values[0] = 2^n
    std::int64_t total = 0;
};

// Enumerates all b with a constancy check per pair (n <= 8).
std::int64_t m_a_scan(const TruthTable& f, std::uint32_t a);
// Radical shortcut for deg(f) <= 3 via V(D_a f) (n <= 14).
std::int64_t m_a_radical(const TruthTable& f, std::uint32_t a);
// Dispatches on the degree; both paths agree where both apply.
std::int64_t m_a(const TruthTable& f, std::uint32_t a);

MProfile m_profile(const TruthTable& f, int threads = 1);

// M(F) = sum over nonzero lambda of M(F_lambda).
std::int64_t m_total(const VectorialBf& f, int threads = 1);

// Requires deg(F) in {2,3}: true iff M(F) = 2^n (2^n - 1); always agrees
// with the DDT test there.
bool is_apn_via_m(const VectorialBf& f, int threads = 1);

// Operational test: every derivative D_a f is constant or balanced (n <= 10).
bool is_partially_bent(const TruthTable& f);

// Structure of Z_a(f) and U_a(f): Z_a is a vector space containing {0, a};
// U_a is a coset of it or empty.
struct ZaStructure {
    std::vector<std::uint32_t> z_basis;
    std::optional<std::uint32_t> u_representative;
};

ZaStructure z_a_structure(const TruthTable& f, std::uint32_t a);

// ---------------------------------------------------------------------------
// Component spectra
// ---------------------------------------------------------------------------

// Bijectivity by image marking; equivalent to all components being balanced.
bool is_permutation(const VectorialBf& f);

// Number of bent components (n even only; error otherwise).
int bent_component_count(const VectorialBf& f, int threads = 1);

// Almost bent: every component semi-bent (n odd only; error otherwise).
bool is_ab(const VectorialBf& f, int threads = 1);

}  // namespace bfa
