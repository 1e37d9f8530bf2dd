#include "bfa/vbf.hpp"

#include <algorithm>
#include <bit>

#include "bfa/gf2.hpp"
#include "bfa/kernels.hpp"
#include "bfa/parallel.hpp"
#include "bfa/quadratic.hpp"
#include "bfa/walsh.hpp"

namespace bfa {
namespace {

constexpr int kDdtCap = 12;
constexpr int kL4Cap = 14;
constexpr int kFirstOrderCap = 10;
constexpr int kSecondOrderScanCap = 7;
constexpr int kDegreeCap = 14;
constexpr int kMScanCap = 8;
constexpr int kMRadicalCap = 14;
constexpr int kPartiallyBentCap = 10;

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw CapExceeded(std::string(what) + " is capped at n <= " + std::to_string(cap));
}

}  // namespace

std::string int128_to_string(Int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

VectorialBf::VectorialBf(std::vector<TruthTable> coordinates) : coords_(std::move(coordinates)) {
    if (coords_.empty()) throw Error("a vectorial function needs at least one coordinate");
    n_ = coords_[0].vars();
    if (coords_.size() != static_cast<std::size_t>(n_))
        throw Error("coordinate count must equal the variable count");
    for (const TruthTable& c : coords_)
        if (c.vars() != n_) throw Error("all coordinates must share the same n");
}

VectorialBf VectorialBf::from_anfs(const std::vector<Anf>& coordinates) {
    std::vector<TruthTable> tables;
    tables.reserve(coordinates.size());
    for (const Anf& a : coordinates) tables.push_back(a.to_table());
    return VectorialBf(std::move(tables));
}

VectorialBf VectorialBf::identity(int nvars) {
    std::vector<Anf> coords;
    coords.reserve(nvars);
    for (int i = 1; i <= nvars; ++i) coords.push_back(Anf::variable(nvars, i));
    return from_anfs(coords);
}

TruthTable VectorialBf::component(std::uint32_t lambda) const {
    if (lambda == 0) throw Error("component index must be nonzero");
    if (lambda >= size()) throw Error("component index out of range");
    TruthTable out(n_);
    for (int i = 0; i < n_; ++i)
        if ((lambda >> i) & 1) out ^= coords_[i];
    return out;
}

std::vector<std::uint32_t> VectorialBf::lut() const {
    std::vector<std::uint32_t> out(size(), 0);
    for (int i = 0; i < n_; ++i) {
        const TruthTable& c = coords_[i];
        for (std::uint32_t x = 0; x < size(); ++x)
            out[x] |= static_cast<std::uint32_t>(c.get(x)) << i;
    }
    return out;
}

int VectorialBf::degree(int threads) const {
    check_cap(n_, kDegreeCap, "vectorial degree");
    std::vector<int> degs(size(), 0);
    parallel_for(1, size(), threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t lambda = lo; lambda < hi; ++lambda)
            degs[lambda] = component(static_cast<std::uint32_t>(lambda)).algebraic_degree();
    });
    int deg = 0;
    for (std::uint64_t lambda = 1; lambda < size(); ++lambda) deg = std::max(deg, degs[lambda]);
    return deg;
}

// ---------------------------------------------------------------------------
// DDT
// ---------------------------------------------------------------------------

DduTable::DduTable(int nvars, std::vector<std::uint16_t> counts, int delta)
    : n_(nvars), counts_(std::move(counts)), delta_(delta) {}

std::uint16_t DduTable::at(std::uint32_t a, std::uint32_t b) const {
    if (a == 0) throw Error("DDT rows start at a = 1");
    return counts_[(static_cast<std::size_t>(a) - 1) * (std::size_t{1} << n_) + b];
}

DduTable ddt(const VectorialBf& f) {
    check_cap(f.vars(), kDdtCap, "the DDT scan");
    const std::uint64_t sz = f.size();
    const std::vector<std::uint32_t> lut = f.lut();
    std::vector<std::uint16_t> counts((sz - 1) * sz, 0);
    int delta = 0;
    for (std::uint64_t a = 1; a < sz; ++a) {
        std::uint16_t* row = counts.data() + (a - 1) * sz;
        for (std::uint64_t x = 0; x < sz; ++x) {
            const std::uint32_t d = lut[x] ^ lut[x ^ a];
            const int c = ++row[d];
            if (c > delta) delta = c;
        }
    }
    return DduTable(f.vars(), std::move(counts), delta);
}

bool is_apn_ddt(const VectorialBf& f) {
    check_cap(f.vars(), kDdtCap, "the DDT scan");
    const std::uint64_t sz = f.size();
    const std::vector<std::uint32_t> lut = f.lut();
    std::vector<std::uint16_t> row(sz);
    for (std::uint64_t a = 1; a < sz; ++a) {
        std::fill(row.begin(), row.end(), 0);
        for (std::uint64_t x = 0; x < sz; ++x) {
            if (++row[lut[x] ^ lut[x ^ a]] > 2) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Power moments
// ---------------------------------------------------------------------------

Int128 power_moment_L4(const VectorialBf& f, int threads) {
    check_cap(f.vars(), kL4Cap, "the fourth power moment");
    const std::uint64_t sz = f.size();
    std::vector<std::uint64_t> per_lambda(sz, 0);
    parallel_for(1, sz, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::int64_t> signs(sz);
        for (std::uint64_t lambda = lo; lambda < hi; ++lambda) {
            const TruthTable c = f.component(static_cast<std::uint32_t>(lambda));
            for (std::uint32_t x = 0; x < sz; ++x) signs[x] = c.get(x) ? -1 : 1;
            kern::active_kernels().fwht(signs.data(), signs.size());
            per_lambda[lambda] = kern::active_kernels().sum_pow4(signs.data(), signs.size());
        }
    });
    Int128 total = 0;
    for (std::uint64_t lambda = 1; lambda < sz; ++lambda)
        total += static_cast<Int128>(per_lambda[lambda]);
    return total;
}

std::int64_t first_order_moment(const VectorialBf& f, int threads) {
    check_cap(f.vars(), kFirstOrderCap, "the first-order derivative moment");
    const std::uint64_t sz = f.size();
    std::vector<std::int64_t> per_lambda(sz, 0);
    parallel_for(1, sz, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t lambda = lo; lambda < hi; ++lambda) {
            const TruthTable c = f.component(static_cast<std::uint32_t>(lambda));
            std::int64_t acc = 0;
            for (std::uint32_t a = 0; a < sz; ++a) {
                const std::int64_t fr = c.derivative(a).fourier();
                acc += fr * fr;
            }
            per_lambda[lambda] = acc;
        }
    });
    std::int64_t total = 0;
    for (std::uint64_t lambda = 1; lambda < sz; ++lambda) total += per_lambda[lambda];
    return total;
}

std::int64_t second_order_moment(const VectorialBf& f, int threads) {
    if (f.vars() <= kDegreeCap) {
        const int deg = f.degree(threads);
        if (deg >= 2 && deg <= 3) {
            // 2^n * sum = L4(F) = 2^(3n)(2^n - 1) + 2^(2n) M(F).
            const int n = f.vars();
            return pow2(2 * n) * (pow2(n) - 1) + pow2(n) * m_total(f, threads);
        }
    }
    check_cap(f.vars(), kSecondOrderScanCap, "the generic second-order moment scan");
    const std::uint64_t sz = f.size();
    std::vector<std::int64_t> per_lambda(sz, 0);
    parallel_for(1, sz, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t lambda = lo; lambda < hi; ++lambda) {
            const TruthTable c = f.component(static_cast<std::uint32_t>(lambda));
            std::int64_t acc = 0;
            for (std::uint32_t b = 0; b < sz; ++b) {
                const TruthTable db = c.derivative(b);
                for (std::uint32_t e = 0; e < sz; ++e) acc += db.derivative(e).fourier();
            }
            per_lambda[lambda] = acc;
        }
    });
    std::int64_t total = 0;
    for (std::uint64_t lambda = 1; lambda < sz; ++lambda) total += per_lambda[lambda];
    return total;
}

// ---------------------------------------------------------------------------
// M parameter
// ---------------------------------------------------------------------------

std::int64_t m_a_scan(const TruthTable& f, std::uint32_t a) {
    check_cap(f.vars(), kMScanCap, "the generic M_a scan");
    const std::uint64_t sz = f.size();
    const TruthTable da = f.derivative(a);
    std::int64_t m = 0;
    for (std::uint32_t b = 0; b < sz; ++b) {
        const TruthTable dd = da.derivative(b);
        if (dd.constant_zero())
            ++m;
        else if (dd.constant_one())
            --m;
    }
    return m;
}

std::int64_t m_a_radical(const TruthTable& f, std::uint32_t a) {
    check_cap(f.vars(), kMRadicalCap, "the radical M_a path");
    // deg(D_a f) <= 2, so V(D_a f) is the radical of its bilinear form and
    // the constant value of D_b D_a f is linear in b on it.
    const TruthTable da = f.derivative(a);
    const Anf danf = Anf::from_table(da);
    if (danf.degree() > 2) throw Error("radical M_a path requires deg(f) <= 3");
    const BilinearRank br = bilinear_rank(danf);
    const bool d0 = da.get(0);
    for (const std::uint32_t b : br.radical)
        if (da.get(b) ^ d0) return 0;
    return pow2(f.vars() - 2 * br.k);
}

std::int64_t m_a(const TruthTable& f, std::uint32_t a) {
    if (a == 0) return pow2(f.vars());
    if (f.algebraic_degree() <= 3 && f.vars() <= kMRadicalCap) return m_a_radical(f, a);
    return m_a_scan(f, a);
}

MProfile m_profile(const TruthTable& f, int threads) {
    const std::uint64_t sz = f.size();
    const bool radical = f.algebraic_degree() <= 3 && f.vars() <= kMRadicalCap;
    if (!radical) check_cap(f.vars(), kMScanCap, "the generic M_a scan");
    MProfile out;
    out.values.assign(sz, 0);
    out.values[0] = pow2(f.vars());
    parallel_for(1, sz, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t a = lo; a < hi; ++a)
            out.values[a] = radical ? m_a_radical(f, static_cast<std::uint32_t>(a))
                                    : m_a_scan(f, static_cast<std::uint32_t>(a));
    });
    for (std::uint64_t a = 1; a < sz; ++a) out.total += out.values[a];
    return out;
}

std::int64_t m_total(const VectorialBf& f, int threads) {
    const std::uint64_t sz = f.size();
    std::vector<std::int64_t> per_lambda(sz, 0);
    parallel_for(1, sz, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t lambda = lo; lambda < hi; ++lambda)
            per_lambda[lambda] = m_profile(f.component(static_cast<std::uint32_t>(lambda))).total;
    });
    std::int64_t total = 0;
    for (std::uint64_t lambda = 1; lambda < sz; ++lambda) total += per_lambda[lambda];
    return total;
}

bool is_apn_via_m(const VectorialBf& f, int threads) {
    const int deg = f.degree(threads);
    if (deg < 2 || deg > 3)
        throw Error("the M(F) criterion requires degree 2 or 3, got " + std::to_string(deg));
    const int n = f.vars();
    return m_total(f, threads) == pow2(n) * (pow2(n) - 1);
}

bool is_partially_bent(const TruthTable& f) {
    check_cap(f.vars(), kPartiallyBentCap, "the partially-bent test");
    const std::uint64_t half = f.size() / 2;
    for (std::uint32_t a = 1; a < f.size(); ++a) {
        const TruthTable d = f.derivative(a);
        if (d.is_constant()) continue;
        if (d.weight() != half) return false;
    }
    return true;
}

ZaStructure z_a_structure(const TruthTable& f, std::uint32_t a) {
    const int n = f.vars();
    ZaStructure out;
    if (f.algebraic_degree() <= 3 && n <= kMRadicalCap) {
        const TruthTable da = f.derivative(a);
        const Anf danf = Anf::from_table(da);
        const BilinearRank br = bilinear_rank(danf);
        const bool d0 = da.get(0);
        // Z_a is the kernel of the linear constant map b -> D_a f(b) + D_a f(0)
        // on V(D_a f); U_a is the nontrivial coset when the map is onto.
        std::optional<std::uint32_t> pivot;
        std::vector<std::uint32_t> kernel;
        for (const std::uint32_t b : br.radical) {
            if (da.get(b) ^ d0) {
                if (!pivot)
                    pivot = b;
                else
                    kernel.push_back(b ^ *pivot);
            } else {
                kernel.push_back(b);
            }
        }
        out.z_basis = gf2::row_basis(kernel, n);
        out.u_representative = pivot;
        return out;
    }
    check_cap(n, kMScanCap, "the generic Z_a scan");
    std::vector<std::uint32_t> zs;
    const TruthTable da = f.derivative(a);
    for (std::uint32_t b = 0; b < f.size(); ++b) {
        const TruthTable dd = da.derivative(b);
        if (dd.constant_zero())
            zs.push_back(b);
        else if (dd.constant_one() && !out.u_representative)
            out.u_representative = b;
    }
    out.z_basis = gf2::row_basis(zs, n);
    return out;
}

// ---------------------------------------------------------------------------
// Component spectra
// ---------------------------------------------------------------------------

bool is_permutation(const VectorialBf& f) {
    const std::vector<std::uint32_t> lut = f.lut();
    std::vector<bool> seen(f.size(), false);
    for (const std::uint32_t y : lut) {
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

int bent_component_count(const VectorialBf& f, int threads) {
    if (f.vars() % 2 != 0) throw Error("bent components are defined for even n only");
    const std::int64_t target = pow2(f.vars() - 1) - pow2(f.vars() / 2 - 1);
    const std::uint64_t sz = f.size();
    std::vector<std::uint8_t> bent(sz, 0);
    parallel_for(1, sz, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t lambda = lo; lambda < hi; ++lambda)
            bent[lambda] =
                nonlinearity(f.component(static_cast<std::uint32_t>(lambda))) == target;
    });
    int count = 0;
    for (std::uint64_t lambda = 1; lambda < sz; ++lambda) count += bent[lambda];
    return count;
}

bool is_ab(const VectorialBf& f, int threads) {
    if (f.vars() % 2 != 1) throw Error("almost bent is defined for odd n only");
    const std::int64_t target = pow2(f.vars() - 1) - pow2((f.vars() - 1) / 2);
    const std::uint64_t sz = f.size();
    std::vector<std::uint8_t> semi(sz, 1);
    parallel_for(1, sz, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t lambda = lo; lambda < hi; ++lambda)
            semi[lambda] =
                nonlinearity(f.component(static_cast<std::uint32_t>(lambda))) == target;
    });
    for (std::uint64_t lambda = 1; lambda < sz; ++lambda)
        if (!semi[lambda]) return false;
    return true;
}

}  // namespace bfa
