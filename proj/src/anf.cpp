#include "bfa/anf.hpp"

#include <algorithm>
#include <bit>

#include "bfa/kernels.hpp"

namespace bfa {
namespace {

void check_vars(int nvars) {
    if (nvars < 1 || nvars > TruthTable::kMaxVars)
        throw Error("variable count must be in 1.." + std::to_string(TruthTable::kMaxVars) +
                    ", got " + std::to_string(nvars));
}

// Sort and cancel duplicate monomials in pairs (F2 coefficients).
std::vector<std::uint32_t> canonicalize(std::vector<std::uint32_t> monos) {
    std::sort(monos.begin(), monos.end());
    std::vector<std::uint32_t> out;
    out.reserve(monos.size());
    for (std::size_t i = 0; i < monos.size();) {
        std::size_t j = i;
        while (j < monos.size() && monos[j] == monos[i]) ++j;
        if ((j - i) & 1) out.push_back(monos[i]);
        i = j;
    }
    return out;
}

}  // namespace

Anf::Anf(int nvars) : n_(nvars) { check_vars(nvars); }

Anf::Anf(int nvars, std::vector<std::uint32_t> monomials) : n_(nvars) {
    check_vars(nvars);
    const std::uint32_t allowed = (std::uint32_t{1} << nvars) - 1;
    for (const std::uint32_t m : monomials)
        if ((m & ~allowed) != 0) throw Error("monomial uses a variable beyond n");
    monos_ = canonicalize(std::move(monomials));
}

Anf Anf::variable(int nvars, int index) {
    if (index < 1 || index > nvars) throw Error("variable index out of range");
    return Anf(nvars, {std::uint32_t{1} << (index - 1)});
}

int Anf::degree() const {
    int deg = 0;
    for (const std::uint32_t m : monos_) deg = std::max(deg, std::popcount(m));
    return deg;
}

bool Anf::contains(std::uint32_t monomial) const {
    return std::binary_search(monos_.begin(), monos_.end(), monomial);
}

bool Anf::evaluate(std::uint32_t x) const {
    bool v = false;
    for (const std::uint32_t m : monos_) v ^= ((x & m) == m);
    return v;
}

std::uint32_t Anf::support() const {
    std::uint32_t s = 0;
    for (const std::uint32_t m : monos_) s |= m;
    return s;
}

int Anf::support_size() const { return std::popcount(support()); }

Anf Anf::operator+(const Anf& other) const {
    if (other.n_ != n_) throw Error("variable counts differ");
    std::vector<std::uint32_t> merged;
    merged.reserve(monos_.size() + other.monos_.size());
    std::set_symmetric_difference(monos_.begin(), monos_.end(), other.monos_.begin(),
                                  other.monos_.end(), std::back_inserter(merged));
    Anf out(n_);
    out.monos_ = std::move(merged);
    return out;
}

Anf Anf::operator*(const Anf& other) const {
    if (other.n_ != n_) throw Error("variable counts differ");
    std::vector<std::uint32_t> prods;
    prods.reserve(monos_.size() * other.monos_.size());
    for (const std::uint32_t a : monos_)
        for (const std::uint32_t b : other.monos_) prods.push_back(a | b);
    return Anf(n_, std::move(prods));
}

Anf Anf::shifted(int offset) const {
    if (offset < 0 || n_ + offset > TruthTable::kMaxVars)
        throw Error("shift exceeds the variable cap");
    std::vector<std::uint32_t> monos(monos_);
    for (std::uint32_t& m : monos) m <<= offset;
    Anf out(n_ + offset);
    out.monos_ = std::move(monos);
    return out;
}

Anf Anf::compacted() const {
    const std::uint32_t sup = support();
    if (sup == 0) return Anf(1, std::vector<std::uint32_t>(monos_));
    // Map the i-th used variable to position i.
    std::vector<std::uint32_t> monos;
    monos.reserve(monos_.size());
    for (const std::uint32_t m : monos_) {
        std::uint32_t packed = 0;
        int out_bit = 0;
        for (std::uint32_t rest = sup; rest != 0; rest &= rest - 1, ++out_bit) {
            const std::uint32_t bit = rest & ~(rest - 1);
            if (m & bit) packed |= std::uint32_t{1} << out_bit;
        }
        monos.push_back(packed);
    }
    Anf out(std::popcount(sup));
    out.monos_ = canonicalize(std::move(monos));
    return out;
}

std::pair<Anf, Anf> Anf::pivot_split(int pivot) const {
    if (n_ < 2) throw Error("pivot split needs at least two variables");
    if (pivot < 1 || pivot > n_) throw Error("pivot out of range");
    const std::uint32_t pbit = std::uint32_t{1} << (pivot - 1);
    const std::uint32_t low = pbit - 1;
    std::vector<std::uint32_t> g_monos, h_monos;
    for (const std::uint32_t m : monos_) {
        const std::uint32_t repacked = (m & low) | ((m >> 1) & ~low);
        if (m & pbit)
            g_monos.push_back(repacked);
        else
            h_monos.push_back(repacked);
    }
    Anf g(n_ - 1), h(n_ - 1);
    g.monos_ = canonicalize(std::move(g_monos));
    h.monos_ = canonicalize(std::move(h_monos));
    return {std::move(g), std::move(h)};
}

Anf Anf::homogeneous_part(int deg) const {
    std::vector<std::uint32_t> monos;
    for (const std::uint32_t m : monos_)
        if (std::popcount(m) == deg) monos.push_back(m);
    Anf out(n_);
    out.monos_ = std::move(monos);
    return out;
}

TruthTable Anf::to_table() const {
    TruthTable t(n_);
    for (const std::uint32_t m : monos_) t.set(m, true);
    kern::active_kernels().mobius(t.data(), t.word_count(), n_);
    return t;
}

Anf Anf::from_table(const TruthTable& t) {
    std::vector<std::uint64_t> coeffs(t.words().begin(), t.words().end());
    kern::active_kernels().mobius(coeffs.data(), coeffs.size(), t.vars());
    std::vector<std::uint32_t> monos;
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
        std::uint64_t bits = coeffs[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            monos.push_back((static_cast<std::uint32_t>(w) << 6) | static_cast<std::uint32_t>(b));
            bits &= bits - 1;
        }
    }
    Anf out(t.vars());
    out.monos_ = std::move(monos);  // emitted in sorted order already
    return out;
}

Anf direct_sum(const Anf& g, const Anf& h) {
    const int s = g.vars();
    const int n = s + h.vars();
    if (n > TruthTable::kMaxVars) throw Error("direct sum exceeds the variable cap");
    Anf g_wide(n, std::vector<std::uint32_t>(g.monomials()));
    return g_wide + h.shifted(s);
}

Anf conv_product(const Anf& g, const Anf& h, int m) {
    if (m < 1) throw Error("pivot block size must be positive");
    if (g.vars() != h.vars()) throw Error("g and h must share the variable count");
    const int n = g.vars();
    if (m + n > TruthTable::kMaxVars) throw Error("convolutional product exceeds the variable cap");
    const std::uint32_t pivot_block = (std::uint32_t{1} << m) - 1;
    const Anf pivot(m + n, {pivot_block});
    const Anf g_shift = g.shifted(m);
    const Anf h_shift = h.shifted(m);
    return pivot * (g_shift + h_shift) + h_shift;
}

}  // namespace bfa
