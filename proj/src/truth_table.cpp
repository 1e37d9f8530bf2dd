#include "bfa/truth_table.hpp"

#include <bit>

#include "bfa/kernels.hpp"

namespace bfa {
namespace {

std::size_t words_for(int nvars) {
    return nvars >= 6 ? (std::size_t{1} << (nvars - 6)) : 1;
}

std::uint64_t used_mask(int nvars) {
    return nvars >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << nvars)) - 1;
}

void check_vars(int nvars) {
    if (nvars < 1 || nvars > TruthTable::kMaxVars)
        throw Error("variable count must be in 1.." + std::to_string(TruthTable::kMaxVars) +
                    ", got " + std::to_string(nvars));
}

}  // namespace

TruthTable::TruthTable(int nvars) : n_(nvars) {
    check_vars(nvars);
    words_.assign(words_for(nvars), 0);
}

TruthTable::TruthTable(int nvars, std::vector<std::uint64_t> words)
    : n_(nvars), words_(std::move(words)) {
    check_vars(nvars);
    if (words_.size() != words_for(nvars)) throw Error("word vector has wrong length");
    if ((words_[0] & ~used_mask(nvars)) != 0) throw Error("padding bits must be zero");
}

TruthTable TruthTable::from_bits(int nvars, const std::vector<std::uint8_t>& bits) {
    TruthTable t(nvars);
    if (bits.size() != t.size()) throw Error("bit vector has wrong length");
    for (std::uint32_t x = 0; x < bits.size(); ++x)
        if (bits[x]) t.set(x, true);
    return t;
}

void TruthTable::check_point(std::uint32_t x) const {
    if (x >= size()) throw Error("point out of range for n=" + std::to_string(n_));
}

std::uint64_t TruthTable::weight() const {
    return kern::active_kernels().popcount(words_.data(), words_.size());
}

bool TruthTable::constant_zero() const {
    for (const std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

bool TruthTable::constant_one() const {
    const std::uint64_t full = used_mask(n_);
    for (const std::uint64_t w : words_)
        if (w != full) return false;
    return true;
}

TruthTable TruthTable::derivative(std::uint32_t a) const {
    check_point(a);
    TruthTable out(n_);
    kern::active_kernels().xor_translate(out.words_.data(), words_.data(), words_.size(), a);
    return out;
}

TruthTable TruthTable::second_derivative(std::uint32_t a, std::uint32_t b) const {
    return derivative(a).derivative(b);
}

int TruthTable::algebraic_degree() const {
    std::vector<std::uint64_t> anf = words_;
    kern::active_kernels().mobius(anf.data(), anf.size(), n_);
    int deg = 0;
    for (std::size_t w = 0; w < anf.size(); ++w) {
        std::uint64_t bits = anf[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            const int d = std::popcount((static_cast<std::uint32_t>(w) << 6) |
                                        static_cast<std::uint32_t>(b));
            if (d > deg) deg = d;
            bits &= bits - 1;
        }
    }
    return deg;
}

TruthTable TruthTable::operator^(const TruthTable& other) const {
    TruthTable out(*this);
    out ^= other;
    return out;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
    if (other.n_ != n_) throw Error("variable counts differ");
    kern::active_kernels().xor_words(words_.data(), words_.data(), other.words_.data(),
                                     words_.size());
    return *this;
}

TruthTable TruthTable::complemented() const {
    TruthTable out(*this);
    const std::uint64_t full = used_mask(n_);
    for (std::uint64_t& w : out.words_) w ^= full;
    return out;
}

}  // namespace bfa
