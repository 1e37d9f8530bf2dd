#include "bfa/walsh.hpp"

#include "bfa/kernels.hpp"

namespace bfa {

WalshSpectrum::WalshSpectrum(int nvars, std::vector<std::int64_t> values)
    : n_(nvars), values_(std::move(values)) {
    if (values_.size() != (std::uint64_t{1} << nvars))
        throw Error("spectrum length must be 2^n");
}

WalshSpectrum wht(const TruthTable& t) {
    std::vector<std::int64_t> signs(t.size());
    for (std::uint32_t x = 0; x < t.size(); ++x) signs[x] = t.get(x) ? -1 : 1;
    kern::active_kernels().fwht(signs.data(), signs.size());
    return WalshSpectrum(t.vars(), std::move(signs));
}

std::int64_t linearity(const WalshSpectrum& s) {
    return kern::active_kernels().max_abs(s.values().data(), s.values().size());
}

std::int64_t nonlinearity(const WalshSpectrum& s) {
    return (std::int64_t{1} << (s.vars() - 1)) - linearity(s) / 2;
}

std::int64_t nonlinearity(const TruthTable& t) { return nonlinearity(wht(t)); }

bool is_bent(const TruthTable& t) {
    if (t.vars() % 2 != 0) throw Error("bent is defined for even n only");
    return nonlinearity(t) ==
           (std::int64_t{1} << (t.vars() - 1)) - (std::int64_t{1} << (t.vars() / 2 - 1));
}

bool is_semi_bent(const TruthTable& t) {
    if (t.vars() % 2 != 1) throw Error("semi-bent is defined for odd n only");
    return nonlinearity(t) ==
           (std::int64_t{1} << (t.vars() - 1)) - (std::int64_t{1} << ((t.vars() - 1) / 2));
}

}  // namespace bfa
