#include "bfa/kernels.hpp"

#include "kernels_detail.hpp"

namespace bfa::kern {

const Kernels& scalar_kernels() {
    static const Kernels table = {
        "scalar",
        detail::popcount_scalar,
        detail::xor_words_scalar,
        detail::xor_translate_scalar,
        detail::mobius_scalar,
        detail::fwht_scalar,
        detail::max_abs_scalar,
        detail::sum_pow4_scalar,
    };
    return table;
}

}  // namespace bfa::kern
