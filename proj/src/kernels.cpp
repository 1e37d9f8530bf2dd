#include "bfa/kernels.hpp"

#include <atomic>
#include <cstring>

namespace bfa::kern {
namespace {

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* detect() {
    if (const Kernels* k = avx2_kernels()) return k;
    if (const Kernels* k = neon_kernels()) return k;
    return &scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
    const Kernels* k = g_active.load(std::memory_order_acquire);
    if (k == nullptr) {
        k = detect();
        g_active.store(k, std::memory_order_release);
    }
    return *k;
}

bool select_backend(const char* name) {
    const Kernels* k = nullptr;
    if (std::strcmp(name, "scalar") == 0) {
        k = &scalar_kernels();
    } else if (std::strcmp(name, "avx2") == 0) {
        k = avx2_kernels();
    } else if (std::strcmp(name, "neon") == 0) {
        k = neon_kernels();
    }
    if (k == nullptr) return false;
    g_active.store(k, std::memory_order_release);
    return true;
}

}  // namespace bfa::kern
