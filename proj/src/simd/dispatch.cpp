#include "annularkh/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace annularkh::simd {
namespace {

std::atomic<const Kernels*> g_active{nullptr};

bool cpu_has_avx2() {
#if defined(ANNULARKH_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

const Kernels* pick_default() {
    if (const char* env = std::getenv("ANNULARKH_SIMD")) {
        std::string wanted(env);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
            if (wanted == name(isa) && supported(isa)) return &kernels(isa);
    }
    if (supported(Isa::avx2)) return &kernels(Isa::avx2);
    if (supported(Isa::neon)) return &kernels(Isa::neon);
    return &detail::scalar_kernels;
}

}  // namespace

std::string_view name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

bool supported(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2: return cpu_has_avx2();
        case Isa::neon:
#if defined(ANNULARKH_BUILD_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Kernels& kernels(Isa isa) {
    if (!supported(isa)) throw std::invalid_argument("simd variant not available: " + std::string(name(isa)));
    switch (isa) {
#if defined(ANNULARKH_BUILD_AVX2)
        case Isa::avx2: return detail::avx2_kernels;
#endif
#if defined(ANNULARKH_BUILD_NEON)
        case Isa::neon: return detail::neon_kernels;
#endif
        default: return detail::scalar_kernels;
    }
}

const Kernels& active() {
    const Kernels* k = g_active.load(std::memory_order_acquire);
    if (k == nullptr) {
        const Kernels* chosen = pick_default();
        g_active.compare_exchange_strong(k, chosen, std::memory_order_acq_rel);
        k = g_active.load(std::memory_order_acquire);
    }
    return *k;
}

void select(Isa isa) { g_active.store(&kernels(isa), std::memory_order_release); }

}  // namespace annularkh::simd
