#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace annularkh::simd {

enum class Isa { scalar, avx2, neon };

// Word-level kernels used by the GF(2) elimination routines. Every variant
// must produce bit-identical results to the scalar reference.
struct Kernels {
    Isa isa;
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    std::size_t (*popcount)(const std::uint64_t* src, std::size_t words);
    bool (*all_zero)(const std::uint64_t* src, std::size_t words);
};

std::string_view name(Isa isa);

// True when the variant was compiled in and the running CPU supports it.
bool supported(Isa isa);

// Throws std::invalid_argument for an unsupported variant.
const Kernels& kernels(Isa isa);

// Active variant. First use picks the best supported one, unless the
// ANNULARKH_SIMD environment variable names another ("scalar", "avx2", "neon").
const Kernels& active();

void select(Isa isa);

namespace detail {
extern const Kernels scalar_kernels;
#if defined(ANNULARKH_BUILD_AVX2)
extern const Kernels avx2_kernels;
#endif
#if defined(ANNULARKH_BUILD_NEON)
extern const Kernels neon_kernels;
#endif
}  // namespace detail

}  // namespace annularkh::simd
