#include "annularkh/simd.hpp"

#include <bit>

namespace annularkh::simd::detail {
namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) dst[w] ^= src[w];
}

std::size_t popcount(const std::uint64_t* src, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words; ++w) total += static_cast<std::size_t>(std::popcount(src[w]));
    return total;
}

bool all_zero(const std::uint64_t* src, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words; ++w) acc |= src[w];
    return acc == 0;
}

}  // namespace

const Kernels scalar_kernels{Isa::scalar, &xor_into, &popcount, &all_zero};

}  // namespace annularkh::simd::detail
