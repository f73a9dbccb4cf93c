#include "annularkh/simd.hpp"

#include <arm_neon.h>

namespace annularkh::simd::detail {
namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t w = 0;
    for (; w + 2 <= words; w += 2) vst1q_u64(dst + w, veorq_u64(vld1q_u64(dst + w), vld1q_u64(src + w)));
    for (; w < words; ++w) dst[w] ^= src[w];
}

std::size_t popcount(const std::uint64_t* src, std::size_t words) {
    std::size_t total = 0;
    std::size_t w = 0;
    for (; w + 2 <= words; w += 2) {
        uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(src + w)));
        total += vaddvq_u8(bytes);
    }
    for (; w < words; ++w) total += static_cast<std::size_t>(__builtin_popcountll(src[w]));
    return total;
}

bool all_zero(const std::uint64_t* src, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t w = 0;
    for (; w + 2 <= words; w += 2) acc = vorrq_u64(acc, vld1q_u64(src + w));
    std::uint64_t tail = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
    for (; w < words; ++w) tail |= src[w];
    return tail == 0;
}

}  // namespace

const Kernels neon_kernels{Isa::neon, &xor_into, &popcount, &all_zero};

}  // namespace annularkh::simd::detail
