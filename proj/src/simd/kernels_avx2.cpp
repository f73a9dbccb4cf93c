// Compiled with -mavx2; only reached after a runtime CPU check.
#include "annularkh/simd.hpp"

#include <immintrin.h>

#include <bit>

namespace annularkh::simd::detail {
namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t w = 0;
    for (; w + 8 <= words; w += 8) {
        __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + w));
        __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + w + 4));
        __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
        __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w + 4));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_xor_si256(a0, b0));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w + 4), _mm256_xor_si256(a1, b1));
    }
    for (; w + 4 <= words; w += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + w));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_xor_si256(a, b));
    }
    for (; w < words; ++w) dst[w] ^= src[w];
}

// Hardware popcnt per 64-bit lane is faster than a vpshufb nibble table at
// the row widths seen here.
std::size_t popcount(const std::uint64_t* src, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words; ++w) total += static_cast<std::size_t>(std::popcount(src[w]));
    return total;
}

bool all_zero(const std::uint64_t* src, std::size_t words) {
    std::size_t w = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; w + 4 <= words; w += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w)));
    if (!_mm256_testz_si256(acc, acc)) return false;
    for (; w < words; ++w)
        if (src[w] != 0) return false;
    return true;
}

}  // namespace

const Kernels avx2_kernels{Isa::avx2, &xor_into, &popcount, &all_zero};

}  // namespace annularkh::simd::detail
