#include "annularkh/gf2.hpp"
#include "annularkh/simd.hpp"

#include <stdexcept>

namespace annularkh::gf2 {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

void BitVector::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= bit;
    else
        words_[i >> 6] &= ~bit;
}

std::size_t BitVector::count() const { return simd::active().popcount(words_.data(), words_.size()); }

bool BitVector::none() const { return simd::active().all_zero(words_.data(), words_.size()); }

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
    simd::active().xor_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

}  // namespace annularkh::gf2
