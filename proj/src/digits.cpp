#include "ptmrad/digits.hpp"

#include <stdexcept>
#include <string>

namespace ptmrad {

Modulus::Modulus(int p) : p_(p) {
    if (p < 2 || p > kMaxModulus)
        throw std::invalid_argument("modulus p must satisfy 2 <= p <= " +
                                    std::to_string(kMaxModulus) + ", got " + std::to_string(p));
}

std::uint64_t DigitVector::value() const {
    std::uint64_t v = 0;
    for (std::size_t k = digits.size(); k-- > 0;) v = v * base + digits[k];
    return v;
}

DigitVector base_digits(std::uint64_t n, std::uint64_t base) {
    if (base < 2) throw std::invalid_argument("digit base must be >= 2");
    DigitVector d;
    d.base = base;
    do {
        d.digits.push_back(static_cast<std::uint32_t>(n % base));
        n /= base;
    } while (n != 0);
    return d;
}

int bit_length(std::uint64_t n) {
    int len = 1;
    while (n >>= 1) ++len;
    return len;
}

int digit_sum_mod(std::uint64_t n, Modulus p) {
    const auto pv = static_cast<std::uint64_t>(p.value());
    std::uint64_t s = 0;
    do {
        s += n % pv;
        n /= pv;
    } while (n != 0);
    return static_cast<int>(s % pv);
}

std::uint64_t xor_bitsum(std::uint64_t x, std::uint64_t y) { return x ^ y; }

std::uint32_t xor_shift(std::uint32_t i, int r, Modulus p) {
    const int pv = p.value();
    if (i >= p.weight_count())
        throw std::invalid_argument("xor_shift: index " + std::to_string(i) +
                                    " out of range for p = " + std::to_string(pv));
    if (r < 0 || r >= pv)
        throw std::invalid_argument("xor_shift: shift r must satisfy 0 <= r < p");
    if (r == 0) return 0;  // i ^ i
    const std::uint32_t mask = p.weight_count() - 1;
    const std::uint32_t rotated = ((i << r) | (i >> (pv - r))) & mask;
    return i ^ rotated;
}

}  // namespace ptmrad
