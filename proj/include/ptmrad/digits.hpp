#pragma once

#include <cstdint>
#include <vector>

#include "ptmrad/integer.hpp"

namespace ptmrad {

// Largest supported modulus. Weight indices range over 0..2^p-1, so this
// keeps index tables desk-scale. Override at configure time if you really
// want larger.
#ifndef PTMRAD_MAX_MODULUS
#define PTMRAD_MAX_MODULUS 24
#endif
inline constexpr int kMaxModulus = PTMRAD_MAX_MODULUS;
static_assert(kMaxModulus >= 2 && kMaxModulus <= 31, "weight indices are 32-bit");

// The modulus p of a mod-p sequence, validated once at construction:
// 2 <= p <= kMaxModulus.
class Modulus {
public:
    explicit Modulus(int p);

    int value() const { return p_; }
    // number of weight indices, 2^p
    std::uint32_t weight_count() const { return std::uint32_t{1} << p_; }
    // half the index range, 2^(p-1)
    std::uint32_t half_weight_count() const { return std::uint32_t{1} << (p_ - 1); }

    friend bool operator==(Modulus a, Modulus b) { return a.p_ == b.p_; }

private:
    int p_;
};

// Base-p expansion of a non-negative integer, little-endian:
// digits[k] is the coefficient of base^k. Canonical form: no high zero
// digit except for the single-digit representation of 0.
struct DigitVector {
    std::uint64_t base = 2;
    std::vector<std::uint32_t> digits;

    std::uint64_t value() const;
};

DigitVector base_digits(std::uint64_t n, std::uint64_t base);

// Number of binary digits of n; 1 for n = 0 (canonical form of zero).
int bit_length(std::uint64_t n);

// v_p(n): sum of the base-p digits of n, reduced mod p.
// v_p(n) = n for 0 <= n < p, and v_p(pn + r) = (v_p(n) + r) mod p.
int digit_sum_mod(std::uint64_t n, Modulus p);

// Bitwise XOR of the binary expansions.
std::uint64_t xor_bitsum(std::uint64_t x, std::uint64_t y);

// Degree-p xor-shift: x_r(i) = i XOR rotl_p(i, r), where rotl_p is the
// p-bit cyclic left rotation. Bit k of the result is
//   d_k ^ d_{k-r}        for k >= r,
//   d_k ^ d_{k+(p-r)}    for k <  r.
std::uint32_t xor_shift(std::uint32_t i, int r, Modulus p);

}  // namespace ptmrad
