#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ptmrad/digits.hpp"
#include "oracles.hpp"

using namespace ptmrad;

TEST_SUITE("digits") {

TEST_CASE("modulus bounds") {
    CHECK_THROWS_AS(Modulus(1), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(0), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(-3), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(kMaxModulus + 1), std::invalid_argument);
    CHECK(Modulus(2).weight_count() == 4);
    CHECK(Modulus(3).half_weight_count() == 4);
}

TEST_CASE("base_digits known values") {
    CHECK(base_digits(7, 2).digits == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(base_digits(0, 3).digits == std::vector<std::uint32_t>{0});
    CHECK(base_digits(5, 3).digits == std::vector<std::uint32_t>{2, 1});
    CHECK_THROWS_AS(base_digits(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(base_digits(5, 0), std::invalid_argument);
}

TEST_CASE("base_digits round trip and canonical form") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 2000; ++t) {
        const std::uint64_t n = rng() >> (rng() % 40);
        const std::uint64_t base = 2 + rng() % 30;
        const DigitVector d = base_digits(n, base);
        CHECK(d.value() == n);
        for (std::uint32_t digit : d.digits) CHECK(digit < base);
        if (d.digits.size() > 1) CHECK(d.digits.back() != 0);
    }
}

TEST_CASE("digit_sum_mod known values") {
    CHECK(digit_sum_mod(7, Modulus(2)) == 1);
    CHECK(digit_sum_mod(4, Modulus(5)) == 4);
    CHECK(digit_sum_mod(5, Modulus(3)) == 0);
}

TEST_CASE("digit_sum_mod equals n below p") {
    for (int p = 2; p <= 12; ++p)
        for (int n = 0; n < p; ++n) CHECK(digit_sum_mod(n, Modulus(p)) == n);
}

TEST_CASE("digit_sum_mod recurrence and oracle") {
    for (int p = 2; p <= 8; ++p) {
        const Modulus mod(p);
        for (std::uint64_t n = 0; n < 4096; ++n)
            CHECK(digit_sum_mod(n, mod) == oracle::digit_sum_mod(n, p));
    }
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        const int p = 2 + static_cast<int>(rng() % 9);
        const Modulus mod(p);
        const std::uint64_t n = rng() % (std::uint64_t{1} << 50);
        const int r = static_cast<int>(rng() % p);
        CHECK(digit_sum_mod(p * n + r, mod) == (digit_sum_mod(n, mod) + r) % p);
    }
}

TEST_CASE("xor_bitsum") {
    CHECK(xor_bitsum(0b001, 0b010) == 3);
    CHECK(xor_bitsum(0b011, 0b101) == 6);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const std::uint64_t x = rng(), y = rng(), z = rng();
        CHECK(xor_bitsum(x, x) == 0);
        CHECK(xor_bitsum(x, 0) == x);
        CHECK(xor_bitsum(x, y) == xor_bitsum(y, x));
        CHECK(xor_bitsum(xor_bitsum(x, y), z) == xor_bitsum(x, xor_bitsum(y, z)));
        CHECK(xor_bitsum(xor_bitsum(x, y), y) == x);
    }
}

TEST_CASE("sum and difference match xor mod 2") {
    for (int a = 0; a < 256; ++a)
        for (int b = 0; b < 256; ++b) {
            CHECK((a + b) % 2 == static_cast<int>((a ^ b) % 2));
            CHECK(((a - b) % 2 + 2) % 2 == static_cast<int>((a ^ b) % 2));
        }
}

TEST_CASE("xor_shift worked table for p = 3") {
    const Modulus p3(3);
    CHECK(xor_shift(0, 1, p3) == 0);
    CHECK(xor_shift(0, 2, p3) == 0);
    CHECK(xor_shift(1, 1, p3) == 3);
    CHECK(xor_shift(1, 2, p3) == 5);
    CHECK(xor_shift(2, 1, p3) == 6);
    CHECK(xor_shift(2, 2, p3) == 3);
    CHECK(xor_shift(3, 1, p3) == 5);
    CHECK(xor_shift(3, 2, p3) == 6);
}

TEST_CASE("xor_shift zero shift and zero word") {
    for (int p = 2; p <= 8; ++p) {
        const Modulus mod(p);
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
            CHECK(xor_shift(i, 0, mod) == 0);
        for (int r = 0; r < p; ++r) CHECK(xor_shift(0, r, mod) == 0);
    }
}

TEST_CASE("xor_shift rejects bad arguments") {
    CHECK_THROWS_AS(xor_shift(8, 0, Modulus(3)), std::invalid_argument);
    CHECK_THROWS_AS(xor_shift(1, 3, Modulus(3)), std::invalid_argument);
    CHECK_THROWS_AS(xor_shift(1, -1, Modulus(3)), std::invalid_argument);
}

// e_k = d_k ^ d_{k-r} (k >= r), d_k ^ d_{k+p-r} (k < r), built from the
// oracle digit vectors.
static std::uint32_t xor_shift_by_digit_formula(std::uint32_t i, int r, int p) {
    std::uint32_t result = 0;
    for (int k = 0; k < p; ++k) {
        const int dk = oracle::binary_digit(i, k);
        const int other = k >= r ? oracle::binary_digit(i, k - r)
                                 : oracle::binary_digit(i, k + p - r);
        if (dk ^ other) result |= std::uint32_t{1} << k;
    }
    return result;
}

TEST_CASE("xor_shift matches the digit formula") {
    for (int p = 2; p <= 7; ++p) {
        const Modulus mod(p);
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
            for (int r = 0; r < p; ++r)
                CHECK(xor_shift(i, r, mod) == xor_shift_by_digit_formula(i, r, p));
    }
}

TEST_CASE("xor_shift of n by one step is n XOR 2n") {
    // OEIS A048724
    const std::uint32_t expected[10] = {0, 3, 6, 5, 12, 15, 10, 9, 24, 27};
    for (std::uint32_t n = 0; n < 10; ++n)
        CHECK(xor_shift(n, 1, Modulus(bit_length(n) + 1)) == expected[n]);
    for (std::uint32_t n = 0; n < (1u << 12); ++n)
        CHECK(xor_shift(n, 1, Modulus(bit_length(n) + 1)) == xor_bitsum(n, 2 * n));
}

TEST_CASE("bit_length") {
    CHECK(bit_length(0) == 1);
    CHECK(bit_length(1) == 1);
    CHECK(bit_length(2) == 2);
    CHECK(bit_length(255) == 8);
    CHECK(bit_length(256) == 9);
}

}  // TEST_SUITE
