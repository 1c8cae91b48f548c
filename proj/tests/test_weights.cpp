#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ptmrad/weights.hpp"
#include "oracles.hpp"

using namespace ptmrad;

namespace {

std::vector<Int> random_gens(std::mt19937_64& rng, int p, long bound = 999) {
    std::vector<Int> gens;
    for (int k = 0; k < p; ++k)
        gens.push_back(Int(static_cast<long>(rng() % (2 * bound + 1)) - bound));
    return gens;
}

}  // namespace

TEST_SUITE("weights") {

TEST_CASE("w_1 opening for p = 3") {
    const Modulus p3(3);
    const int expected[9] = {1, 1, -1, 1, -1, 1, -1, 1, 1};
    for (std::uint64_t n = 0; n < 9; ++n) CHECK(weight(1, n, p3) == expected[n]);
}

TEST_CASE("extreme rows are constant") {
    for (int p = 2; p <= 8; ++p) {
        const Modulus mod(p);
        for (std::uint64_t n = 0; n < 50; ++n) {
            CHECK(weight(0, n, mod) == 1);
            CHECK(weight(mod.weight_count() - 1, n, mod) == -1);
        }
    }
}

TEST_CASE("spot value w_6(7) for p = 3") {
    CHECK(weight(6, 7, Modulus(3)) == -1);
}

TEST_CASE("weight matches the digit-vector oracle") {
    for (int p = 2; p <= 6; ++p) {
        const Modulus mod(p);
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
            for (std::uint64_t n = 0; n < 64; ++n)
                CHECK(weight(i, n, mod) == oracle::weight(i, n, p));
    }
}

TEST_CASE("weight rejects out-of-range indices") {
    CHECK_THROWS_AS(weight(8, 0, Modulus(3)), std::invalid_argument);
}

TEST_CASE("weight factors through v_p") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
        const int p = 2 + static_cast<int>(rng() % 7);
        const Modulus mod(p);
        const std::uint32_t i = static_cast<std::uint32_t>(rng() % mod.weight_count());
        const std::uint64_t n = rng() % 100000, m = rng() % 100000;
        if (oracle::digit_sum_mod(n, p) == oracle::digit_sum_mod(m, p))
            CHECK(weight(i, n, mod) == weight(i, m, mod));
    }
}

TEST_CASE("antisymmetry across the index range") {
    for (int p = 2; p <= 8; ++p) {
        const Modulus mod(p);
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
            for (int n = 0; n < p; ++n)
                CHECK(weight(i, n, mod) == -weight(mod.weight_count() - 1 - i, n, mod));
    }
}

TEST_CASE("weight_vector rows for small p") {
    const Modulus p3(3);
    CHECK(weight_vector(0, p3, WeightRange::half) == std::vector<int>{1, 1, 1, 1});
    CHECK(weight_vector(1, p3, WeightRange::half) == std::vector<int>{1, 1, -1, -1});
    CHECK(weight_vector(2, p3, WeightRange::half) == std::vector<int>{1, -1, 1, -1});
    CHECK(weight_vector(0, Modulus(2), WeightRange::half) == std::vector<int>{1, 1});
    CHECK(weight_vector(0, p3, WeightRange::full).size() == 8);
    CHECK_THROWS_AS(weight_vector(3, p3, WeightRange::half), std::invalid_argument);
    CHECK_THROWS_AS(weight_vector(-1, p3, WeightRange::half), std::invalid_argument);
}

TEST_CASE("half-range rows are orthogonal") {
    for (int p = 2; p <= 10; ++p) {
        const Modulus mod(p);
        for (int n = 0; n < p; ++n) {
            const auto wn = weight_vector(n, mod, WeightRange::half);
            for (int m = 0; m < p; ++m) {
                const auto wm = weight_vector(m, mod, WeightRange::half);
                long dot = 0;
                for (std::size_t i = 0; i < wn.size(); ++i) dot += wn[i] * wm[i];
                CHECK(dot == (n == m ? static_cast<long>(mod.half_weight_count()) : 0));
            }
        }
    }
}

TEST_CASE("weight table matches pointwise evaluation") {
    for (int p = 2; p <= 6; ++p) {
        const Modulus mod(p);
        const WeightTable table(mod);
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
            for (int n = 0; n < p; ++n) CHECK(table.at(i, n) == weight(i, n, mod));
    }
}

TEST_CASE("coefficients for p = 2 and p = 3") {
    const Int a0 = 23, a1 = -7, a2 = 4;
    const CoefficientVector c2 = rademacher_coeffs(PtmSequence(Modulus(2), {a0, a1}));
    CHECK(c2.B[0] == a0 + a1);
    CHECK(c2.B[1] == a0 - a1);
    CHECK(c2.B[2] == -(a0 - a1));
    CHECK(c2.B[3] == -(a0 + a1));

    const CoefficientVector c3 = rademacher_coeffs(PtmSequence(Modulus(3), {a0, a1, a2}));
    CHECK(c3.B[0] == a0 + a1 + a2);
    CHECK(c3.B[1] == a0 + a1 - a2);
    CHECK(c3.B[2] == a0 - a1 + a2);
    CHECK(c3.B[3] == a0 - a1 - a2);

    const CoefficientVector pm = rademacher_coeffs(PtmSequence(Modulus(2), {Int(1), Int(-1)}));
    CHECK(pm.B == std::vector<Int>{Int(0), Int(2), Int(-2), Int(0)});
}

TEST_CASE("coefficient antisymmetry and B_0") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        const int p = 2 + static_cast<int>(rng() % 7);
        const Modulus mod(p);
        const PtmSequence a(mod, random_gens(rng, p));
        const CoefficientVector c = rademacher_coeffs(a);
        CHECK(c.B[0] == a.generator_sum());
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
            CHECK(c.B[i] == -c.B[mod.weight_count() - 1 - i]);
    }
}

TEST_CASE("reconstruct inverts the transform") {
    const PtmSequence pm(Modulus(2), {Int(1), Int(-1)});
    const CoefficientVector cpm = rademacher_coeffs(pm);
    for (std::uint64_t n = 0; n < 64; ++n) CHECK(reconstruct(cpm, n) == weight(1, n, Modulus(2)));

    const PtmSequence a3(Modulus(3), {Int(0), Int(1), Int(2)});
    const CoefficientVector c3 = rademacher_coeffs(a3);
    const int expected[9] = {0, 1, 2, 1, 2, 0, 2, 0, 1};
    for (std::uint64_t n = 0; n < 9; ++n) CHECK(reconstruct(c3, n) == expected[n]);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        const int p = 2 + static_cast<int>(rng() % 7);
        const Modulus mod(p);
        const PtmSequence a(mod, random_gens(rng, p));
        const CoefficientVector c = rademacher_coeffs(a);
        const std::uint64_t limit = static_cast<std::uint64_t>(p) * p * p;
        for (std::uint64_t n = 0; n < limit; ++n) CHECK(reconstruct(c, n) == a.term(n));
    }
}

TEST_CASE("reconstruct flags a corrupted coefficient vector") {
    CoefficientVector bad{Modulus(2), {Int(1), Int(0), Int(0), Int(-1)}};
    CHECK_THROWS_AS(reconstruct(bad, 0), std::domain_error);
    CoefficientVector short_vec{Modulus(2), {Int(1), Int(0)}};
    CHECK_THROWS_AS(reconstruct(short_vec, 0), std::invalid_argument);
}

TEST_CASE("walsh_weight basics") {
    for (int p = 2; p <= 8; ++p) {
        const Modulus mod(p);
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i) {
            CHECK(walsh_weight(i, 0, mod) == 1);
            for (int n = 0; n < p; ++n)
                CHECK(walsh_weight(i, std::uint32_t{1} << n, mod) == weight(i, n, mod));
        }
    }
    // from the p = 3 table: w_5(0) = -1, w_5(1) = 1
    CHECK(walsh_weight(5, 3, Modulus(3)) == -1);
}

TEST_CASE("walsh products match the popcount closed form") {
    // w~_i(m) = (-1)^{popcount(i & rev_p(m))}, rev_p reversing the low p bits
    for (int p = 2; p <= 8; ++p) {
        const Modulus mod(p);
        for (std::uint32_t m = 0; m < mod.weight_count(); ++m) {
            std::uint32_t rev = 0;
            for (int k = 0; k < p; ++k)
                if ((m >> k) & 1u) rev |= std::uint32_t{1} << (p - 1 - k);
            for (std::uint32_t i = 0; i < mod.weight_count(); ++i) {
                const int sign = __builtin_popcount(i & rev) % 2 ? -1 : 1;
                CHECK(walsh_weight(i, m, mod) == sign);
            }
        }
    }
}

TEST_CASE("the all-rows product is the classic sign sequence") {
    for (int p = 2; p <= 10; ++p) {
        const Modulus mod(p);
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
            CHECK(walsh_weight(i, mod.weight_count() - 1, mod) == classic_w(i));
    }
}

TEST_CASE("full-range walsh sums vanish") {
    for (int p = 2; p <= 8; ++p) {
        const Modulus mod(p);
        CHECK(walsh_sum(0, mod) == Int(mod.weight_count()));
        for (std::uint32_t m = 1; m < mod.weight_count(); ++m) CHECK(walsh_sum(m, mod) == 0);
    }
}

TEST_CASE("half-range walsh sum does not vanish at m = 1") {
    for (int p = 2; p <= 10; ++p) {
        const Modulus mod(p);
        CHECK(walsh_sum_half_range(1, mod) == Int(mod.half_weight_count()));
    }
}

TEST_CASE("walsh projection selects the generator slots") {
    const PtmSequence a3(Modulus(3), {Int(0), Int(1), Int(2)});
    const CoefficientVector c3 = rademacher_coeffs(a3);
    const long expected[8] = {0, 0, 1, 0, 2, 0, 0, 0};
    for (std::uint32_t m = 0; m < 8; ++m) CHECK(walsh_project(c3, m) == expected[m]);

    // brute-force double sum as an independent route
    for (std::uint32_t m = 0; m < 8; ++m) {
        Int sum = 0;
        for (std::uint32_t i = 0; i < 8; ++i) {
            int sign = 1;
            for (int n = 0; n < 3; ++n)
                if ((m >> n) & 1u) sign *= oracle::weight(i, n, 3);
            Int b = 0;
            for (int n = 0; n < 3; ++n) b += oracle::weight(i, n, 3) * a3.generators()[n];
            sum += sign * b;
        }
        CHECK(sum == 8 * walsh_project(c3, m));
    }
}

TEST_CASE("walsh projection on random sequences") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) {
        const int p = 2 + static_cast<int>(rng() % 7);
        const Modulus mod(p);
        const PtmSequence a(mod, random_gens(rng, p));
        const CoefficientVector c = rademacher_coeffs(a);
        for (std::uint32_t m = 0; m < mod.weight_count(); ++m) {
            Int expected = 0;
            if (m != 0 && (m & (m - 1)) == 0) expected = a.generators()[__builtin_ctz(m)];
            CHECK(walsh_project(c, m) == expected);
        }
    }
}

TEST_CASE("rademacher_phi square wave") {
    CHECK(rademacher_phi(0, 0, 2) == 1);
    CHECK(rademacher_phi(0, 1, 2) == -1);
    for (std::uint64_t n = 0; n < 20; ++n) CHECK(rademacher_phi(n, 0, 1024) == 1);
    CHECK_THROWS_AS(rademacher_phi(0, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(rademacher_phi(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(rademacher_phi(0, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(rademacher_phi(0, 9, 8), std::invalid_argument);
}

TEST_CASE("sampling the Rademacher functions reproduces the weights") {
    for (int p = 2; p <= 6; ++p) {
        const Modulus mod(p);
        const std::uint64_t den = std::uint64_t{1} << p;
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
            for (int n = 0; n < p; ++n)
                CHECK(rademacher_phi(n, i, den) == weight(i, n, mod));
    }
}

}  // TEST_SUITE
