#pragma once

#include <cstdint>
#include <vector>

#include "ptmrad/digits.hpp"
#include "ptmrad/integer.hpp"
#include "ptmrad/ptm.hpp"

namespace ptmrad {

// w_i(n) = (-1)^{d_{p-1-v_p(n)}} where d_k are the binary digits of the
// index i. Defined for all n >= 0; factors through v_p(n).
int weight(std::uint32_t i, std::uint64_t n, Modulus p);

enum class WeightRange { half, full };

// The row (w_0(n), w_1(n), ..., w_{K-1}(n)) for 0 <= n < p, with
// K = 2^(p-1) (half) or 2^p (full).
std::vector<int> weight_vector(int n, Modulus p, WeightRange range);

// The 2^p x p table of w_i(n), i down the rows, n = 0..p-1 across.
// Values for n >= p route through v_p, so the table is complete.
class WeightTable {
public:
    explicit WeightTable(Modulus p);

    Modulus modulus() const { return p_; }
    int at(std::uint32_t i, int n) const { return values_[std::size_t{i} * p_.value() + n]; }

private:
    Modulus p_;
    std::vector<signed char> values_;
};

// Discrete Rademacher transform coefficients B_i = sum_n w_i(n) a_n over
// the full index range i = 0..2^p-1. Antisymmetric: B_i = -B_{2^p-1-i},
// and B_0 is the generator sum.
struct CoefficientVector {
    Modulus p;
    std::vector<Int> B;
};

CoefficientVector rademacher_coeffs(const PtmSequence& a);

// Inverse transform: (1/2^(p-1)) sum_{i < 2^(p-1)} w_i(n) B_i. Equals the
// sequence term a_n; the division is exact and asserted.
Int reconstruct(const CoefficientVector& coeffs, std::uint64_t n);

// Walsh-style product over the set bits n_1 < ... < n_k of m:
// w~_i(m) = w_i(n_k) ... w_i(n_1); empty product (m = 0) is +1.
int walsh_weight(std::uint32_t i, std::uint32_t m, Modulus p);

// Full-range sum over i = 0..2^p-1 of w~_i(m): 2^p for m = 0, zero for
// every 1 <= m <= 2^p-1.
Int walsh_sum(std::uint32_t m, Modulus p);

// The same sum restricted to i < 2^(p-1). Not zero in general (at m = 1
// every w_i(0) on this range is +1, so it equals 2^(p-1)); kept for the
// verification report.
Int walsh_sum_half_range(std::uint32_t m, Modulus p);

// Walsh projection (1/2^p) sum_{i < 2^p} w~_i(m) B_i: picks out a_n when
// m = 2^n (0 <= n <= p-1) and vanishes for every other m. Division
// exactness asserted.
Int walsh_project(const CoefficientVector& coeffs, std::uint32_t m);

// Rademacher function phi_n at the dyadic point num/den, den a power of
// two, 0 <= num < den. phi_0 is +1 on [0,1/2), -1 on [1/2,1), extended
// 1-periodically; phi_n(x) = phi_0(2^n x). Sampling at i/2^p reproduces
// the weights: phi_n(i/2^p) = w_i(n) for n < p.
int rademacher_phi(std::uint64_t n, std::uint64_t num, std::uint64_t den);

}  // namespace ptmrad
