#include "ptmrad/weights.hpp"

#include <stdexcept>
#include <string>

namespace ptmrad {

namespace {

void check_index(std::uint32_t i, Modulus p, const char* who) {
    if (i >= p.weight_count())
        throw std::invalid_argument(std::string(who) + ": index " + std::to_string(i) +
                                    " out of range for p = " + std::to_string(p.value()));
}

}  // namespace

int weight(std::uint32_t i, std::uint64_t n, Modulus p) {
    check_index(i, p, "weight");
    const int q = p.value() - 1 - digit_sum_mod(n, p);
    return (i >> q) & 1u ? -1 : 1;
}

std::vector<int> weight_vector(int n, Modulus p, WeightRange range) {
    if (n < 0 || n >= p.value())
        throw std::invalid_argument("weight_vector: n must satisfy 0 <= n < p");
    const std::uint32_t count =
        range == WeightRange::half ? p.half_weight_count() : p.weight_count();
    std::vector<int> row(count);
    const int q = p.value() - 1 - n;  // v_p(n) = n on this range
    for (std::uint32_t i = 0; i < count; ++i) row[i] = (i >> q) & 1u ? -1 : 1;
    return row;
}

WeightTable::WeightTable(Modulus p) : p_(p) {
    const std::size_t cols = static_cast<std::size_t>(p.value());
    values_.resize(std::size_t{p.weight_count()} * cols);
    for (std::uint32_t i = 0; i < p.weight_count(); ++i)
        for (std::size_t n = 0; n < cols; ++n)
            values_[std::size_t{i} * cols + n] =
                static_cast<signed char>((i >> (cols - 1 - n)) & 1u ? -1 : 1);
}

CoefficientVector rademacher_coeffs(const PtmSequence& a) {
    const Modulus p = a.modulus();
    CoefficientVector out{p, std::vector<Int>(p.weight_count())};
    for (std::uint32_t i = 0; i < p.weight_count(); ++i) {
        Int b = 0;
        for (int n = 0; n < p.value(); ++n) {
            if ((i >> (p.value() - 1 - n)) & 1u)
                b -= a.generators()[n];
            else
                b += a.generators()[n];
        }
        out.B[i] = std::move(b);
    }
    // Antisymmetry must hold by construction.
    for (std::uint32_t i = 0; i < p.half_weight_count(); ++i)
        if (out.B[i] != -out.B[p.weight_count() - 1 - i])
            throw std::logic_error("rademacher_coeffs: antisymmetry violated; "
                                   "internal-consistency failure");
    return out;
}

Int reconstruct(const CoefficientVector& coeffs, std::uint64_t n) {
    const Modulus p = coeffs.p;
    if (coeffs.B.size() != p.weight_count())
        throw std::invalid_argument("reconstruct: coefficient vector has wrong length");
    const int q = p.value() - 1 - digit_sum_mod(n, p);
    Int sum = 0;
    for (std::uint32_t i = 0; i < p.half_weight_count(); ++i) {
        if ((i >> q) & 1u)
            sum -= coeffs.B[i];
        else
            sum += coeffs.B[i];
    }
    return div_exact_pow2(sum, static_cast<unsigned>(p.value() - 1), "reconstruct");
}

int walsh_weight(std::uint32_t i, std::uint32_t m, Modulus p) {
    check_index(i, p, "walsh_weight");
    check_index(m, p, "walsh_weight");
    int sign = 1;
    for (std::uint32_t bits = m; bits != 0; bits &= bits - 1) {
        const int n = __builtin_ctz(bits);  // set-bit position, < p
        sign *= (i >> (p.value() - 1 - n)) & 1u ? -1 : 1;
    }
    return sign;
}

Int walsh_sum(std::uint32_t m, Modulus p) {
    check_index(m, p, "walsh_sum");
    long s = 0;
    for (std::uint32_t i = 0; i < p.weight_count(); ++i) s += walsh_weight(i, m, p);
    return Int(s);
}

Int walsh_sum_half_range(std::uint32_t m, Modulus p) {
    check_index(m, p, "walsh_sum_half_range");
    long s = 0;
    for (std::uint32_t i = 0; i < p.half_weight_count(); ++i) s += walsh_weight(i, m, p);
    return Int(s);
}

Int walsh_project(const CoefficientVector& coeffs, std::uint32_t m) {
    const Modulus p = coeffs.p;
    check_index(m, p, "walsh_project");
    if (coeffs.B.size() != p.weight_count())
        throw std::invalid_argument("walsh_project: coefficient vector has wrong length");
    Int sum = 0;
    for (std::uint32_t i = 0; i < p.weight_count(); ++i) {
        if (walsh_weight(i, m, p) < 0)
            sum -= coeffs.B[i];
        else
            sum += coeffs.B[i];
    }
    return div_exact_pow2(sum, static_cast<unsigned>(p.value()), "walsh_project");
}

int rademacher_phi(std::uint64_t n, std::uint64_t num, std::uint64_t den) {
    if (den == 0 || (den & (den - 1)) != 0)
        throw std::invalid_argument("rademacher_phi: denominator must be a power of two");
    if (num >= den)
        throw std::invalid_argument("rademacher_phi: point must lie in [0, 1)");
    // phi_0(2^n x) depends on frac(2^n num / den); for n >= log2(den) the
    // argument is an integer, so the fraction is 0.
    const int k = bit_length(den) - 1;  // den = 2^k
    if (n >= static_cast<std::uint64_t>(k)) return 1;
    const std::uint64_t t = (num << n) & (den - 1);
    return 2 * t < den ? 1 : -1;
}

}  // namespace ptmrad
