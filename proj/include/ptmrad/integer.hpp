#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ptmrad {

// All "exact integer" values in this library are arbitrary-precision.
// Power sums outgrow 64 bits almost immediately (p = 3, M = 6 already
// does), and every identity here is an exact equality.
using Int = mpz_class;

inline Int int_pow(std::uint64_t base, std::uint32_t exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline bool divisible_by_pow2(const Int& v, unsigned k) {
    return mpz_divisible_2exp_p(v.get_mpz_t(), k) != 0;
}

// Exact division by 2^k. The transform identities guarantee divisibility;
// a remainder means the coefficient vector was not produced by the
// forward transform.
inline Int div_exact_pow2(const Int& v, unsigned k, const char* what) {
    if (!divisible_by_pow2(v, k))
        throw std::domain_error(std::string(what) + ": sum not divisible by 2^" + std::to_string(k));
    Int q;
    mpz_tdiv_q_2exp(q.get_mpz_t(), v.get_mpz_t(), k);
    return q;
}

inline Int int_from_string(const std::string& s) {
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
}

}  // namespace ptmrad
