#pragma once

#include <cstdint>
#include <vector>

#include "ptmrad/digits.hpp"

namespace ptmrad {

// E_p(i, n) = d_{p-1-v_p(n)}, the binary digit of i selected by n, so that
// w_i(n) = (-1)^{E_p(i,n)}.
int exponent(std::uint32_t i, std::uint64_t n, Modulus p);

// Both sides of the shift congruence
//   E_p(i, pn+r) - E_p(i, n) == E_p(x_r(i), n)   (mod 2)
// together with the branch-case digit formula for E_p(i, pn+r):
// digit index p-1-v_p(n)-r when v_p(n)+r < p, else p-1-s with
// s = v_p(n)+r-p.
struct ExponentShiftReport {
    int direct_bit = 0;      // E_p(i, pn+r) from the definition
    int branch_bit = 0;      // the branch-case digit formula
    int lhs_bit = 0;         // (E_p(i, pn+r) - E_p(i, n)) mod 2
    int rhs_bit = 0;         // E_p(x_r(i), n)
    bool branch_matches = false;
    bool congruence_holds = false;
};

ExponentShiftReport exponent_shift_check(std::uint32_t i, std::uint64_t n, int r, Modulus p);

// w_i(n) computed by peeling base-p digits of n through the recurrence
//   w_i(pn' + r) = w_{x_r(i)}(n') * w_i(n'),
// base case w_i(0) = (-1)^{d_{p-1}}. Agrees with weight(i, n, p).
int weight_recursive(std::uint32_t i, std::uint64_t n, Modulus p);

// One recurrence rule w_i(pn+r) = w_{companion}(n) * w_i(n).
struct RecurrenceRule {
    std::uint32_t i = 0;
    int r = 0;
    std::uint32_t companion = 0;  // x_r(i)
};

// The full (i, r) -> x_r(i) table for a modulus, i ascending then r.
std::vector<RecurrenceRule> recurrence_table(Modulus p);

}  // namespace ptmrad
