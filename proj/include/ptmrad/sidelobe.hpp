#pragma once

#include <cstdint>
#include <vector>

#include "ptmrad/integer.hpp"
#include "ptmrad/ptm.hpp"

namespace ptmrad {

// S_p(n) = sum_{i=1}^{2^(p-1)-1} w_i(n) B_i: everything in the half-range
// decomposition of a_n except the i = 0 (all-ones) component. Satisfies
// 2^(p-1) a_n = B_0 + S_p(n).
Int sidelobe_term(const PtmSequence& a, std::uint64_t n);

// One row of the moment identity sum_{n<L} n^m S_p(n) = N_m(L) B_0,
// where N_m(L) = 2^(p-1) P_m - sum_{n<L} n^m.
struct SidelobeMomentRecord {
    std::uint32_t m = 0;
    Int prouhet;       // P_m
    Int coefficient;   // N_m(L); depends only on (p, M, m)
    Int lhs;           // sum_{n<L} n^m S_p(n)
    Int rhs;           // N_m(L) * B_0
    bool equal = false;
};

struct SidelobeReport {
    Modulus p;
    std::uint32_t M = 0;
    std::uint64_t L = 0;
    Int b0;
    std::vector<SidelobeMomentRecord> records;  // m = 1..M
    bool all_equal = true;
};

// Evaluates both sides for every m = 1..M in exact arithmetic. An unequal
// row is an internal-consistency failure and throws.
SidelobeReport sidelobe_moments(const PtmSequence& a, std::uint32_t M,
                                std::uint64_t size_cap = kDefaultSizeCap);

}  // namespace ptmrad
