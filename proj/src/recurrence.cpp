#include "ptmrad/recurrence.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ptmrad {

namespace {

void check_index(std::uint32_t i, Modulus p, const char* who) {
    if (i >= p.weight_count())
        throw std::invalid_argument(std::string(who) + ": index " + std::to_string(i) +
                                    " out of range for p = " + std::to_string(p.value()));
}

int digit_of(std::uint32_t i, int k) { return (i >> k) & 1u; }

}  // namespace

int exponent(std::uint32_t i, std::uint64_t n, Modulus p) {
    check_index(i, p, "exponent");
    return digit_of(i, p.value() - 1 - digit_sum_mod(n, p));
}

ExponentShiftReport exponent_shift_check(std::uint32_t i, std::uint64_t n, int r, Modulus p) {
    check_index(i, p, "exponent_shift_check");
    if (r < 0 || r >= p.value())
        throw std::invalid_argument("exponent_shift_check: r must satisfy 0 <= r < p");
    const auto pv = static_cast<std::uint64_t>(p.value());
    if (n > (UINT64_MAX - static_cast<std::uint64_t>(r)) / pv)
        throw std::invalid_argument("exponent_shift_check: pn+r overflows");

    const std::uint64_t pnr = pv * n + static_cast<std::uint64_t>(r);
    const int v = digit_sum_mod(n, p);

    ExponentShiftReport rep;
    rep.direct_bit = exponent(i, pnr, p);
    rep.branch_bit = v + r < p.value() ? digit_of(i, p.value() - 1 - v - r)
                                       : digit_of(i, p.value() - 1 - (v + r - p.value()));
    rep.lhs_bit = rep.direct_bit ^ exponent(i, n, p);
    rep.rhs_bit = exponent(xor_shift(i, r, p), n, p);
    rep.branch_matches = rep.direct_bit == rep.branch_bit;
    rep.congruence_holds = rep.lhs_bit == rep.rhs_bit;
    return rep;
}

int weight_recursive(std::uint32_t i, std::uint64_t n, Modulus p) {
    check_index(i, p, "weight_recursive");
    const auto pv = static_cast<std::uint64_t>(p.value());

    // Base-p digits of n, least significant first. Level l evaluates at
    // n_l = n / p^l; the deepest level is n = 0.
    std::vector<int> residues;
    for (std::uint64_t m = n; m != 0; m /= pv) residues.push_back(static_cast<int>(m % pv));

    // Indices needed per level: each level-l index j asks for j and
    // x_{r_l}(j) one level down. At most 2^p distinct entries per level.
    std::vector<std::vector<std::uint32_t>> needed(residues.size() + 1);
    needed[0].push_back(i);
    std::unordered_set<std::uint32_t> uniq;
    for (std::size_t l = 0; l < residues.size(); ++l) {
        uniq.clear();
        for (std::uint32_t j : needed[l]) {
            uniq.insert(j);
            uniq.insert(xor_shift(j, residues[l], p));
        }
        needed[l + 1].assign(uniq.begin(), uniq.end());
    }

    // w_j(0) = (-1)^{d_{p-1}}, then fold back up through
    // w_j(p n' + r) = w_{x_r(j)}(n') * w_j(n').
    std::unordered_map<std::uint32_t, int> sign;
    for (std::uint32_t j : needed.back()) sign[j] = digit_of(j, p.value() - 1) ? -1 : 1;
    for (std::size_t l = residues.size(); l-- > 0;) {
        std::unordered_map<std::uint32_t, int> up;
        for (std::uint32_t j : needed[l])
            up[j] = sign.at(xor_shift(j, residues[l], p)) * sign.at(j);
        sign = std::move(up);
    }
    return sign.at(i);
}

std::vector<RecurrenceRule> recurrence_table(Modulus p) {
    std::vector<RecurrenceRule> rules;
    rules.reserve(std::size_t{p.weight_count()} * static_cast<std::size_t>(p.value()));
    for (std::uint32_t i = 0; i < p.weight_count(); ++i)
        for (int r = 0; r < p.value(); ++r) rules.push_back({i, r, xor_shift(i, r, p)});
    return rules;
}

}  // namespace ptmrad
