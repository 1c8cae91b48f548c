#include "ptmrad/sidelobe.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace ptmrad {

namespace {

// S_p(n) factors through v_p(n), so the moment pass only ever needs the p
// per-residue values S[v] = sum_{i=1}^{2^(p-1)-1} w_i(v) B_i.
//
// When p * max|a| * 2^(p-1) provably fits in 62 bits the accumulation runs
// in int64 (exact, overflow excluded by the bound); otherwise in mpz.
std::vector<Int> sidelobe_residues(const PtmSequence& a) {
    const Modulus p = a.modulus();
    const int pv = p.value();
    const std::uint32_t half = p.half_weight_count();

    Int max_abs = 0;
    for (const auto& g : a.generators()) {
        Int m = abs(g);
        if (m > max_abs) max_abs = m;
    }
    const Int budget = (Int(1) << 62) / (Int(pv) * Int(half));

    std::vector<Int> out(static_cast<std::size_t>(pv), Int(0));
    if (max_abs <= budget) {
        std::vector<long> gen(pv);
        for (int n = 0; n < pv; ++n) gen[n] = mpz_get_si(a.generators()[n].get_mpz_t());
        std::vector<long> acc(pv, 0);
        for (std::uint32_t i = 1; i < half; ++i) {
            long b = 0;
            for (int n = 0; n < pv; ++n)
                b += (i >> (pv - 1 - n)) & 1u ? -gen[n] : gen[n];
            for (int v = 0; v < pv; ++v)
                acc[v] += (i >> (pv - 1 - v)) & 1u ? -b : b;
        }
        for (int v = 0; v < pv; ++v) out[v] = Int(acc[v]);
    } else {
        Int b;
        for (std::uint32_t i = 1; i < half; ++i) {
            b = 0;
            for (int n = 0; n < pv; ++n) {
                if ((i >> (pv - 1 - n)) & 1u)
                    b -= a.generators()[n];
                else
                    b += a.generators()[n];
            }
            for (int v = 0; v < pv; ++v) {
                if ((i >> (pv - 1 - v)) & 1u)
                    out[v] -= b;
                else
                    out[v] += b;
            }
        }
    }
    return out;
}

}  // namespace

Int sidelobe_term(const PtmSequence& a, std::uint64_t n) {
    const Modulus p = a.modulus();
    const int q = p.value() - 1 - digit_sum_mod(n, p);
    Int sum = 0;
    Int b;
    for (std::uint32_t i = 1; i < p.half_weight_count(); ++i) {
        b = 0;
        for (int k = 0; k < p.value(); ++k) {
            if ((i >> (p.value() - 1 - k)) & 1u)
                b -= a.generators()[k];
            else
                b += a.generators()[k];
        }
        if ((i >> q) & 1u)
            sum -= b;
        else
            sum += b;
    }
    return sum;
}

SidelobeReport sidelobe_moments(const PtmSequence& a, std::uint32_t M, std::uint64_t size_cap) {
    const Modulus p = a.modulus();
    const std::uint64_t L = sequence_length(p, M, size_cap);
    SidelobeReport report{p, M, L, a.generator_sum(), {}, true};

    const std::vector<Int> S = sidelobe_residues(a);

    // Per-residue power sums T[v][m] = sum of n^m over v_p(n) = v, filled
    // in one streaming pass; T[0][m] is P_m.
    const int pv = p.value();
    std::vector<std::vector<Int>> T(pv, std::vector<Int>(M + 1, Int(0)));
    Int pw;
    for (std::uint64_t n = 0; n < L; ++n) {
        const int v = digit_sum_mod(n, p);
        pw = 1;
        for (std::uint32_t m = 1; m <= M; ++m) {
            pw *= static_cast<unsigned long>(n);
            T[v][m] += pw;
        }
    }

    report.records.reserve(M);
    for (std::uint32_t m = 1; m <= M; ++m) {
        SidelobeMomentRecord rec;
        rec.m = m;
        rec.prouhet = T[0][m];
        Int total = 0;
        for (int v = 0; v < pv; ++v) total += T[v][m];
        rec.coefficient = (rec.prouhet << (pv - 1)) - total;
        rec.lhs = 0;
        for (int v = 0; v < pv; ++v) rec.lhs += T[v][m] * S[v];
        rec.rhs = rec.coefficient * report.b0;
        rec.equal = rec.lhs == rec.rhs;
        if (!rec.equal) {
            report.all_equal = false;
            throw std::logic_error("sidelobe_moments: moment identity failed at m = " +
                                   std::to_string(m) + "; internal-consistency failure");
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace ptmrad
