#include "ptmrad/ptm.hpp"

#include <stdexcept>
#include <string>

namespace ptmrad {

std::uint64_t sequence_length(Modulus p, std::uint32_t M, std::uint64_t size_cap) {
    std::uint64_t L = 1;
    for (std::uint32_t k = 0; k <= M; ++k) {
        if (L > size_cap / static_cast<std::uint64_t>(p.value()))
            throw std::invalid_argument("p^(M+1) = " + std::to_string(p.value()) + "^" +
                                        std::to_string(M + 1) + " exceeds the size cap " +
                                        std::to_string(size_cap));
        L *= static_cast<std::uint64_t>(p.value());
    }
    return L;
}

PtmSequence::PtmSequence(Modulus p, std::vector<Int> generators)
    : p_(p), generators_(std::move(generators)) {
    if (generators_.size() != static_cast<std::size_t>(p.value()))
        throw std::invalid_argument("mod-" + std::to_string(p.value()) +
                                    " sequence needs exactly " + std::to_string(p.value()) +
                                    " generators, got " + std::to_string(generators_.size()));
}

const Int& PtmSequence::term(std::uint64_t n) const {
    return generators_[static_cast<std::size_t>(digit_sum_mod(n, p_))];
}

Int PtmSequence::generator_sum() const {
    Int s = 0;
    for (const auto& g : generators_) s += g;
    return s;
}

int classic_v(std::uint64_t n) { return static_cast<int>(__builtin_popcountll(n)) & 1; }

int classic_w(std::uint64_t n) { return classic_v(n) ? -1 : 1; }

std::vector<int> classic_prefix(ClassicGenerator generator, std::size_t length) {
    if (length == 0) throw std::invalid_argument("classic_prefix: length must be >= 1");
    std::vector<int> out;
    switch (generator) {
        case ClassicGenerator::digit_sum:
            out.resize(length);
            for (std::size_t n = 0; n < length; ++n) out[n] = classic_v(n);
            break;
        case ClassicGenerator::recurrence:
            // v(0) = 0, v(2n) = v(n), v(2n+1) = 1 - v(n)
            out.resize(length);
            out[0] = 0;
            for (std::size_t n = 1; n < length; ++n)
                out[n] = (n & 1) ? 1 - out[n >> 1] : out[n >> 1];
            break;
        case ClassicGenerator::append_negate:
            // 0 -> 01 -> 0110 -> 01101001 -> ...
            out.push_back(0);
            while (out.size() < length) {
                const std::size_t half = out.size();
                for (std::size_t k = 0; k < half; ++k) out.push_back(1 - out[k]);
            }
            out.resize(length);
            break;
        case ClassicGenerator::morphism: {
            // iterate 0 -> 01, 1 -> 10 starting from "0"
            out.push_back(0);
            while (out.size() < length) {
                std::vector<int> next;
                next.reserve(out.size() * 2);
                for (int b : out) {
                    next.push_back(b);
                    next.push_back(1 - b);
                }
                out = std::move(next);
            }
            out.resize(length);
            break;
        }
    }
    return out;
}

PartitionBlocks ptm_partition(Modulus p, std::uint32_t M, std::uint64_t size_cap) {
    PartitionBlocks part{p, M, sequence_length(p, M, size_cap), {}};
    part.blocks.resize(static_cast<std::size_t>(p.value()));
    for (auto& b : part.blocks) b.reserve(part.L / p.value());
    for (std::uint64_t n = 0; n < part.L; ++n)
        part.blocks[static_cast<std::size_t>(digit_sum_mod(n, p))].push_back(n);
    return part;
}

int block_index(std::uint64_t n, Modulus p) { return digit_sum_mod(n, p); }

ProuhetSum prouhet_sum(const PartitionBlocks& blocks, std::uint32_t m) {
    std::vector<Int> sums(blocks.blocks.size(), Int(0));
    Int pw;
    for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
        for (std::uint64_t n : blocks.blocks[b]) {
            mpz_ui_pow_ui(pw.get_mpz_t(), n, m);
            sums[b] += pw;
        }
    }
    bool all_equal = true;
    for (std::size_t b = 1; b < sums.size(); ++b)
        if (sums[b] != sums[0]) all_equal = false;
    if (!all_equal && m <= blocks.M)
        throw std::logic_error("prouhet_sum: blocks disagree at m = " + std::to_string(m) +
                               " <= M; internal-consistency failure");
    return ProuhetSum{m, sums[0], all_equal};
}

Int moment_sum(const PtmSequence& a, std::uint32_t M, std::uint32_t m, std::uint64_t size_cap) {
    if (m > M) throw std::invalid_argument("moment_sum: exponent m must satisfy m <= M");
    const Modulus p = a.modulus();
    const std::uint64_t L = sequence_length(p, M, size_cap);

    // Per-residue power sums; T[0] is P_m.
    std::vector<Int> residue_power(static_cast<std::size_t>(p.value()), Int(0));
    Int pw;
    for (std::uint64_t n = 0; n < L; ++n) {
        mpz_ui_pow_ui(pw.get_mpz_t(), n, m);
        residue_power[static_cast<std::size_t>(digit_sum_mod(n, p))] += pw;
    }

    Int lhs = 0;
    for (int v = 0; v < p.value(); ++v) lhs += residue_power[v] * a.generators()[v];
    const Int rhs = residue_power[0] * a.generator_sum();
    if (lhs != rhs)
        throw std::logic_error("moment_sum: sum n^m a_n != P_m * (a_0+...+a_{p-1}); "
                               "internal-consistency failure");
    return lhs;
}

}  // namespace ptmrad
