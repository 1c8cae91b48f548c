#pragma once

#include <cstdint>
#include <vector>

#include "ptmrad/digits.hpp"
#include "ptmrad/integer.hpp"

namespace ptmrad {

// Default cap on materialized sequence/partition length L = p^(M+1).
inline constexpr std::uint64_t kDefaultSizeCap = 10'000'000;

// L = p^(M+1), refused above the cap before anything is materialized.
std::uint64_t sequence_length(Modulus p, std::uint32_t M, std::uint64_t size_cap = kDefaultSizeCap);

// A mod-p PTM sequence: p generators a_0..a_{p-1} and the aperiodic rule
// a_n = a_{v_p(n)}.
class PtmSequence {
public:
    PtmSequence(Modulus p, std::vector<Int> generators);

    Modulus modulus() const { return p_; }
    const std::vector<Int>& generators() const { return generators_; }
    const Int& term(std::uint64_t n) const;
    Int generator_sum() const;

private:
    Modulus p_;
    std::vector<Int> generators_;
};

inline Int ptm_term(const PtmSequence& a, std::uint64_t n) { return a.term(n); }

// The classic p = 2 sequence: v(n) in {0,1} and w(n) = (-1)^{v(n)}.
int classic_v(std::uint64_t n);
int classic_w(std::uint64_t n);

enum class ClassicGenerator { digit_sum, recurrence, append_negate, morphism };

// First `length` terms of classic_v by any of the four equivalent
// generators (digit sum, the v(2n)/v(2n+1) recurrence, append-negate
// doubling, or the 0->01 / 1->10 morphism).
std::vector<int> classic_prefix(ClassicGenerator generator, std::size_t length);

// The PTM p-block partition of {0,..,L-1}, L = p^(M+1): n lands in
// blocks[v_p(n)]. Blocks are ascending, mutually disjoint, equal-sized.
struct PartitionBlocks {
    Modulus p;
    std::uint32_t M = 0;
    std::uint64_t L = 0;
    std::vector<std::vector<std::uint64_t>> blocks;
};

PartitionBlocks ptm_partition(Modulus p, std::uint32_t M,
                              std::uint64_t size_cap = kDefaultSizeCap);

// Streaming membership predicate, for L beyond the materialization cap:
// the block index of n is v_p(n).
int block_index(std::uint64_t n, Modulus p);

// P_m = sum over S_0 of n^m. all_blocks_equal records whether every block
// produced the same power sum; guaranteed (and enforced) for m <= M, merely
// reported for m > M.
struct ProuhetSum {
    std::uint32_t m = 0;
    Int value;
    bool all_blocks_equal = false;
};

ProuhetSum prouhet_sum(const PartitionBlocks& blocks, std::uint32_t m);

// sum_{n<L} n^m a_n for L = p^(M+1), 0 <= m <= M. Verifies the identity
// sum n^m a_n = P_m * (a_0 + ... + a_{p-1}) and returns the common value.
Int moment_sum(const PtmSequence& a, std::uint32_t M, std::uint32_t m,
               std::uint64_t size_cap = kDefaultSizeCap);

}  // namespace ptmrad
