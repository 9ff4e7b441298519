#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kprim/factored.hpp"
#include "kprim/primitivity.hpp"

namespace kprim {

// A greedy grouping of t's prime-power (or prime) factors into at most k
// blocks, each at most z^{1/k+theta}: extend a block while the running
// product stays within z^{1/k}, then close it with one more factor.
struct BlockSplit {
    std::int64_t t = 1;
    std::vector<std::int64_t> blocks;
    int l() const { return static_cast<int>(blocks.size()); }
};

// Grouping over the distinct prime powers of t, in decreasing order;
// blocks come out pairwise coprime.  Requires t <= z, Q(t) < z^theta and
// 0 < theta <= 1/k.
BlockSplit split_blocks_q(const FactoredInt& t, double z, int k, double theta);

// Grouping over the prime multiset of t (repetitions kept, decreasing);
// blocks need not be coprime.  Requires t <= z and P(t) < z^theta.
BlockSplit split_blocks_p(const FactoredInt& t, double z, int k, double theta);

// Result of the divisor-shrinking maps that drive the induction: the
// input splits into (T', T''), every member maps injectively, and the
// image is primitive at level k-1 for the same notion.
struct DerivedMapResult {
    std::vector<std::int64_t> t_prime;                         // T'
    std::vector<std::int64_t> t_double_prime;                  // T''
    std::vector<std::pair<std::int64_t, std::int64_t>> image;  // t -> f(t)
    CandidateSet image_set;
    bool coprime_prime_power_asserted = false;  // T' structure was checkable
};

// f(t) = Q(t) when no other member is divisible by Q(t), else t/Q(t).
// Requires composite members and T lcm k-primitive (re-verified).  The
// asserted conclusions (injectivity, lcm (k-1)-primitivity of the image,
// and - when every support prime divides two members - that f(T') is a
// set of pairwise coprime proper prime powers) are re-checked; a failure
// throws std::logic_error carrying the counterexample.
DerivedMapResult derive_map_lcm(const CandidateSet& T, int k);

// f(t) = t / P(t).  Requires composite members, |T_p| >= 2 for every
// support prime p, and T strongly k-primitive (re-verified).  Asserts
// injectivity and strong (k-1)-primitivity of the image.
DerivedMapResult derive_map_strong(const CandidateSet& T, int k);

// Desk-scale exhaustive check of the smooth-count bound: among subsets of
// {t in [2..z] : Q(t) < t^(1/k)} that are lcm k-primitive, the largest
// one truncated at any z' <= z has at most z'^(2/k) members.
struct SmoothCountCheck {
    long long z = 0;
    int k = 0;
    std::vector<std::int64_t> pool;
    long long max_set_size = 0;
    std::vector<std::int64_t> max_set;
    bool pass = false;
};

SmoothCountCheck smooth_count_exhaustive(long long z, int k);

} // namespace kprim
