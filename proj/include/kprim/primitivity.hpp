#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kprim/factored.hpp"
#include "kprim/report.hpp"
#include "kprim/variant.hpp"

namespace kprim {

// A concrete violation: `divisor` divides the product (or lcm) of
// `helpers`, which are other members of the set.  For the strong notion
// helpers may repeat.
struct Witness {
    std::int64_t divisor = 0;
    std::vector<std::int64_t> helpers;
};

struct PrimitivityResult {
    bool primitive = true;
    std::optional<Witness> witness;
};

// Exact predicates are guaranteed only up to this set size.
inline constexpr std::size_t kExactSetCap = 64;

// No member divides a product of j distinct other members, for any
// 1 <= j <= k.  With cgs_single_j the check is for j = k only (the two
// differ only when |A| <= k).
PrimitivityResult is_k_primitive(const CandidateSet& A, int k, bool cgs_single_j = false);

// No member divides a product of at most k other members, repeats allowed.
PrimitivityResult is_strongly_k_primitive(const CandidateSet& A, int k);

// No member divides the lcm of at most k distinct other members.
PrimitivityResult is_lcm_k_primitive(const CandidateSet& A, int k);

PrimitivityResult check_primitivity(const CandidateSet& A, int k, Variant notion);

// Refutation-only fallback for sets beyond the exact cap: randomized
// probing that can return a witness or give up.
std::optional<Witness> refute_primitivity_randomized(const CandidateSet& A, int k,
                                                     Variant notion, std::uint64_t seed,
                                                     long long attempts = 20'000);

// Incremental feasibility for the subset search: assuming `members` is
// already feasible for the notion, report a violation introduced by
// adding `cand` (nullopt if the extended set stays feasible).
std::optional<Witness> violation_on_add(const std::vector<FactoredInt>& members,
                                        const FactoredInt& cand, int k, Variant notion);

// Small-support structure check: for an lcm k-primitive A with
// |P(A)| <= k, the cardinality bound |A| <= |P(A)|, the injective
// prime assignment n -> p with v_p(n) maximal only at n, and the
// weighted-sum comparison against the support primes; for
// k < |P(A)| < 2k the relaxed bound |A| <= |P(A)| + 1.
struct YsmallReport {
    bool precondition_ok = true;  // A really is lcm k-primitive
    std::optional<Witness> precondition_witness;
    long long set_size = 0;
    long long support_size = 0;
    bool card_bound_applicable = false;  // |P(A)| <= k
    bool card_bound_ok = true;
    bool extended_bound_applicable = false;  // k < |P(A)| < 2k
    bool extended_bound_ok = true;
    std::vector<std::pair<std::int64_t, std::int64_t>> assignment;  // n -> f(n)
    bool assignment_ok = true;
    std::vector<MarginReport> sum_checks;
    bool pass = false;
};

YsmallReport check_ysmall(const CandidateSet& A, int k,
                          const std::vector<double>& lambdas = {0.0, 0.5, 1.0});

} // namespace kprim
