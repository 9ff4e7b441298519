#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kprim {

// Seeded property suites over the structural machinery.  Each suite
// counts valid generated inputs (rejection sampling through the exact
// predicates) and failures of the asserted conclusions.
struct LabSuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    long long trials = 0;    // valid inputs exercised
    long long failures = 0;
    std::string first_failure;
    bool pass = false;
};

// Greedy block splits on random smooth integers: products reconstruct t,
// block counts and sizes respect the bounds, q-blocks are coprime.
LabSuiteResult lab_split_blocks(long long trials, std::uint64_t seed);

// derive_map_lcm on random lcm k-primitive composite sets: injectivity
// and lcm (k-1)-primitivity of the image (re-checked here against the
// predicate, independent of the operation's own asserts).
LabSuiteResult lab_derive_map_lcm(long long trials, std::uint64_t seed);

// derive_map_strong on random strongly k-primitive sets whose support
// primes each divide two members.
LabSuiteResult lab_derive_map_strong(long long trials, std::uint64_t seed);

// Exhaustive smooth-count bound at desk scale, k in {2, 3}.
LabSuiteResult lab_smooth_count(long long z);

// Exhaustive small-support sweep over [2..n_max], k in {2, 3}.
LabSuiteResult lab_ysmall(int n_max);

std::vector<LabSuiteResult> run_all_labs(long long trials, std::uint64_t seed);

} // namespace kprim
