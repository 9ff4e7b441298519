#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace kprim {

// An integer together with its full prime factorization and the derived
// quantities the structural lemmas work with: P(n) the largest prime
// factor, Q(n) the largest prime-power factor p^{v_p(n)}, and Omega(n)
// the number of prime factors with multiplicity.
struct FactoredInt {
    std::int64_t n = 1;
    std::vector<std::pair<std::int64_t, int>> factors;  // (prime, exponent), primes increasing
    std::int64_t big_prime = 1;        // P(n)
    std::int64_t big_prime_power = 1;  // Q(n)
    int omega = 0;                     // Omega(n)

    int exponent_of(std::int64_t p) const {
        for (const auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    }
    bool is_composite() const { return !(factors.size() == 1 && factors[0].second == 1); }
};

// Complete factorization by trial division over cached small primes.
// Requires 1 < n <= 10^12.
FactoredInt factor(std::int64_t n);

// A finite set of integers > 1 with cached factorizations and prime
// support P(A).  Members are kept sorted and distinct.
class CandidateSet {
public:
    CandidateSet() = default;
    explicit CandidateSet(const std::vector<std::int64_t>& values);
    static CandidateSet of_factored(std::vector<FactoredInt> members);

    const std::vector<FactoredInt>& members() const { return members_; }
    const std::vector<std::int64_t>& support() const { return support_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    std::vector<std::int64_t> values() const;

    // members divisible by p
    std::vector<const FactoredInt*> members_with_prime(std::int64_t p) const;

private:
    std::vector<FactoredInt> members_;
    std::vector<std::int64_t> support_;
    void finish();
};

} // namespace kprim
