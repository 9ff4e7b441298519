#include "kprim/factored.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "kprim/primes.hpp"

namespace kprim {

namespace {

// shared sieve for trial division; sqrt(10^12) = 10^6
const std::vector<std::int64_t>& small_primes() {
    static const PrimeTable table(1'000'000);
    return table.primes();
}

} // namespace

FactoredInt factor(std::int64_t n) {
    if (n <= 1) throw std::domain_error("factor requires n > 1");
    if (n > 1'000'000'000'000LL)
        throw std::domain_error("factor supports n <= 10^12, got " + std::to_string(n));

    FactoredInt f;
    f.n = n;
    std::int64_t rest = n;
    for (std::int64_t p : small_primes()) {
        if (p * p > rest) break;
        if (rest % p) continue;
        int e = 0;
        std::int64_t q = 1;
        while (rest % p == 0) {
            rest /= p;
            ++e;
            q *= p;
        }
        f.factors.emplace_back(p, e);
        f.omega += e;
        f.big_prime = p;
        f.big_prime_power = std::max(f.big_prime_power, q);
    }
    if (rest > 1) {  // remaining cofactor is prime
        f.factors.emplace_back(rest, 1);
        f.omega += 1;
        f.big_prime = rest;
        f.big_prime_power = std::max(f.big_prime_power, rest);
    }
    return f;
}

CandidateSet::CandidateSet(const std::vector<std::int64_t>& values) {
    std::vector<std::int64_t> vals = values;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    members_.reserve(vals.size());
    for (std::int64_t v : vals) members_.push_back(factor(v));
    finish();
}

CandidateSet CandidateSet::of_factored(std::vector<FactoredInt> members) {
    CandidateSet out;
    out.members_ = std::move(members);
    std::sort(out.members_.begin(), out.members_.end(),
              [](const FactoredInt& a, const FactoredInt& b) { return a.n < b.n; });
    out.members_.erase(std::unique(out.members_.begin(), out.members_.end(),
                                   [](const FactoredInt& a, const FactoredInt& b) {
                                       return a.n == b.n;
                                   }),
                       out.members_.end());
    out.finish();
    return out;
}

void CandidateSet::finish() {
    for (const auto& m : members_)
        for (const auto& [p, e] : m.factors) support_.push_back(p);
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

std::vector<std::int64_t> CandidateSet::values() const {
    std::vector<std::int64_t> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.n);
    return out;
}

std::vector<const FactoredInt*> CandidateSet::members_with_prime(std::int64_t p) const {
    std::vector<const FactoredInt*> out;
    for (const auto& m : members_)
        if (m.exponent_of(p) > 0) out.push_back(&m);
    return out;
}

} // namespace kprim
