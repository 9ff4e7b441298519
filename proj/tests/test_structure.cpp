#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "kprim/lab.hpp"
#include "kprim/structure.hpp"
#include "oracles.hpp"

using namespace kprim;

TEST_CASE("prime-power split of 2520") {
    const BlockSplit s = split_blocks_q(factor(2520), 2520, 3, 1.0 / 3.0);
    CHECK(s.blocks == std::vector<std::int64_t>{72, 35});  // 9*8, then 7*5
    CHECK(s.l() == 2);
}

TEST_CASE("small t collapses to a single block") {
    const BlockSplit s = split_blocks_q(factor(6), 216, 3, 1.0 / 3.0);
    CHECK(s.blocks == std::vector<std::int64_t>{6});
}

TEST_CASE("split preconditions") {
    // Q(64) = 64 is nowhere near 64^(1/3)
    CHECK_THROWS_AS(split_blocks_q(factor(64), 64, 3, 1.0 / 3.0), std::domain_error);
    CHECK_THROWS_AS(split_blocks_q(factor(2520), 2520, 3, 0.5), std::domain_error);  // theta > 1/k
    CHECK_THROWS_AS(split_blocks_q(factor(2520), 1000, 3, 1.0 / 3.0), std::domain_error);  // t > z
    // P(30) = 5 >= 30^0.2 = 1.97... no: 30^0.2 ~ 1.97, so 5 violates
    CHECK_THROWS_AS(split_blocks_p(factor(30), 30, 3, 0.2), std::domain_error);
}

TEST_CASE("prime-multiset split of a power of two") {
    // the boundary case: 2*2 = 4 equals 64^(1/3) exactly, so the first
    // block closes at 2*2*2
    const BlockSplit s = split_blocks_p(factor(64), 64, 3, 0.2);
    CHECK(s.blocks == std::vector<std::int64_t>{8, 8});
}

TEST_CASE("prime-power small branch") {
    const BlockSplit s = split_blocks_p(factor(32), 100000, 3, 0.2);
    CHECK(s.blocks == std::vector<std::int64_t>{32});  // 32 <= 1e5^(1/3) = 46.4
}

TEST_CASE("split structural identities on random smooth inputs") {
    const LabSuiteResult r = lab_split_blocks(400, 2024);
    INFO(r.first_failure);
    CHECK(r.trials >= 400);
    CHECK(r.failures == 0);
}

TEST_CASE("derived map, lcm notion") {
    SUBCASE("partition example {12, 8}") {
        const DerivedMapResult d = derive_map_lcm(CandidateSet({12, 8}), 2);
        CHECK(d.t_double_prime == std::vector<std::int64_t>{12});  // Q(12) = 4 divides 8
        CHECK(d.t_prime == std::vector<std::int64_t>{8});
        CHECK(d.image ==
              std::vector<std::pair<std::int64_t, std::int64_t>>{{8, 8}, {12, 3}});
        CHECK(d.image_set.values() == std::vector<std::int64_t>{3, 8});
    }
    SUBCASE("all in T-prime: {4, 6, 10}") {
        const DerivedMapResult d = derive_map_lcm(CandidateSet({4, 6, 10}), 2);
        CHECK(d.t_prime == std::vector<std::int64_t>{4, 6, 10});
        CHECK(d.image_set.values() == std::vector<std::int64_t>{3, 4, 5});
    }
    SUBCASE("singleton") {
        const DerivedMapResult d = derive_map_lcm(CandidateSet({9}), 2);
        CHECK(d.t_prime == std::vector<std::int64_t>{9});
        CHECK(d.image_set.values() == std::vector<std::int64_t>{9});
    }
    SUBCASE("rejects non-primitive input") {
        CHECK_THROWS_AS(derive_map_lcm(CandidateSet({4, 8}), 2), std::invalid_argument);
    }
    SUBCASE("rejects prime members") {
        CHECK_THROWS_AS(derive_map_lcm(CandidateSet({5, 6}), 2), std::invalid_argument);
    }
}

TEST_CASE("derived map, strong notion") {
    SUBCASE("valid two-member input") {
        // 48 = 2^4*3 and 162 = 2*3^4 cover both primes twice and neither
        // divides a product of two copies of the other
        const DerivedMapResult d = derive_map_strong(CandidateSet({48, 162}), 2);
        CHECK(d.image ==
              std::vector<std::pair<std::int64_t, std::int64_t>>{{48, 16}, {162, 54}});
    }
    SUBCASE("input that is not strongly 2-primitive is rejected") {
        // 4 | 12, so the set fails even plain primitivity
        CHECK_THROWS_AS(derive_map_strong(CandidateSet({4, 12, 9, 18}), 2),
                        std::invalid_argument);
    }
    SUBCASE("support prime covered once is rejected, naming the prime") {
        try {
            derive_map_strong(CandidateSet({4, 6}), 2);
            FAIL("expected invalid_argument");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("3") != std::string::npos);
        }
    }
}

TEST_CASE("derived maps on generated valid inputs") {
    const LabSuiteResult lcm_suite = lab_derive_map_lcm(500, 31337);
    INFO(lcm_suite.first_failure);
    CHECK(lcm_suite.trials >= 500);
    CHECK(lcm_suite.failures == 0);

    const LabSuiteResult strong_suite = lab_derive_map_strong(500, 31338);
    INFO(strong_suite.first_failure);
    CHECK(strong_suite.trials >= 500);
    CHECK(strong_suite.failures == 0);
}

TEST_CASE("smooth-count bound, exhaustively at desk scale") {
    const SmoothCountCheck c2 = smooth_count_exhaustive(200, 2);
    CHECK(c2.pass);
    CHECK(c2.pool.size() > 5);  // 30, 60, 70, ... qualify
    CHECK(std::find(c2.pool.begin(), c2.pool.end(), 30) != c2.pool.end());

    const SmoothCountCheck c3 = smooth_count_exhaustive(200, 3);
    CHECK(c3.pass);
    CHECK(c3.pool.empty());  // 2*3*5*7 = 210 is already past 200
}
