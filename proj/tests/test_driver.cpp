#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qshor/driver.hpp"

using namespace qshor;
using u64 = std::uint64_t;

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(101));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(!is_prime(91));  // 7 * 13
    CHECK(is_prime(65537));
}

TEST_CASE("precheck catches trivial cases") {
    CHECK_THROWS_AS(precheck(1), std::invalid_argument);
    CHECK(precheck(22).kind == Precheck::Kind::TrivialFactor);
    CHECK(precheck(22).factor == 2);
    CHECK(precheck(27).kind == Precheck::Kind::TrivialFactor);  // 3^3
    CHECK(precheck(27).factor == 3);
    CHECK(precheck(9).kind == Precheck::Kind::TrivialFactor);  // 3^2
    CHECK(precheck(9).factor == 3);
    CHECK(precheck(13).kind == Precheck::Kind::Reject);  // prime
    CHECK(precheck(15).kind == Precheck::Kind::Ok);
    CHECK(precheck(21).kind == Precheck::Kind::Ok);
}

TEST_CASE("factor derivation from a period") {
    auto f = derive_factors(15, 7, 4);  // 7^2 = 4; gcd(3,15), gcd(5,15)
    REQUIRE(f.has_value());
    CHECK(f->first == 3);
    CHECK(f->second == 5);
    CHECK(!derive_factors(15, 14, 2).has_value());  // 14 = -1 mod 15
    CHECK(!derive_factors(21, 5, 6).has_value());   // 5^3 = 20 = -1 mod 21
    auto g = derive_factors(21, 2, 6);
    REQUIRE(g.has_value());
    CHECK(g->first * g->second == 21);
    CHECK_THROWS_AS(derive_factors(15, 7, 0), std::invalid_argument);
    CHECK_THROWS_AS(derive_factors(15, 7, 3), std::invalid_argument);  // not a period
}

TEST_CASE("end-to-end factoring of the demo semiprimes") {
    for (u64 N : {15u, 21u}) {
        FactorResult r = factor(N, 25, 1);
        REQUIRE(r.factors.has_value());
        CHECK(r.factors->first * r.factors->second == N);
        CHECK(r.factors->first > 1);
        CHECK(!r.from_precheck);
        CHECK(r.attempts.size() <= 25);
        CHECK(r.base >= 2);
    }
}

TEST_CASE("factoring shortcuts and failure states") {
    FactorResult even = factor(16, 5, 0);
    REQUIRE(even.factors.has_value());
    CHECK(even.factors->first == 2);
    CHECK(even.from_precheck);
    FactorResult prime = factor(13, 5, 0);
    CHECK(!prime.factors.has_value());
    FactorResult pp = factor(27, 5, 0);
    REQUIRE(pp.factors.has_value());
    CHECK(pp.factors->first == 3);
}

TEST_CASE("factoring is deterministic per seed") {
    FactorResult a = factor(15, 25, 7);
    FactorResult b = factor(15, 25, 7);
    REQUIRE(a.factors.has_value());
    CHECK(a.factors == b.factors);
    CHECK(a.base == b.base);
    CHECK(a.attempts.size() == b.attempts.size());
}
