#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "srg/dioph.hpp"
#include "srg/errors.hpp"

using namespace srg;

TEST_CASE("scan to 10^6 finds exactly the three known solutions") {
    auto sols = dioph_scan(1000000);
    REQUIRE(sols.size() == 3);
    CHECK(sols[0].n == 1);
    CHECK(sols[0].m == 1);
    CHECK(sols[0].u == 5);
    CHECK(sols[1].n == 2);
    CHECK(sols[1].m == 2);
    CHECK(sols[1].u == 7);
    CHECK(sols[2].n == 4);
    CHECK(sols[2].m == 3);
    CHECK(sols[2].u == 11);
}

TEST_CASE("both forms of the equation hold exactly for each solution") {
    for (const auto& s : dioph_scan(1000)) {
        mpz_class lhs = mpz_class(s.n) * s.n + 3 * s.n - 1;
        mpz_class p3 = 1;
        for (int i = 0; i < s.m; i++) p3 *= 3;
        CHECK(lhs == p3);
        mpz_class u(s.u);
        CHECK(u == 2 * s.n + 3);
        CHECK(u * u - 13 == 4 * p3);
    }
}

TEST_CASE("n = 3 gives 17, not a power of 3") {
    auto sols = dioph_scan(3);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].n == 1);
    CHECK(sols[1].n == 2);
}

TEST_CASE("scan results are prefix-stable") {
    auto big = dioph_scan(100000);
    auto small = dioph_scan(500);
    for (const auto& s : small) {
        bool found = false;
        for (const auto& b : big) found = found || (b.n == s.n && b.m == s.m);
        CHECK(found);
    }
}

TEST_CASE("scan rejects an empty range") {
    CHECK_THROWS_AS(dioph_scan(0), ContractError);
}
