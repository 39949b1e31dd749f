#include "doctest.h"

#include "heilbronn/decomposition.hpp"
#include "heilbronn/primes.hpp"
#include "oracles.hpp"

using namespace heilbronn;

TEST_CASE("minimal splittings")
{
    auto d = frobenius_decompose(5, 2, 3);
    REQUIRE(d);
    CHECK(d->u == 1);
    CHECK(d->v == 1);
    CHECK(d->valid());

    CHECK_FALSE(frobenius_decompose(7, 2, 3));

    auto d37 = frobenius_decompose(37, 2, 3);
    REQUIRE(d37);
    CHECK(d37->u == 11);
    CHECK(d37->v == 5);
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(frobenius_decompose(5, 3, 2), precondition_error);
    CHECK_THROWS_AS(frobenius_decompose(3, 2, 3), precondition_error);
    CHECK_THROWS_AS(frobenius_decompose(31, 2, 4), precondition_error);
    CHECK_THROWS_AS(frobenius_decompose(30, 2, 3), precondition_error);
}

TEST_CASE("guarantee thresholds")
{
    CHECK(guarantee_threshold(2, 3) == 36);
    CHECK(guarantee_threshold(2, 5) == 100);
    CHECK(guarantee_threshold(3, 5) == 225);
    CHECK_THROWS_AS(guarantee_threshold(3, 2), precondition_error);
}

TEST_CASE("7, 11, 19 are the only gaps below the (2,3) threshold")
{
    std::vector<uint64_t> missing;
    for (uint32_t p : primes_up_to(35)) {
        if (p <= 3)
            continue;
        if (!frobenius_decompose(p, 2, 3))
            missing.push_back(p);
    }
    CHECK(missing == std::vector<uint64_t>{7, 11, 19});
}

TEST_CASE("every prime at or above q1^2 q2^2 splits")
{
    const std::pair<uint64_t, uint64_t> pairs[] = {{2, 3}, {2, 5}, {2, 7},
                                                   {3, 5}, {3, 7}, {5, 7}};
    auto primes = primes_up_to(10000);
    for (auto [q1, q2] : pairs) {
        const uint64_t threshold = guarantee_threshold(q1, q2);
        for (uint32_t p : primes) {
            if (p < threshold)
                continue;
            auto d = frobenius_decompose(p, q1, q2);
            REQUIRE_MESSAGE(d, "p=", p, " q1=", q1, " q2=", q2);
            CHECK(d->valid());
        }
    }
}

TEST_CASE("scan output matches the independent minimal scan")
{
    for (uint32_t p : primes_up_to(500)) {
        if (p <= 3)
            continue;
        for (auto [q1, q2] : {std::pair<uint64_t, uint64_t>{2, 3},
                              std::pair<uint64_t, uint64_t>{2, 5},
                              std::pair<uint64_t, uint64_t>{3, 5}}) {
            if (q2 >= p)
                continue;
            auto mine = frobenius_decompose(p, q1, q2);
            auto ref = oracle::min_decomposition(p, q1, q2);
            CHECK(mine.has_value() == ref.has_value());
            if (mine && ref) {
                CHECK(mine->u == ref->first);
                CHECK(mine->v == ref->second);
                CHECK(mine->valid());
            }
        }
    }
}

TEST_CASE("repair step")
{
    SUBCASE("valid inputs pass through unchanged")
    {
        Decomposition d{41, 2, 3, 1, 13};
        REQUIRE(d.valid());
        CHECK(adjust_for_criterion(d) == d);
    }

    SUBCASE("genuine q2|v inputs from the congruence scan get repaired")
    {
        int repaired = 0;
        for (uint32_t p : primes_up_to(500)) {
            if (p <= 5)
                continue;
            for (auto [q1, q2] : {std::pair<uint64_t, uint64_t>{2, 3},
                                  std::pair<uint64_t, uint64_t>{3, 5}}) {
                for (uint64_t u = 1; u * q1 + 2 * q1 * q2 < p; ++u) {
                    if (u % q1 == 0 || (p - u * q1) % q2 != 0)
                        continue;
                    const uint64_t v = (p - u * q1) / q2;
                    if (v % q2 != 0)
                        continue; // only the broken inputs are interesting
                    Decomposition fixed =
                        adjust_for_criterion(Decomposition{p, q1, q2, u, v});
                    CHECK(fixed.valid());
                    CHECK(fixed.p == p);
                    const uint64_t shift = fixed.u - u;
                    CHECK((shift == q2 || shift == 2 * q2));
                    ++repaired;
                }
            }
        }
        CHECK(repaired > 50); // the scan must actually exercise the repair
    }

    SUBCASE("fails loudly without headroom")
    {
        // 11 = 1*2 + 3*3 with 3 | v; all three candidates break
        CHECK_THROWS_AS(adjust_for_criterion(Decomposition{11, 2, 3, 1, 3}),
                        precondition_error);
    }
}
