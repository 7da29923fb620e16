#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "binomod/period.hpp"
#include "oracle.hpp"

using namespace binomod;

TEST_CASE("is_period on paradigm rows") {
    PrimeModulus p3(3);
    const auto ones = residue_row(8, p3, SignConvention::signed_lower).values;
    auto v = is_period(ones, 1);
    CHECK(v.holds);
    CHECK_FALSE(v.vacuous);

    const auto row5 = residue_row(5, p3, SignConvention::signed_lower).values;
    v = is_period(row5, 3);
    CHECK_FALSE(v.holds);
    CHECK(v.first_failure == 0);

    v = is_period(row5, 6);
    CHECK(v.holds);
    CHECK(v.vacuous);
    CHECK_FALSE(v.first_failure.has_value());
}

TEST_CASE("is_period respects the range offset") {
    const std::vector<int> seq{1, 2, 1, 2, 2};
    const auto v = is_period(std::span<const int>(seq), 2, 10);
    CHECK_FALSE(v.holds);
    CHECK(v.first_failure == 12);  // index within [10, 14]
}

TEST_CASE("vacuous periods always hold") {
    const std::vector<int> seq{3, 1, 4, 1, 5};
    for (i64 h = 5; h <= 12; ++h) {
        const auto v = is_period(seq, h);
        CHECK(v.holds);
        CHECK(v.vacuous);
    }
    CHECK_THROWS_AS(is_period(seq, 0), std::invalid_argument);
}

TEST_CASE("period_set") {
    PrimeModulus p2(2), p3(3);
    const auto row5 = residue_row(5, p2, SignConvention::signed_lower).values;
    CHECK(row5 == std::vector<int>{1, 1, 0, 0, 1, 1});
    CHECK(period_set(row5, 5) == std::set<i64>{4, 5});

    const std::vector<int> ones(9, 1);
    CHECK(period_set(ones, 8) == std::set<i64>{1, 2, 3, 4, 5, 6, 7, 8});

    // p = 3, k = 5*3-1 = 14: every h >= 12 is a period
    const auto row14 = residue_row(14, p3, SignConvention::signed_lower).values;
    const auto ps = period_set(row14, 14);
    for (i64 h = 12; h <= 14; ++h) CHECK(ps.count(h) == 1);
    for (i64 h = 1; h <= 11; ++h)
        if (h % 3 != 0) CHECK(ps.count(h) == 0);
}

TEST_CASE("minimal_period") {
    const std::vector<int> ones(7, 1);
    CHECK(minimal_period(ones) == 1);
    CHECK(minimal_period(std::vector<int>{1, 1, 0, 0, 1, 1}) == 4);
    CHECK_FALSE(minimal_period(std::vector<int>{1, 1, 1, 2, 2, 2}).has_value());
}

TEST_CASE("minimal_period matches the naive scan on random sequences") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 10000; ++trial) {
        const int len = 1 + static_cast<int>(rng() % 512);
        const int alphabet = 2 + static_cast<int>(rng() % 4);
        std::vector<int> seq(len);
        for (auto& x : seq) x = static_cast<int>(rng() % alphabet);
        const auto fast = minimal_period(seq);
        const auto naive = oracle::naive_minimal_period(seq);
        CHECK(fast.has_value() == naive.has_value());
        if (fast && naive) CHECK(*fast == *naive);
    }
}

TEST_CASE("minimal_period matches naive on triangle rows") {
    for (i64 pv : {2, 3, 5}) {
        PrimeModulus pm(pv);
        for (i64 k = 1; k <= 120; ++k)
            for (auto conv : {SignConvention::unsigned_row, SignConvention::signed_lower}) {
                const auto row = residue_row(k, pm, conv).values;
                CHECK(minimal_period(row) == oracle::naive_minimal_period(row));
            }
    }
}
