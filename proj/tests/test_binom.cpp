#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binomod/binom.hpp"
#include "binomod/scan.hpp"
#include "oracle.hpp"

using namespace binomod;

TEST_CASE("PrimeModulus rejects non-primes") {
    CHECK_NOTHROW(PrimeModulus(2));
    CHECK_NOTHROW(PrimeModulus(2147483647));
    CHECK_THROWS_AS(PrimeModulus(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(9), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(-7), std::invalid_argument);
}

TEST_CASE("padic_digits") {
    PrimeModulus p3(3), p2(2);
    CHECK(padic_digits(0, p3) == std::vector<i64>{0});
    CHECK(padic_digits(11, p3) == std::vector<i64>{2, 0, 1});
    CHECK(padic_digits(8, p2) == std::vector<i64>{0, 0, 0, 1});
}

TEST_CASE("split") {
    PrimeModulus p3(3);
    auto s = split(11, p3, 1);
    CHECK(s.hi == 3);
    CHECK(s.lo == 2);
    // k = 3*9-1: k' = t-1, k'' = p^r-1
    s = split(26, p3, 2);
    CHECK(s.hi == 2);
    CHECK(s.lo == 8);
    // h + p^r - 1 with h = 4, r = 1 splits as p^r(h'+1) + (h''-1)
    s = split(4 + 3 - 1, p3, 1);
    CHECK(s.hi == 2);
    CHECK(s.lo == 0);
}

TEST_CASE("binom_mod spot values") {
    PrimeModulus p3(3);
    for (i64 k : {0, 1, 7, 100}) CHECK(binom_mod(k, 0, p3) == 1);
    CHECK(binom_mod(8, 3, p3) == 2);   // 56 mod 3
    CHECK(binom_mod(11, 5, p3) == 0);  // 462 mod 3
    CHECK(binom_mod(5, -1, p3) == 0);
    CHECK(binom_mod(5, 6, p3) == 0);
}

TEST_CASE("binom_mod equals the exact big-integer oracle") {
    for (i64 pv : {2, 3, 5, 7, 11}) {
        PrimeModulus pm(pv);
        for (i64 k = 0; k <= 80; ++k)
            for (i64 i = 0; i <= k; ++i)
                CHECK(binom_mod(k, i, pm) == oracle::binom_mod_exact(k, i, pv));
    }
}

TEST_CASE("binom_mod_split agrees with binom_mod") {
    PrimeModulus p3(3);
    CHECK(binom_mod_split(8, 3, p3, 1) == 2);
    CHECK(binom_mod_split(26, 8, p3, 2) == 1);
    for (i64 pv : {2, 3, 5}) {
        PrimeModulus pm(pv);
        for (i64 k = 0; k <= 60; ++k)
            for (i64 i = 0; i <= k; ++i)
                for (i64 r = 0; r <= 5; ++r)
                    CHECK(binom_mod_split(k, i, pm, r) == binom_mod(k, i, pm));
    }
}

TEST_CASE("ext_binom") {
    CHECK(ext_binom(-2, 3) == -4);
    CHECK(ext_binom(5, 2) == 10);
    for (i64 i = 0; i <= 20; ++i) CHECK(ext_binom(-1, i) == (i % 2 == 0 ? 1 : -1));
    // the negative-upper-entry identity
    for (i64 k = 1; k <= 20; ++k)
        for (i64 i = 0; i <= 20; ++i) {
            const i64 sign = (i % 2 == 0) ? 1 : -1;
            CHECK(ext_binom(-k, i) == sign * ext_binom(k + i - 1, i));
        }
    // agreement with the exact oracle on nonnegative upper entries
    for (i64 k = 0; k <= 30; ++k)
        for (i64 i = 0; i <= k; ++i)
            CHECK(oracle::cpp_int(ext_binom(k, i)) == oracle::binom_exact(k, i));
}

TEST_CASE("residue_row paradigm rows") {
    PrimeModulus p3(3);
    CHECK(residue_row(8, p3, SignConvention::signed_lower).values ==
          std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(residue_row(5, p3, SignConvention::signed_lower).values ==
          std::vector<int>{1, 1, 1, 2, 2, 2});
    CHECK(residue_row(11, p3, SignConvention::signed_lower).values ==
          std::vector<int>{1, 1, 1, 0, 0, 0, 0, 0, 0, 2, 2, 2});
    CHECK_THROWS_AS(residue_row(kRowLengthGuard + 1, p3, SignConvention::unsigned_row),
                    std::length_error);
}

TEST_CASE("residue_row sign conventions agree with the oracle") {
    for (i64 pv : {2, 3, 5}) {
        PrimeModulus pm(pv);
        for (i64 k = 0; k <= 40; ++k) {
            const auto uns = residue_row(k, pm, SignConvention::unsigned_row);
            const auto low = residue_row(k, pm, SignConvention::signed_lower);
            const auto upp = residue_row(k, pm, SignConvention::signed_upper);
            for (i64 i = 0; i <= k; ++i) {
                const i64 b = oracle::binom_mod_exact(k, i, pv);
                CHECK(uns.values[i] == b);
                CHECK(low.values[i] == (i % 2 == 1 && b != 0 ? pv - b : b));
                CHECK(upp.values[i] == (k % 2 == 1 && b != 0 ? pv - b : b));
            }
        }
    }
}

TEST_CASE("row symmetry and Pascal recursion mod p") {
    for (i64 pv : {2, 3, 5}) {
        PrimeModulus pm(pv);
        for (i64 k = 0; k <= 300; ++k)
            for (i64 i = 0; i <= k; ++i) {
                CHECK(binom_mod(k, i, pm) == binom_mod(k, k - i, pm));
                CHECK(binom_mod(k + 1, i + 1, pm) ==
                      (binom_mod(k, i, pm) + binom_mod(k, i + 1, pm)) % pv);
            }
    }
}

TEST_CASE("signed row alternating sum vanishes") {
    for (i64 pv : {2, 3, 5, 7}) {
        PrimeModulus pm(pv);
        for (i64 k = 1; k <= 120; ++k) {
            i64 sum = 0;
            for (int v : residue_row(k, pm, SignConvention::signed_lower).values) sum += v;
            CHECK(sum % pv == 0);
        }
    }
}

TEST_CASE("upper_period") {
    PrimeModulus p2(2), p3(3);
    CHECK(upper_period(0, p3) == 1);
    CHECK(upper_period(2, p3) == 3);
    CHECK(upper_period(9, p2) == 16);

    for (i64 pv : {2, 3, 5}) {
        PrimeModulus pm(pv);
        for (i64 i = 0; i <= 50; ++i) {
            const i64 per = upper_period(i, pm);
            // the column repeats with period p^m over four full periods
            for (i64 k = 0; k + per <= 4 * per; ++k)
                CHECK(binom_mod(k + per, i, pm) == binom_mod(k, i, pm));
            // and with no smaller power of p
            for (i64 smaller = 1; smaller < per; smaller *= pv) {
                bool repeats = true;
                for (i64 k = 0; k + smaller <= 4 * per; ++k)
                    if (binom_mod(k + smaller, i, pm) != binom_mod(k, i, pm)) {
                        repeats = false;
                        break;
                    }
                CHECK_FALSE(repeats);
            }
        }
    }
}

TEST_CASE("symmetry_reflect") {
    PrimeModulus p3(3);
    CHECK(symmetry_reflect(2, 1, 1, p3) == std::pair<i64, i64>{2, 2});
    CHECK(symmetry_reflect(0, 0, 1, p3) == std::pair<i64, i64>{1, 1});
    CHECK(symmetry_reflect(8, 4, 2, p3) == std::pair<i64, i64>{1, 1});
    CHECK_THROWS_AS(symmetry_reflect(9, 1, 2, p3), std::out_of_range);

    for (i64 pv : {2, 3, 5}) {
        PrimeModulus pm(pv);
        for (i64 s = 1; ipow(pv, s) <= 125; ++s) {
            const i64 ps = ipow(pv, s);
            for (i64 k = 0; k <= ps - 1; ++k)
                for (i64 i = 0; i <= k; ++i) {
                    const auto [lhs, rhs] = symmetry_reflect(k, i, s, pm);
                    CHECK(lhs == rhs);
                }
        }
    }
}
