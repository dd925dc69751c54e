#include <repcount/counting.hpp>

#include "brute_force.hpp"

#include <doctest.h>

#include <vector>

using namespace repcount;

TEST_CASE("hyper_count examples") {
    CHECK(hyper_count(67, 4) == 3);
    CHECK(hyper_count(4, 4) == 2);
    CHECK(hyper_count(-1, 4) == 0);
    CHECK(hyper_count(0, 4) == 1);
    CHECK_THROWS_AS(hyper_count(5, 3), DomainError);
}

TEST_CASE("balanced_count examples") {
    CHECK(balanced_count(25, 4) == 3);
    CHECK(balanced_count(-2, 4) == 2);
    CHECK(balanced_count(6, 4) == 3);
    CHECK(balanced_count(0, 4) == 1);
    CHECK_THROWS_AS(balanced_count(3, 2), DomainError);
    CHECK_THROWS_AS(balanced_count(3, 5), DomainError);
}

TEST_CASE("small-value table for base 4") {
    const std::vector<int> f{1, 1, 1, 1, 2, 1, 1, 1, 2};  // n = 0..8
    const std::vector<int> b{2, 1, 1, 1, 2, 1, 1, 1, 3};  // n = -2..6
    for (int n = 0; n <= 8; ++n) {
        CHECK(hyper_count(n, 4) == f[n]);
    }
    for (int n = -2; n <= 6; ++n) {
        CHECK(balanced_count(n, 4) == b[n + 2]);
    }
}

TEST_CASE("small values in general even bases") {
    for (int d : {4, 6, 8, 10}) {
        const int ell = d / 2;
        for (int n = 0; n < d; ++n) {
            CHECK(hyper_count(n, d) == 1);
        }
        for (int n = -ell + 1; n <= ell - 1; ++n) {
            CHECK(balanced_count(n, d) == 1);
        }
        CHECK(hyper_count(d, d) == 2);
        CHECK(balanced_count(ell, d) == 2);
        CHECK(balanced_count(-ell, d) == 2);
    }
}

TEST_CASE("stern") {
    CHECK(stern(0) == 0);
    CHECK(stern(1) == 1);
    CHECK(stern(5) == 3);
    CHECK_THROWS_AS(stern(-1), DomainError);
    for (int n = 0; n <= 5000; ++n) {
        REQUIRE(stern(n) == brute::stern(n));
    }
}

TEST_CASE("fibonacci") {
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(4) == 3);
    CHECK(fibonacci(5) == 5);
    CHECK(fibonacci(100) == Integer("354224848179261915075"));
    CHECK_THROWS_AS(fibonacci(0), DomainError);
}

TEST_CASE("shift_difference examples") {
    CHECK(shift_difference(1, -2, 4) == -1);
    CHECK(shift_difference(1, 6, 4) == -1);
    CHECK(shift_difference(1, 0, 4) == 0);
    CHECK_THROWS_AS(shift_difference(0, 0, 4), DomainError);
    CHECK_THROWS_AS(shift_difference(1, 0, 2), DomainError);
}

TEST_CASE("recurrences agree with the brute-force counts") {
    for (int d : {2, 4, 6, 8, 10}) {
        CAPTURE(d);
        brute::Counts ref(d);
        MemoCache cache(d);
        for (int n = -50; n <= 4000; ++n) {
            REQUIRE(hyper_count(n, cache) == ref.hyper(n));
            if (d >= 4) {
                REQUIRE(balanced_count(-n, cache) == ref.balanced(-n));
                REQUIRE(balanced_count(n, cache) == ref.balanced(n));
            }
        }
    }
}

TEST_CASE("positivity") {
    for (int d : {2, 4, 6, 8}) {
        MemoCache cache(d);
        for (int n = 0; n <= 5000; ++n) {
            REQUIRE(hyper_count(n, cache) >= 1);
        }
        if (d >= 4) {
            for (int n = -5000; n <= 5000; ++n) {
                REQUIRE(balanced_count(n, cache) >= 1);
            }
        }
    }
}

TEST_CASE("hyperbinary count is the shifted Stern sequence") {
    MemoCache cache(2);
    for (int n = 0; n <= 10000; ++n) {
        REQUIRE(hyper_count(n, cache) == stern(n + 1));
    }
}

TEST_CASE("shift difference satisfies the one-step recurrence") {
    for (int d : {4, 6}) {
        const int ell = d / 2;
        MemoCache cache(d);
        for (unsigned j = 2; j <= 5; ++j) {
            CAPTURE(d);
            CAPTURE(j);
            const auto interval = interval_I(d, j);
            for (Integer n = interval.lo(); n <= interval.hi(); ++n) {
                int k = static_cast<int>(floor_mod(n, d));
                if (k > ell) k -= d;
                SignedCount stepped;
                if (k == ell) {
                    stepped = shift_difference(j - 1, (n + ell) / d, cache) +
                              shift_difference(j - 1, (n - ell) / d, cache);
                } else {
                    stepped = shift_difference(j - 1, (n - k) / d, cache);
                }
                REQUIRE(shift_difference(j, n, cache) == stepped);
            }
        }
    }
}

TEST_CASE("memo cache does not change results") {
    MemoCache warm(4);
    MemoCache off(4, 0);
    MemoCache capped(4, 16);
    for (int pass = 0; pass < 2; ++pass) {
        for (int n = -3000; n <= 3000; n += 7) {
            const Count fresh_b = balanced_count(n, 4);
            REQUIRE(balanced_count(n, warm) == fresh_b);
            REQUIRE(balanced_count(n, off) == fresh_b);
            REQUIRE(balanced_count(n, capped) == fresh_b);
            if (n >= 0) {
                const Count fresh_f = hyper_count(n, 4);
                REQUIRE(hyper_count(n, warm) == fresh_f);
                REQUIRE(hyper_count(n, off) == fresh_f);
                REQUIRE(hyper_count(n, capped) == fresh_f);
            }
        }
    }
    CHECK(off.size() == 0);
    CHECK(capped.size() == 16);
    CHECK(warm.size() > 16);
}

TEST_CASE("very large arguments") {
    // 4000 base-4 digits; the recurrence walks one digit per step.
    const Integer huge = pow(Integer(4), 4000) * 3 + 12345;
    MemoCache cache(4);
    CHECK(hyper_count(huge, cache) >= 1);
    CHECK(balanced_count(-huge, cache) >= 1);
    // f_4 of [(1 0)^m 0]_4 is a Fibonacci number (k = 2m + 2).
    Integer alternating = 0;
    for (int i = 0; i < 200; ++i) alternating = alternating * 16 + 4;
    CHECK(hyper_count(alternating * 4, cache) == fibonacci(402));
}
