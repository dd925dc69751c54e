#include <repcount/identities.hpp>

#include "brute_force.hpp"

#include <doctest.h>

using namespace repcount;

TEST_CASE("verify_shift_interval examples") {
    const auto one = verify_shift_interval(1, 4);
    CHECK(one.interval == Interval(-1, 5));
    CHECK(one.zero_on_interval);
    CHECK(one.failures.empty());
    CHECK(one.left_boundary_value == -1);
    CHECK(one.right_boundary_value == -1);
    CHECK(one.holds());

    const auto two = verify_shift_interval(2, 4);
    CHECK(two.interval == Interval(-5, 21));
    CHECK(two.holds());

    const auto six = verify_shift_interval(1, 6);
    CHECK(six.interval == Interval(-2, 14));
    CHECK(six.zero_on_interval);
    CHECK(six.left_boundary_value == -1);
    CHECK(six.right_boundary_value == -1);
}

TEST_CASE("shift intervals agree with a brute-force difference") {
    for (int d : {4, 6, 8}) {
        brute::Counts ref(d);
        const int ell = d / 2;
        for (int j = 1; j <= 3; ++j) {
            const auto report = verify_shift_interval(static_cast<unsigned>(j), d);
            const std::int64_t lo = -(ell - 1) * brute::repunit(d, j);
            const std::int64_t hi = (ell - 1) * brute::repunit(d, j + 1);
            CHECK(report.interval == Interval(lo, hi));
            const std::int64_t shift = ell * brute::repunit(d, j);
            for (std::int64_t n = lo; n <= hi; ++n) {
                REQUIRE(ref.hyper(shift + n) == ref.balanced(n));
            }
            CHECK(report.left_boundary_value == ref.hyper(shift + lo - 1) - ref.balanced(lo - 1));
            CHECK(report.right_boundary_value == ref.hyper(shift + hi + 1) - ref.balanced(hi + 1));
            CHECK(report.holds());
        }
    }
}

TEST_CASE("shift scan budget and workers") {
    ScanOptions tight;
    tight.budget = 8;
    CHECK_THROWS_AS(verify_shift_interval(1, 4, tight), BudgetExceeded);
    tight.budget = 9;  // 7 interior points plus two neighbours
    CHECK_NOTHROW(verify_shift_interval(1, 4, tight));

    ScanOptions threads;
    threads.workers = 5;
    const auto parallel = verify_shift_interval(5, 6, threads);
    const auto serial = verify_shift_interval(5, 6);
    CHECK(parallel.interval == serial.interval);
    CHECK(parallel.failures == serial.failures);
    CHECK(parallel.holds());
}

TEST_CASE("covering_index examples") {
    CHECK(covering_index(67, 4) == 3);
    CHECK(hyper_count(67, 4) == balanced_count(67 - 2 * repunit(4, 3), 4));
    CHECK(covering_index(5, 4) == 1);
    CHECK(covering_index(1, 4) == 1);
    CHECK_THROWS_AS(covering_index(0, 4), DomainError);
}

TEST_CASE("covering identity") {
    for (int d : {4, 6}) {
        MemoCache cache(d);
        const int ell = d / 2;
        for (int n = 1; n <= 20000; ++n) {
            const unsigned j = covering_index(n, d);
            REQUIRE(interval_I_shifted(d, j).contains(Integer(n)));
            if (j > 1) {
                REQUIRE_FALSE(interval_I_shifted(d, j - 1).contains(Integer(n)));
            }
            REQUIRE(hyper_count(n, cache) == balanced_count(n - ell * repunit(d, j), cache));
        }
    }
}

TEST_CASE("witness_against_shift examples") {
    const Integer zero = witness_against_shift(0, 4);
    CHECK(hyper_count(zero, 4) != balanced_count(zero, 4));

    CHECK(witness_against_shift(2, 4) == 6);
    CHECK(shift_difference(1, 6, 4) == -1);

    CHECK(witness_against_shift(1, 4) == 3);
    CHECK(balanced_count(3, 4) == 1);
    CHECK(hyper_count(4, 4) == 2);

    // all-ell shifts fall back to the right end of the zero interval
    CHECK(witness_against_shift(10, 4) == interval_I(4, 2).hi() + 1);
    CHECK(witness_against_shift(3 * repunit(6, 3), 6) == interval_I(6, 3).hi() + 1);
}

TEST_CASE("witnesses separate f and b for every small shift") {
    for (int d : {4, 6, 8}) {
        brute::Counts ref(d);
        for (int k = -300; k <= 300; ++k) {
            const Integer n = witness_against_shift(k, d);
            REQUIRE(n >= -k);
            const auto small = static_cast<std::int64_t>(n);
            REQUIRE(ref.hyper(small + k) != ref.balanced(small));
        }
    }
}

TEST_CASE("witness for a large shift") {
    const Integer k = pow(Integer(4), 300) - 12345;
    const Integer n = witness_against_shift(k, 4);
    CHECK(n >= -k);
    CHECK(hyper_count(n + k, 4) != balanced_count(n, 4));
}
