// Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.
#include <repcount/counting.hpp>
#include <repcount/extrema.hpp>
#include <repcount/identities.hpp>
#include <repcount/oracle.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace repcount;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& what) {
        if (ok) detail << what;
        ok = false;
    }
};

ScanOptions parallel() {
    ScanOptions options;
    options.workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    return options;
}

std::vector<std::vector<int>> displayed(const std::vector<DigitVec>& reps) {
    std::vector<std::vector<int>> out;
    for (const auto& r : reps) out.push_back(r.display_digits());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> sorted(std::vector<std::vector<int>> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void headline(Outcome& o) {
    MemoCache four(4);
    if (hyper_count(67, four) != 3) o.fail("f_4(67) != 3");
    if (count_via_enumeration(67, 4, Alphabet::hyper()) != 3) o.fail("oracle f_4(67) != 3");
    if (displayed(enumerate_reps(67, 4, Alphabet::hyper())) !=
        sorted({{1, 0, 0, 3}, {4, 0, 3}, {3, 4, 3}}))
        o.fail("representation set of 67");
    if (balanced_count(25, four) != 3) o.fail("b_4(25) != 3");
    if (count_via_enumeration(25, 4, Alphabet::balanced()) != 3) o.fail("oracle b_4(25) != 3");
    if (displayed(enumerate_reps(25, 4, Alphabet::balanced())) !=
        sorted({{1, 2, 1}, {2, -2, 1}, {1, -2, -2, 1}}))
        o.fail("representation set of 25");
}

void small_table(Outcome& o) {
    const std::vector<int> f{1, 1, 1, 1, 2, 1, 1, 1, 2};
    const std::vector<int> b{2, 1, 1, 1, 2, 1, 1, 1, 3};
    MemoCache cache(4);
    for (int n = 0; n <= 8; ++n) {
        if (hyper_count(n, cache) != f[n]) o.fail("f_4(" + std::to_string(n) + ")");
    }
    for (int n = -2; n <= 6; ++n) {
        if (balanced_count(n, cache) != b[n + 2]) o.fail("b_4(" + std::to_string(n) + ")");
    }
}

void oracle_equivalence(Outcome& o) {
    for (int d : {4, 6, 8}) {
        MemoCache cache(d);
        for (int n = -2000; n <= 2000; ++n) {
            if (balanced_count(n, cache) != count_via_enumeration(n, d, Alphabet::balanced()))
                o.fail("balanced mismatch d=" + std::to_string(d) + " n=" + std::to_string(n));
            if (n >= 0 && hyper_count(n, cache) != count_via_enumeration(n, d, Alphabet::hyper()))
                o.fail("hyper mismatch d=" + std::to_string(d) + " n=" + std::to_string(n));
        }
    }
}

void shift_intervals(Outcome& o, int d, unsigned max_j) {
    for (unsigned j = 1; j <= max_j; ++j) {
        const auto report = verify_shift_interval(j, d, parallel());
        if (report.interval != interval_I(d, j)) o.fail("interval mismatch");
        if (!report.holds()) {
            o.fail("d=" + std::to_string(d) + " j=" + std::to_string(j) + " does not hold");
        }
    }
    o.detail << "d=" << d << " j=1.." << max_j << "; ";
}

void shift_intervals_wider(Outcome& o) {
    shift_intervals(o, 6, 4);
    shift_intervals(o, 8, 3);
    for (int d : {6, 8}) {
        const int ell = d / 2;
        if (shift_difference(1, -ell, d) != -1) o.fail("D_1(-l) != -1");
        if (shift_difference(1, 2 * ell * (ell - 1) + ell, d) != -1) o.fail("D_1(2l(l-1)+l) != -1");
    }
}

void hyper_maxima(Outcome& o) {
    for (unsigned k = 3; k <= 10; ++k) {
        const auto report = verify_hyper_maxima(k, 4, parallel());
        if (report.max_value != fibonacci(k) || report.first_argmax != defant_A(k, 4)) {
            o.fail("k=" + std::to_string(k) + " max=" + to_string(report.max_value) +
                   " argmax=" + to_string(report.first_argmax));
        }
    }
    MemoCache cache(4);
    for (unsigned k = 3; k <= 20; ++k) {
        if (hyper_count(defant_A(k, 4), cache) != fibonacci(k))
            o.fail("pointwise k=" + std::to_string(k));
    }
}

void balanced_maxima(Outcome& o) {
    MemoCache cache(4);
    if (balanced_count(6, cache) != 3) o.fail("b_4(6) != 3");
    if (balanced_count(26, cache) != 5) o.fail("b_4(26) != 5");
    for (unsigned r = 1; r <= 8; ++r) {
        const auto report = verify_balanced_maxima(r, parallel());
        if (report.interval != interval_I(4, r + 1)) o.fail("interval r=" + std::to_string(r));
        if (report.max_value != fibonacci(r + 3) || !report.agree) {
            o.fail("r=" + std::to_string(r) + " max=" + to_string(report.max_value));
        }
        if (balanced_count(balanced_argmax(r), cache) != report.max_value)
            o.fail("argmax value r=" + std::to_string(r));
    }
    for (unsigned r = 1; r <= 20; ++r) {
        if (balanced_count(balanced_argmax(r), cache) != fibonacci(r + 3))
            o.fail("pointwise r=" + std::to_string(r));
    }
}

void witnesses(Outcome& o) {
    for (int d : {4, 6}) {
        MemoCache cache(d);
        for (int k = -100; k <= 100; ++k) {
            const Integer n = witness_against_shift(k, d);
            if (hyper_count(n + k, cache) == balanced_count(n, cache))
                o.fail("k=" + std::to_string(k) + " d=" + std::to_string(d));
        }
    }
}

void predicates(Outcome& o) {
    MemoCache cache(4);
    for (int n = 1; n <= 10000; ++n) {
        if (hyper_is_one_predicate(n) != (hyper_count(n, cache) == 1))
            o.fail("hyper n=" + std::to_string(n));
    }
    for (int n = -10000; n <= 10000; ++n) {
        if (balanced_is_one_predicate(n) != (balanced_count(n, cache) == 1))
            o.fail("balanced n=" + std::to_string(n));
    }
}

void normalizer(Outcome& o) {
    std::size_t checked = 0;
    for (int d : {4, 6, 8}) {
        const int ell = d / 2;
        for (int k = -5000; k <= 5000; ++k) {
            for (const auto& rep : enumerate_reps(k, d, Alphabet::balanced())) {
                const auto out = normalize_balanced(rep);
                ++checked;
                const auto& digits = out.digits();
                if (eval(out) != k || !validate(out, Alphabet::balanced()) ||
                    std::find(digits.begin(), digits.end(), -ell) != digits.end())
                    o.fail("k=" + std::to_string(k) + " d=" + std::to_string(d));
            }
        }
    }
    o.detail << checked << " representations";
}

void stern_bridge(Outcome& o) {
    MemoCache cache(2);
    for (int n = 0; n <= 10000; ++n) {
        if (hyper_count(n, cache) != stern(n + 1)) o.fail("n=" + std::to_string(n));
    }
}

void covering(Outcome& o) {
    MemoCache cache(4);
    for (int n = 1; n <= 100000; ++n) {
        const unsigned j = covering_index(n, 4);
        if (!interval_I_shifted(4, j).contains(Integer(n)) ||
            hyper_count(n, cache) != balanced_count(n - 2 * repunit(4, j), cache))
            o.fail("n=" + std::to_string(n));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"headline values f_4(67), b_4(25) and their representations", headline},
        {"small-value table f_4(0..8), b_4(-2..6)", small_table},
        {"recurrence equals enumeration, d in {4,6,8}, |n| <= 2000", oracle_equivalence},
        {"shift difference zero on I_j, -1 at both ends, d=4, j=1..7",
         [](Outcome& o) { shift_intervals(o, 4, 7); }},
        {"shift difference intervals, d=6 j<=4, d=8 j<=3, base cases", shift_intervals_wider},
        {"hyper maxima F_k at A_k, k=3..10 scan, k<=20 pointwise", hyper_maxima},
        {"balanced maxima F_{r+3}, r=1..8 scan, r<=20 pointwise", balanced_maxima},
        {"witnesses against every shift |k| <= 100, d in {4,6}", witnesses},
        {"count-equals-one predicates, |n| <= 10^4", predicates},
        {"normalizer on enumerated representations, |k| <= 5000", normalizer},
        {"f_2(n) = s(n+1), 0 <= n <= 10^4", stern_bridge},
        {"covering identity, 1 <= n <= 10^5", covering},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(outcome);
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        failed += outcome.ok ? 0 : 1;
        std::cout << (outcome.ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] "
                  << criteria[i].first << " (" << elapsed.count() << " s)";
        if (!outcome.detail.str().empty()) std::cout << " -- " << outcome.detail.str();
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
