#include <repcount/identities.hpp>

#include <repcount/oracle.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace repcount {

ShiftReport verify_shift_interval(unsigned j, int d, const ScanOptions& options) {
    const auto base = BaseParams::balanced(d);
    const Interval interval = interval_I(d, j);
    require_budget(interval.size() + 2, options.budget);

    using Failures = std::vector<std::pair<Integer, SignedCount>>;
    const auto pieces = run_partitioned(
        interval, base, options, [j](const Interval& piece, MemoCache& cache) {
            Failures failures;
            for (Integer n = piece.lo(); n <= piece.hi(); ++n) {
                SignedCount diff = shift_difference(j, n, cache);
                if (diff != 0) {
                    failures.emplace_back(n, std::move(diff));
                }
            }
            return failures;
        });

    Failures failures;
    for (const auto& piece : pieces) {
        failures.insert(failures.end(), piece.begin(), piece.end());
    }

    MemoCache cache(base, options.memo_capacity);
    ShiftReport report{
        d,
        j,
        interval,
        failures.empty(),
        shift_difference(j, interval.lo() - 1, cache),
        shift_difference(j, interval.hi() + 1, cache),
        std::move(failures),
    };
    return report;
}

unsigned covering_index(const Integer& n, int d) {
    BaseParams::balanced(d);
    if (n < 1) {
        throw DomainError("covering index needs n >= 1, got " + to_string(n));
    }
    for (unsigned j = 1;; ++j) {
        const Interval shifted = interval_I_shifted(d, j);
        if (shifted.contains(n)) {
            return j;
        }
        if (shifted.lo() > n) {
            throw InternalCheckFailed("shifted intervals do not cover " + to_string(n));
        }
    }
}

namespace {

// One balanced representation of k: at each step take the digit in
// [-ell, ell) congruent to the remainder, so -ell is used whenever the
// residue allows both -ell and ell.
DigitVec low_biased_balanced_rep(const Integer& k, const BaseParams& base) {
    const int d = base.d();
    const int ell = base.ell();
    std::vector<int> digits;
    Integer rest = k;
    do {
        int digit = static_cast<int>(floor_mod(rest + ell, d)) - ell;
        digits.push_back(digit);
        rest = (rest - digit) / d;
    } while (rest != 0);
    return DigitVec(base, std::move(digits));
}

}  // namespace

Integer witness_against_shift(const Integer& k, int d) {
    const auto base = BaseParams::balanced(d);
    const int ell = base.ell();

    const DigitVec rep = normalize_balanced(low_biased_balanced_rep(k, base)).canonical();
    const auto digits = rep.digits();
    const std::size_t top = digits.size() - 1;

    Integer n;
    const auto off = std::ranges::find_if(digits, [ell](int x) { return x != ell; });
    if (off != digits.end()) {
        const auto i = static_cast<std::size_t>(off - digits.begin());
        std::vector<int> witness(top + 2, ell - 1);
        witness[i] = -*off;
        witness[top + 1] = 1;
        n = eval(DigitVec(base, std::move(witness)));
    } else {
        n = interval_I(d, static_cast<unsigned>(top + 1)).hi() + 1;
    }

    MemoCache cache(base, 0);
    if (n < -k || hyper_count(n + k, cache) == balanced_count(n, cache)) {
        throw InternalCheckFailed("witness " + to_string(n) + " does not separate f and b for k = " +
                                  to_string(k));
    }
    return n;
}

}  // namespace repcount
