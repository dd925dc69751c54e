#include <repcount/extrema.hpp>

#include <repcount/pattern.hpp>

namespace repcount {

namespace {

MaxReport make_report(const Interval& interval, MaxScan scan, Integer predicted_argmax,
                      Count predicted_value, CountKind kind, int d) {
    bool agree = scan.max_value == predicted_value && interval.contains(predicted_argmax);
    if (agree) {
        MemoCache cache(d, 0);
        agree = count(kind, predicted_argmax, cache) == scan.max_value;
    }
    return MaxReport{interval,
                     std::move(scan.max_value),
                     std::move(scan.first_argmax),
                     std::move(predicted_argmax),
                     std::move(predicted_value),
                     agree};
}

}  // namespace

Integer defant_A(unsigned k, int d) {
    BaseParams base(d);
    if (k < 3) {
        throw DomainError("defant_A needs k >= 3");
    }
    std::vector<PatternItem> items{PatternItem{Lit{1}}, PatternItem{Lit{0}}};
    PatternExpr pattern{d, {}};
    if (k % 2 == 0) {
        pattern.items.push_back(PatternItem{Group{items, k / 2 - 1}});
        pattern.items.push_back(PatternItem{Lit{0}});
    } else {
        pattern.items.push_back(PatternItem{Group{items, (k - 1) / 2}});
    }
    return eval(expand(pattern));
}

Integer balanced_argmax(unsigned r) {
    if (r < 1) {
        throw DomainError("balanced_argmax needs r >= 1");
    }
    if (r % 2 == 1) {
        return 2 * (pow(4, r + 1) - 1) / 5;
    }
    return 2 + 8 * (pow(4, r) - 1) / 5;
}

MaxScan max_scan(CountKind kind, int d, const Interval& interval, const ScanOptions& options) {
    require_budget(interval.size(), options.budget);
    const auto pieces = run_partitioned(
        interval, BaseParams(d), options, [kind](const Interval& piece, MemoCache& cache) {
            MaxScan best{-1, piece.lo()};
            for (Integer n = piece.lo(); n <= piece.hi(); ++n) {
                Count value = count(kind, n, cache);
                if (value > best.max_value) {
                    best = {std::move(value), n};
                }
            }
            return best;
        });

    // Pieces ascend, so the first piece reaching the maximum holds the
    // smallest argmax.
    MaxScan best = pieces.front();
    for (const auto& piece : pieces) {
        if (piece.max_value > best.max_value) {
            best = piece;
        }
    }
    return best;
}

MaxReport verify_hyper_maxima(unsigned k, int d, const ScanOptions& options) {
    if (k < 3) {
        throw DomainError("verify_hyper_maxima needs k >= 3");
    }
    const Interval interval(pow(d, k - 2), pow(d, k - 1) - 1);
    require_budget(interval.size(), options.budget);
    Integer predicted = defant_A(k, d);
    return make_report(interval, max_scan(CountKind::Hyper, d, interval, options),
                       std::move(predicted), fibonacci(k), CountKind::Hyper, d);
}

MaxReport verify_balanced_maxima(unsigned r, const ScanOptions& options) {
    if (r < 1) {
        throw DomainError("verify_balanced_maxima needs r >= 1");
    }
    const Interval interval = interval_I(4, r + 1);
    require_budget(interval.size(), options.budget);
    return make_report(interval, max_scan(CountKind::Balanced, 4, interval, options),
                       balanced_argmax(r), fibonacci(r + 3), CountKind::Balanced, 4);
}

}  // namespace repcount
