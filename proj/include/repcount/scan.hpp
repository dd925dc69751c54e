#pragma once

#include <repcount/counting.hpp>
#include <repcount/numeral.hpp>

#include <algorithm>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace repcount {

struct ScanOptions {
    /// Maximum number of evaluated points.
    std::size_t budget = kDefaultBudget;
    /// Threads for interval scans; each gets a disjoint subinterval and its
    /// own MemoCache. Results do not depend on this.
    unsigned workers = 1;
    std::size_t memo_capacity = MemoCache::kUnbounded;
};

/// Throws BudgetExceeded when points > budget.
void require_budget(const Integer& points, std::size_t budget);

/// Splits the interval into at most `parts` contiguous, ascending pieces.
std::vector<Interval> partition(const Interval& interval, unsigned parts);

/// Runs fn(piece, cache) for each piece of the interval, one thread per
/// piece, and returns the results in ascending piece order. The first
/// exception thrown by any worker is rethrown.
template <class Fn>
auto run_partitioned(const Interval& interval, const BaseParams& base,
                     const ScanOptions& options, Fn fn) {
    using Result = std::invoke_result_t<Fn&, const Interval&, MemoCache&>;
    const auto pieces = partition(interval, std::max(1u, options.workers));
    std::vector<Result> results(pieces.size());

    if (pieces.size() == 1) {
        MemoCache cache(base, options.memo_capacity);
        results[0] = fn(pieces[0], cache);
        return results;
    }

    std::vector<std::exception_ptr> errors(pieces.size());
    {
        std::vector<std::jthread> threads;
        threads.reserve(pieces.size());
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            threads.emplace_back([&, i] {
                try {
                    MemoCache cache(base, options.memo_capacity);
                    results[i] = fn(pieces[i], cache);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        }
    }
    for (const auto& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
    return results;
}

}  // namespace repcount
