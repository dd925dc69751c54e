#pragma once

#include <repcount/numeral.hpp>

#include <cstddef>
#include <limits>
#include <unordered_map>
#include <utility>

namespace repcount {

/// Number of representations; always >= 0.
using Count = Integer;
/// Difference of two counts.
using SignedCount = Integer;

enum class CountKind { Hyper, Balanced };

const char* to_string(CountKind kind) noexcept;

/// Memo tables for one base. Each entry holds two adjacent values of a
/// counting function, which is all one recurrence step needs:
///   hyper:    x -> (f_d(x), f_d(x - 1))
///   balanced: x -> (b_d(x), b_d(x + 1))
/// Entries are never overwritten. Once size() reaches capacity() no more
/// entries are added; capacity 0 disables memoization.
///
/// Not synchronized. Share a cache within one thread only; parallel scans
/// give each worker its own.
class MemoCache {
public:
    static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

    explicit MemoCache(BaseParams base, std::size_t capacity = kUnbounded)
        : base_(base), capacity_(capacity) {}
    explicit MemoCache(int d, std::size_t capacity = kUnbounded)
        : MemoCache(BaseParams(d), capacity) {}

    const BaseParams& base() const noexcept { return base_; }
    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t size() const noexcept { return hyper_.size() + balanced_.size(); }

private:
    using PairMap = std::unordered_map<Integer, std::pair<Count, Count>>;

    friend Count hyper_count(const Integer& n, MemoCache& cache);
    friend Count balanced_count(const Integer& n, MemoCache& cache);

    void remember(PairMap& map, const Integer& x, const std::pair<Count, Count>& value);

    BaseParams base_;
    std::size_t capacity_;
    PairMap hyper_;
    PairMap balanced_;
};

/// f_d(n): representations of n with digits {0..d}. Zero for n < 0.
/// d must be even (d = 2 gives the hyperbinary count).
Count hyper_count(const Integer& n, MemoCache& cache);
Count hyper_count(const Integer& n, int d);

/// b_d(n): representations of n with digits {-d/2..d/2}, any integer n.
/// d must be even and at least 4.
Count balanced_count(const Integer& n, MemoCache& cache);
Count balanced_count(const Integer& n, int d);

Count count(CountKind kind, const Integer& n, MemoCache& cache);

/// Stern's diatomic sequence: s(0) = 0, s(1) = 1, s(2n) = s(n),
/// s(2n+1) = s(n) + s(n+1).
Count stern(const Integer& n);

/// F_1 = F_2 = 1.
Count fibonacci(unsigned k);

/// f_d(ell * repunit(d, j) + n) - b_d(n), from the two counting functions.
SignedCount shift_difference(unsigned j, const Integer& n, MemoCache& cache);
SignedCount shift_difference(unsigned j, const Integer& n, int d);

}  // namespace repcount
