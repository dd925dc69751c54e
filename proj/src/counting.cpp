#include <repcount/counting.hpp>

#include <string>
#include <vector>

namespace repcount {

namespace {

void require_hyper_base(const BaseParams& base) {
    if (!base.even()) {
        throw DomainError("hyper counting is defined here for even bases only, got " +
                          std::to_string(base.d()));
    }
}

}  // namespace

const char* to_string(CountKind kind) noexcept {
    return kind == CountKind::Hyper ? "hyper" : "balanced";
}

void MemoCache::remember(PairMap& map, const Integer& x, const std::pair<Count, Count>& value) {
    if (size() < capacity_) {
        map.try_emplace(x, value);
    }
}

// With x = d*q + k, 0 <= k < d:
//   f(x)   = f(q)               k != 0
//          = f(q) + f(q - 1)    k == 0
// and f(x - 1) follows from the residue k - 1, so the pair (f(x), f(x-1))
// is a function of (f(q), f(q-1)) and k alone.
Count hyper_count(const Integer& n, MemoCache& cache) {
    const auto& base = cache.base();
    require_hyper_base(base);
    if (n < 0) {
        return 0;
    }
    const int d = base.d();

    std::vector<Integer> path;
    Integer x = n;
    std::pair<Count, Count> pair{1, 0};
    for (;;) {
        if (x == 0) {
            break;
        }
        if (auto it = cache.hyper_.find(x); it != cache.hyper_.end()) {
            pair = it->second;
            break;
        }
        path.push_back(x);
        x /= d;
    }

    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const int k = static_cast<int>(*it % d);
        auto& [fq, fq_minus] = pair;
        if (k == 0) {
            pair = {fq + fq_minus, fq_minus};
        } else if (k == 1) {
            pair = {fq, fq + fq_minus};
        } else {
            pair = {fq, fq};
        }
        cache.remember(cache.hyper_, *it, pair);
    }
    return pair.first;
}

// With x = d*q + k, -ell < k <= ell:
//   b(x) = b(q)                 k != ell
//        = b(q) + b(q + 1)      k == ell
// The pair (b(x), b(x+1)) depends only on (b(q), b(q+1)) and k. |q| < |x|
// for x != 0, so the quotient chain reaches 0.
Count balanced_count(const Integer& n, MemoCache& cache) {
    const auto& base = cache.base();
    Alphabet::balanced().require_compatible(base);
    const int d = base.d();
    const int ell = base.ell();

    std::vector<std::pair<Integer, int>> path;
    Integer x = n;
    std::pair<Count, Count> pair{1, 1};
    for (;;) {
        if (x == 0) {
            break;
        }
        if (auto it = cache.balanced_.find(x); it != cache.balanced_.end()) {
            pair = it->second;
            break;
        }
        int k = static_cast<int>(floor_mod(x, d));
        if (k > ell) {
            k -= d;
        }
        path.emplace_back(x, k);
        x = (x - k) / d;
    }

    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const int k = it->second;
        auto& [bq, bq_plus] = pair;
        if (k == ell) {
            pair = {bq + bq_plus, bq_plus};
        } else if (k == ell - 1) {
            pair = {bq, bq + bq_plus};
        } else {
            pair = {bq, bq};
        }
        cache.remember(cache.balanced_, it->first, pair);
    }
    return pair.first;
}

Count hyper_count(const Integer& n, int d) {
    MemoCache cache(d, 0);
    return hyper_count(n, cache);
}

Count balanced_count(const Integer& n, int d) {
    MemoCache cache(d, 0);
    return balanced_count(n, cache);
}

Count count(CountKind kind, const Integer& n, MemoCache& cache) {
    return kind == CountKind::Hyper ? hyper_count(n, cache) : balanced_count(n, cache);
}

// Invariant: s(original) = a*s(m) + b*s(m+1) for the current m.
Count stern(const Integer& n) {
    if (n < 0) {
        throw DomainError("stern needs n >= 0, got " + to_string(n));
    }
    Count a = 1;
    Count b = 0;
    Integer m = n;
    while (m != 0) {
        if (m % 2 == 0) {
            a += b;
        } else {
            b += a;
        }
        m /= 2;
    }
    return b;
}

Count fibonacci(unsigned k) {
    if (k < 1) {
        throw DomainError("fibonacci index must be at least 1");
    }
    Count prev = 0;
    Count cur = 1;
    for (unsigned i = 1; i < k; ++i) {
        Count next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

SignedCount shift_difference(unsigned j, const Integer& n, MemoCache& cache) {
    const auto& base = cache.base();
    Alphabet::balanced().require_compatible(base);
    if (j < 1) {
        throw DomainError("shift length j must be at least 1");
    }
    const Integer shift = base.ell() * repunit(base.d(), j);
    return SignedCount(hyper_count(shift + n, cache)) - balanced_count(n, cache);
}

SignedCount shift_difference(unsigned j, const Integer& n, int d) {
    MemoCache cache(d, 0);
    return shift_difference(j, n, cache);
}

}  // namespace repcount
