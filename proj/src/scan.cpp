#include <repcount/scan.hpp>

namespace repcount {

void require_budget(const Integer& points, std::size_t budget) {
    if (points > budget) {
        throw BudgetExceeded(points, budget);
    }
}

std::vector<Interval> partition(const Interval& interval, unsigned parts) {
    const Integer total = interval.size();
    const Integer count = total < parts ? total : Integer(parts);
    std::vector<Interval> pieces;
    Integer lo = interval.lo();
    for (Integer i = 0; i < count; ++i) {
        // Spread the remainder over the first pieces.
        const Integer len = total / count + (i < total % count ? 1 : 0);
        pieces.emplace_back(lo, lo + len - 1);
        lo += len;
    }
    return pieces;
}

}  // namespace repcount
