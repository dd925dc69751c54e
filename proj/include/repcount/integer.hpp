#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace repcount {

/// Arbitrary-precision signed integer used for arguments, values and counts.
using Integer = boost::multiprecision::cpp_int;

/// Raised when an argument is outside an operation's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a scan would evaluate more points than its budget allows.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const Integer& needed, std::size_t budget);

    const Integer& needed() const noexcept { return needed_; }
    std::size_t budget() const noexcept { return budget_; }

private:
    Integer needed_;
    std::size_t budget_;
};

/// Raised when a constructed witness or internal check fails. Never expected.
class InternalCheckFailed : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr std::size_t kDefaultBudget = 10'000'000;

/// Decimal text to Integer. Accepts an optional leading sign; rejects
/// anything else, including empty input and hex prefixes.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// Floor division and non-negative remainder for d > 0.
inline Integer floor_div(const Integer& n, const Integer& d) {
    Integer q = n / d;
    if (n % d != 0 && n < 0) {
        --q;
    }
    return q;
}

inline Integer floor_mod(const Integer& n, const Integer& d) {
    Integer r = n % d;
    if (r < 0) {
        r += d;
    }
    return r;
}

Integer pow(const Integer& base, unsigned exponent);

}  // namespace repcount
