#include <repcount/integer.hpp>

#include <cctype>

namespace repcount {

BudgetExceeded::BudgetExceeded(const Integer& needed, std::size_t budget)
    : std::runtime_error("scan needs " + to_string(needed) + " points, budget is " +
                         std::to_string(budget)),
      needed_(needed),
      budget_(budget) {}

Integer parse_integer(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw DomainError("not an integer: '" + std::string(text) + "'");
    }
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        const auto c = static_cast<unsigned char>(text[pos]);
        if (!std::isdigit(c)) {
            throw DomainError("not an integer: '" + std::string(text) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& value) { return value.str(); }

Integer pow(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

}  // namespace repcount
