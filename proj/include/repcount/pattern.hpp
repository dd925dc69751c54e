#pragma once

#include <repcount/numeral.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace repcount {

// Compressed digit notation, most-significant digit first:
//
//   pattern := "[" items "]" "_" base
//   items   := item { item }
//   item    := digit | "(" items ")" "^" count | digit "x" count
//   digit   := ["-"] nonneg
//
// "[(1 2)^3]_4" is 1 2 1 2 1 2 in base 4 and "[2x5]_6" is five 2s in base 6.

struct PatternItem;

struct Lit {
    int digit;
    friend bool operator==(const Lit&, const Lit&) = default;
};

struct Run {
    int digit;
    unsigned count;
    friend bool operator==(const Run&, const Run&) = default;
};

struct Group {
    std::vector<PatternItem> items;
    unsigned count;
    friend bool operator==(const Group&, const Group&) = default;
};

struct PatternItem {
    std::variant<Lit, Group, Run> node;
    friend bool operator==(const PatternItem&, const PatternItem&) = default;
};

struct PatternExpr {
    int base;
    std::vector<PatternItem> items;
    friend bool operator==(const PatternExpr&, const PatternExpr&) = default;
};

class ParseError : public DomainError {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Upper bound on expanded length; larger patterns are rejected.
inline constexpr std::size_t kMaxExpandedDigits = 10'000'000;

PatternExpr parse_pattern(std::string_view text);

/// Canonical spelling: single spaces, count-1 groups spliced, one-digit
/// groups and nested single groups folded into runs or larger powers.
std::string format(const PatternExpr& p);
PatternExpr canonical(const PatternExpr& p);

DigitVec expand(const PatternExpr& p);

/// Flat spelling of a digit vector, e.g. "[1 -2 -2 1]_4".
std::string to_pattern_string(const DigitVec& v);

/// Decimal integer or pattern string; patterns are evaluated.
Integer parse_value(std::string_view text);

}  // namespace repcount
