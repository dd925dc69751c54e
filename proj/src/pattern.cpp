#include <repcount/pattern.hpp>

#include <cctype>
#include <limits>
#include <sstream>

namespace repcount {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : DomainError("at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

namespace {

class PatternParser {
public:
    explicit PatternParser(std::string_view text) : text_(text) {}

    PatternExpr parse() {
        expect('[');
        auto items = parse_items(']');
        expect(']');
        expect('_');
        skip_space();
        const std::size_t base_at = pos_;
        const auto base = parse_unsigned("base");
        if (base < 2) {
            throw ParseError("base must be at least 2", base_at);
        }
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError("trailing input", pos_);
        }
        return PatternExpr{static_cast<int>(base), std::move(items)};
    }

private:
    std::vector<PatternItem> parse_items(char closer) {
        std::vector<PatternItem> items;
        for (;;) {
            skip_space();
            if (at_end()) {
                throw ParseError(std::string("expected '") + closer + "'", pos_);
            }
            if (peek() == closer) {
                break;
            }
            items.push_back(parse_item());
        }
        if (items.empty()) {
            throw ParseError("empty digit list", pos_);
        }
        return items;
    }

    PatternItem parse_item() {
        if (peek() == '(') {
            ++pos_;
            auto inner = parse_items(')');
            expect(')');
            expect('^');
            skip_space();
            return PatternItem{Group{std::move(inner), parse_count()}};
        }
        const int digit = parse_digit();
        skip_space();
        if (!at_end() && peek() == 'x') {
            ++pos_;
            skip_space();
            return PatternItem{Run{digit, parse_count()}};
        }
        return PatternItem{Lit{digit}};
    }

    int parse_digit() {
        const std::size_t start = pos_;
        bool negative = false;
        if (!at_end() && peek() == '-') {
            negative = true;
            ++pos_;
        }
        const auto magnitude = parse_unsigned("digit");
        if (magnitude > static_cast<unsigned long long>(std::numeric_limits<int>::max())) {
            throw ParseError("digit out of range", start);
        }
        const int value = static_cast<int>(magnitude);
        return negative ? -value : value;
    }

    unsigned parse_count() {
        const std::size_t start = pos_;
        const auto count = parse_unsigned("count");
        if (count == 0) {
            throw ParseError("count must be positive", start);
        }
        if (count > std::numeric_limits<unsigned>::max()) {
            throw ParseError("count out of range", start);
        }
        return static_cast<unsigned>(count);
    }

    unsigned long long parse_unsigned(const char* what) {
        const std::size_t start = pos_;
        unsigned long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const unsigned next = static_cast<unsigned>(peek() - '0');
            if (value > (std::numeric_limits<unsigned long long>::max() - next) / 10) {
                throw ParseError(std::string(what) + " out of range", start);
            }
            value = value * 10 + next;
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError(std::string("expected ") + what, start);
        }
        return value;
    }

    void expect(char c) {
        skip_space();
        if (at_end() || peek() != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<PatternItem> canonical_items(const std::vector<PatternItem>& items);

// Canonical form of one item, appended to out (count-1 groups splice).
void append_canonical(const PatternItem& item, std::vector<PatternItem>& out) {
    if (const auto* lit = std::get_if<Lit>(&item.node)) {
        out.push_back(PatternItem{*lit});
        return;
    }
    if (const auto* run = std::get_if<Run>(&item.node)) {
        if (run->count == 1) {
            out.push_back(PatternItem{Lit{run->digit}});
        } else {
            out.push_back(item);
        }
        return;
    }
    const auto& group = std::get<Group>(item.node);
    auto inner = canonical_items(group.items);
    if (group.count == 1) {
        out.insert(out.end(), inner.begin(), inner.end());
        return;
    }
    if (inner.size() == 1) {
        const auto& only = inner.front().node;
        const unsigned long long limit = std::numeric_limits<unsigned>::max();
        if (const auto* lit = std::get_if<Lit>(&only)) {
            out.push_back(PatternItem{Run{lit->digit, group.count}});
            return;
        }
        if (const auto* run = std::get_if<Run>(&only);
            run && 1ull * run->count * group.count <= limit) {
            out.push_back(PatternItem{Run{run->digit, run->count * group.count}});
            return;
        }
        if (const auto* nested = std::get_if<Group>(&only);
            nested && 1ull * nested->count * group.count <= limit) {
            out.push_back(PatternItem{Group{nested->items, nested->count * group.count}});
            return;
        }
    }
    out.push_back(PatternItem{Group{std::move(inner), group.count}});
}

std::vector<PatternItem> canonical_items(const std::vector<PatternItem>& items) {
    std::vector<PatternItem> out;
    for (const auto& item : items) {
        append_canonical(item, out);
    }
    return out;
}

void print_items(const std::vector<PatternItem>& items, std::ostream& os) {
    bool first = true;
    for (const auto& item : items) {
        if (!first) {
            os << ' ';
        }
        first = false;
        if (const auto* lit = std::get_if<Lit>(&item.node)) {
            os << lit->digit;
        } else if (const auto* run = std::get_if<Run>(&item.node)) {
            os << run->digit << 'x' << run->count;
        } else {
            const auto& group = std::get<Group>(item.node);
            os << '(';
            print_items(group.items, os);
            os << ")^" << group.count;
        }
    }
}

std::size_t expanded_length(const std::vector<PatternItem>& items) {
    std::size_t total = 0;
    for (const auto& item : items) {
        std::size_t len = 0;
        if (std::holds_alternative<Lit>(item.node)) {
            len = 1;
        } else if (const auto* run = std::get_if<Run>(&item.node)) {
            len = run->count;
        } else {
            const auto& group = std::get<Group>(item.node);
            const std::size_t inner = expanded_length(group.items);
            len = inner > kMaxExpandedDigits / group.count ? kMaxExpandedDigits + 1
                                                          : inner * group.count;
        }
        total += len;
        if (total > kMaxExpandedDigits) {
            return kMaxExpandedDigits + 1;
        }
    }
    return total;
}

void expand_items(const std::vector<PatternItem>& items, std::vector<int>& msf) {
    for (const auto& item : items) {
        if (const auto* lit = std::get_if<Lit>(&item.node)) {
            msf.push_back(lit->digit);
        } else if (const auto* run = std::get_if<Run>(&item.node)) {
            msf.insert(msf.end(), run->count, run->digit);
        } else {
            const auto& group = std::get<Group>(item.node);
            for (unsigned i = 0; i < group.count; ++i) {
                expand_items(group.items, msf);
            }
        }
    }
}

}  // namespace

PatternExpr parse_pattern(std::string_view text) { return PatternParser(text).parse(); }

PatternExpr canonical(const PatternExpr& p) { return {p.base, canonical_items(p.items)}; }

std::string format(const PatternExpr& p) {
    std::ostringstream os;
    os << '[';
    print_items(canonical_items(p.items), os);
    os << "]_" << p.base;
    return os.str();
}

DigitVec expand(const PatternExpr& p) {
    if (expanded_length(p.items) > kMaxExpandedDigits) {
        throw DomainError("pattern expands to more than " + std::to_string(kMaxExpandedDigits) +
                          " digits");
    }
    std::vector<int> msf;
    expand_items(p.items, msf);
    return DigitVec::from_display(BaseParams(p.base), msf);
}

std::string to_pattern_string(const DigitVec& v) {
    std::ostringstream os;
    os << '[';
    const auto msf = v.display_digits();
    for (std::size_t i = 0; i < msf.size(); ++i) {
        if (i != 0) {
            os << ' ';
        }
        os << msf[i];
    }
    os << "]_" << v.base().d();
    return os.str();
}

Integer parse_value(std::string_view text) {
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) {
        ++first;
    }
    if (first < text.size() && text[first] == '[') {
        return eval(expand(parse_pattern(text)));
    }
    return parse_integer(text);
}

}  // namespace repcount
