#include <repcount/numeral.hpp>

#include <algorithm>
#include <string>

namespace repcount {

BaseParams::BaseParams(int d) : d_(d) {
    if (d < 2) {
        throw DomainError("base must be at least 2, got " + std::to_string(d));
    }
}

BaseParams BaseParams::balanced(int d) {
    BaseParams base(d);
    Alphabet::balanced().require_compatible(base);
    return base;
}

int BaseParams::ell() const {
    if (!even()) {
        throw DomainError("half-base is undefined for odd base " + std::to_string(d_));
    }
    return d_ / 2;
}

void Alphabet::require_compatible(const BaseParams& base) const {
    if (kind_ == AlphabetKind::Balanced && (!base.even() || base.d() < 4)) {
        throw DomainError("balanced alphabet needs an even base >= 4, got " +
                          std::to_string(base.d()));
    }
}

int Alphabet::min_digit(const BaseParams& base) const {
    require_compatible(base);
    return kind_ == AlphabetKind::Balanced ? -base.ell() : 0;
}

int Alphabet::max_digit(const BaseParams& base) const {
    require_compatible(base);
    switch (kind_) {
        case AlphabetKind::Standard: return base.d() - 1;
        case AlphabetKind::Hyper: return base.d();
        case AlphabetKind::Balanced: return base.ell();
    }
    return 0;
}

bool Alphabet::contains(const BaseParams& base, int digit) const {
    return min_digit(base) <= digit && digit <= max_digit(base);
}

const char* to_string(AlphabetKind kind) noexcept {
    switch (kind) {
        case AlphabetKind::Standard: return "standard";
        case AlphabetKind::Hyper: return "hyper";
        case AlphabetKind::Balanced: return "balanced";
    }
    return "?";
}

DigitVec::DigitVec(BaseParams base, std::vector<int> lsf_digits)
    : base_(base), digits_(std::move(lsf_digits)) {
    if (digits_.empty()) {
        throw DomainError("digit vector must have at least one digit");
    }
}

DigitVec DigitVec::from_display(BaseParams base, std::span<const int> msf_digits) {
    return DigitVec(base, std::vector<int>(msf_digits.rbegin(), msf_digits.rend()));
}

DigitVec DigitVec::from_display(BaseParams base, std::initializer_list<int> msf_digits) {
    return from_display(base, std::span<const int>(msf_digits.begin(), msf_digits.size()));
}

std::vector<int> DigitVec::display_digits() const {
    return {digits_.rbegin(), digits_.rend()};
}

DigitVec DigitVec::canonical() const {
    std::vector<int> out = digits_;
    while (out.size() > 1 && out.back() == 0) {
        out.pop_back();
    }
    return DigitVec(base_, std::move(out));
}

bool DigitVec::is_canonical() const noexcept {
    return digits_.size() == 1 || digits_.back() != 0;
}

bool DigitVec::same_value(const DigitVec& other) const {
    return eval(*this) == eval(other);
}

Interval::Interval(Integer lo, Integer hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) {
        throw DomainError("empty interval [" + to_string(lo_) + ", " + to_string(hi_) + "]");
    }
}

Integer eval(const DigitVec& v) {
    Integer value = 0;
    const auto digits = v.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        value = value * v.base().d() + *it;
    }
    return value;
}

bool validate(const DigitVec& v, Alphabet alphabet) {
    const auto& base = v.base();
    const int lo = alphabet.min_digit(base);
    const int hi = alphabet.max_digit(base);
    return std::ranges::all_of(v.digits(), [&](int x) { return lo <= x && x <= hi; });
}

Integer repunit(int d, unsigned j) {
    BaseParams base(d);
    Integer value = 0;
    for (unsigned i = 0; i < j; ++i) {
        value = value * base.d() + 1;
    }
    return value;
}

Interval interval_I(int d, unsigned j) {
    const auto base = BaseParams::balanced(d);
    if (j < 1) {
        throw DomainError("interval index j must be at least 1");
    }
    const int m = base.ell() - 1;
    return {-m * repunit(d, j), m * repunit(d, j + 1)};
}

Interval interval_I_shifted(int d, unsigned j) {
    const auto base = BaseParams::balanced(d);
    return interval_I(d, j).translated(base.ell() * repunit(d, j));
}

DigitVec to_standard_digits(const Integer& n, int d) {
    BaseParams base(d);
    if (n < 0) {
        throw DomainError("standard representation needs n >= 0, got " + to_string(n));
    }
    std::vector<int> digits;
    Integer rest = n;
    do {
        digits.push_back(static_cast<int>(rest % d));
        rest /= d;
    } while (rest != 0);
    return DigitVec(base, std::move(digits));
}

}  // namespace repcount
