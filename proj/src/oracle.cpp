#include <repcount/oracle.hpp>

#include <algorithm>
#include <string>

namespace repcount {

namespace {

void check_oracle_domain(const Integer& n, const BaseParams& base, Alphabet alphabet) {
    alphabet.require_compatible(base);
    if (alphabet.kind() == AlphabetKind::Hyper && !base.even()) {
        throw DomainError("hyper enumeration needs an even base, got " +
                          std::to_string(base.d()));
    }
    if (alphabet.kind() != AlphabetKind::Balanced && n < 0) {
        throw DomainError(std::string(to_string(alphabet.kind())) +
                          " representations need n >= 0, got " + to_string(n));
    }
}

bool display_less(const DigitVec& a, const DigitVec& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    const auto x = a.digits();
    const auto y = b.digits();
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

class ResidueSearch {
public:
    ResidueSearch(const BaseParams& base, Alphabet alphabet)
        : base_(base),
          lo_(alphabet.min_digit(base)),
          hi_(alphabet.max_digit(base)),
          nonnegative_(lo_ >= 0) {}

    std::vector<DigitVec> run(const Integer& n) {
        if (n == 0) {
            return {DigitVec(base_, {0})};
        }
        descend(n);
        return std::move(found_);
    }

private:
    // rest != 0 is the value the digits above the current position must
    // represent.
    void descend(const Integer& rest) {
        const int d = base_.d();
        const int residue = static_cast<int>(floor_mod(rest, d));
        int digit = lo_ + static_cast<int>(floor_mod(Integer(residue - lo_), d));
        for (; digit <= hi_; digit += d) {
            Integer next = (rest - digit) / d;
            if (nonnegative_ && next < 0) {
                continue;
            }
            digits_.push_back(digit);
            if (next == 0) {
                found_.emplace_back(base_, digits_);
            } else {
                descend(next);
            }
            digits_.pop_back();
        }
    }

    BaseParams base_;
    int lo_;
    int hi_;
    bool nonnegative_;
    std::vector<int> digits_;
    std::vector<DigitVec> found_;
};

}  // namespace

std::vector<DigitVec> enumerate_reps(const Integer& n, int d, Alphabet alphabet) {
    const BaseParams base(d);
    check_oracle_domain(n, base, alphabet);
    auto reps = ResidueSearch(base, alphabet).run(n);
    std::ranges::sort(reps, display_less);
    return reps;
}

Count count_via_enumeration(const Integer& n, int d, Alphabet alphabet) {
    return Count(enumerate_reps(n, d, alphabet).size());
}

// A canonical string of length m+1 has |value| >= d^m when all digits are
// nonnegative, and >= d^m - M(d^m - 1)/(d - 1) for a symmetric alphabet with
// maximum magnitude M < d/2 + 1. Both bounds grow with m.
unsigned max_representation_length(const Integer& n, int d, Alphabet alphabet) {
    const BaseParams base(d);
    check_oracle_domain(n, base, alphabet);
    const Integer target = abs(n);
    const int lo = alphabet.min_digit(base);
    const int magnitude = std::max(-lo, alphabet.max_digit(base));
    unsigned m = 0;
    Integer power = 1;
    for (;;) {
        Integer smallest = power;
        if (lo < 0) {
            smallest -= magnitude * ((power - 1) / (d - 1));
        }
        if (smallest > target) {
            return std::max(m, 1u);
        }
        ++m;
        power *= d;
    }
}

std::vector<DigitVec> enumerate_reps_exhaustive(const Integer& n, int d, Alphabet alphabet) {
    const BaseParams base(d);
    const unsigned max_len = max_representation_length(n, d, alphabet);
    const int lo = alphabet.min_digit(base);
    const int hi = alphabet.max_digit(base);

    std::vector<DigitVec> reps;
    for (unsigned len = 1; len <= max_len; ++len) {
        std::vector<int> digits(len, lo);
        for (;;) {
            DigitVec v(base, digits);
            if ((len == 1 || digits.back() != 0) && eval(v) == n) {
                reps.push_back(std::move(v));
            }
            std::size_t i = 0;
            while (i < len && digits[i] == hi) {
                digits[i] = lo;
                ++i;
            }
            if (i == len) {
                break;
            }
            ++digits[i];
        }
    }
    std::ranges::sort(reps, display_less);
    return reps;
}

bool hyper_is_one_predicate(const Integer& n) {
    if (n < 1) {
        throw DomainError("predicate needs n >= 1, got " + to_string(n));
    }
    const DigitVec standard = to_standard_digits(n, 4);
    return std::ranges::all_of(standard.digits(), [](int x) { return x >= 1 && x <= 3; });
}

bool balanced_is_one_predicate(const Integer& n) {
    Integer rest = n;
    while (rest != 0) {
        int k = static_cast<int>(floor_mod(rest, 4));
        if (k == 2) {
            return false;
        }
        if (k == 3) {
            k = -1;
        }
        rest = (rest - k) / 4;
    }
    return true;
}

DigitVec normalize_balanced(const DigitVec& v) {
    if (!validate(v, Alphabet::balanced())) {
        throw DomainError("not a balanced representation: digits outside [-ell, ell]");
    }
    const int ell = v.base().ell();
    std::vector<int> digits(v.digits().begin(), v.digits().end());
    for (;;) {
        auto leftmost = std::find(digits.rbegin(), digits.rend(), -ell);
        if (leftmost == digits.rend()) {
            break;
        }
        auto i = static_cast<std::size_t>(digits.rend() - leftmost - 1);
        // Walk up the chain: each step may move the -ell one place left,
        // when the digit above was -(ell-1).
        for (;;) {
            if (i + 1 == digits.size()) {
                digits.push_back(0);
            }
            digits[i] = ell;
            --digits[i + 1];
            if (digits[i + 1] != -ell) {
                break;
            }
            ++i;
        }
    }
    return DigitVec(v.base(), std::move(digits));
}

}  // namespace repcount
