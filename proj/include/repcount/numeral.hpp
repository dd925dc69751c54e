#pragma once

#include <repcount/integer.hpp>

#include <initializer_list>
#include <span>
#include <vector>

namespace repcount {

/// A radix d >= 2. The half-base ell = d/2 exists only for even d.
class BaseParams {
public:
    explicit BaseParams(int d);

    /// Base usable for balanced representations: even and at least 4.
    static BaseParams balanced(int d);

    int d() const noexcept { return d_; }
    bool even() const noexcept { return d_ % 2 == 0; }
    int ell() const;

    friend bool operator==(const BaseParams&, const BaseParams&) = default;

private:
    int d_;
};

enum class AlphabetKind { Standard, Hyper, Balanced };

/// Digit set in force for a base:
///   Standard {0..d-1}, Hyper {0..d}, Balanced {-ell..ell} (even d >= 4 only).
class Alphabet {
public:
    constexpr explicit Alphabet(AlphabetKind kind) noexcept : kind_(kind) {}

    static constexpr Alphabet standard() noexcept { return Alphabet(AlphabetKind::Standard); }
    static constexpr Alphabet hyper() noexcept { return Alphabet(AlphabetKind::Hyper); }
    static constexpr Alphabet balanced() noexcept { return Alphabet(AlphabetKind::Balanced); }

    constexpr AlphabetKind kind() const noexcept { return kind_; }

    /// Throws DomainError when the alphabet is not defined for the base.
    void require_compatible(const BaseParams& base) const;

    int min_digit(const BaseParams& base) const;
    int max_digit(const BaseParams& base) const;
    bool contains(const BaseParams& base, int digit) const;

    friend constexpr bool operator==(Alphabet, Alphabet) = default;

private:
    AlphabetKind kind_;
};

const char* to_string(AlphabetKind kind) noexcept;

/// Finite signed-digit string. digits()[i] is the coefficient of d^i.
/// Digits are unconstrained integers; alphabet membership is checked by
/// validate(). Equality is positional, so [0 1] and [1] differ; use
/// same_value() to compare values.
class DigitVec {
public:
    DigitVec(BaseParams base, std::vector<int> lsf_digits);

    /// Builds from most-significant-first digits, the usual written order.
    static DigitVec from_display(BaseParams base, std::span<const int> msf_digits);
    static DigitVec from_display(BaseParams base, std::initializer_list<int> msf_digits);

    const BaseParams& base() const noexcept { return base_; }
    std::span<const int> digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    std::vector<int> display_digits() const;

    /// Same digits with most-significant zeros removed; [0] stays [0].
    DigitVec canonical() const;
    bool is_canonical() const noexcept;

    bool same_value(const DigitVec& other) const;

    friend bool operator==(const DigitVec&, const DigitVec&) = default;

private:
    BaseParams base_;
    std::vector<int> digits_;
};

/// Inclusive interval [lo, hi] with lo <= hi.
class Interval {
public:
    Interval(Integer lo, Integer hi);

    const Integer& lo() const noexcept { return lo_; }
    const Integer& hi() const noexcept { return hi_; }

    bool contains(const Integer& n) const { return lo_ <= n && n <= hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
    Integer size() const { return hi_ - lo_ + 1; }
    Interval translated(const Integer& by) const { return {lo_ + by, hi_ + by}; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Integer lo_;
    Integer hi_;
};

Integer eval(const DigitVec& v);

bool validate(const DigitVec& v, Alphabet alphabet);

/// Value of j ones in base d: (d^j - 1)/(d - 1).
Integer repunit(int d, unsigned j);

/// Maximal interval on which the j-fold all-ell shift identity holds:
/// [-(ell-1)*repunit(d,j), (ell-1)*repunit(d,j+1)]. Requires even d >= 4, j >= 1.
Interval interval_I(int d, unsigned j);

/// interval_I(d, j) translated by ell*repunit(d, j).
Interval interval_I_shifted(int d, unsigned j);

/// Unique standard representation of n >= 0 without most-significant zeros.
DigitVec to_standard_digits(const Integer& n, int d);

}  // namespace repcount
