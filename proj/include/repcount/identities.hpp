#pragma once

#include <repcount/counting.hpp>
#include <repcount/numeral.hpp>
#include <repcount/scan.hpp>

#include <utility>
#include <vector>

namespace repcount {

/// Outcome of checking D_{j,d}(n) = f_d(ell*repunit(d,j) + n) - b_d(n) over
/// interval_I(d, j) and at the two points just outside it.
struct ShiftReport {
    int d;
    unsigned j;
    Interval interval;
    bool zero_on_interval;
    SignedCount left_boundary_value;
    SignedCount right_boundary_value;
    /// Interior points with D != 0, ascending.
    std::vector<std::pair<Integer, SignedCount>> failures;

    /// Zero inside, -1 at both neighbouring points.
    bool holds() const {
        return zero_on_interval && left_boundary_value == -1 && right_boundary_value == -1;
    }
};

ShiftReport verify_shift_interval(unsigned j, int d, const ScanOptions& options = {});

/// Smallest j >= 1 with n in interval_I_shifted(d, j), so that
/// f_d(n) = b_d(n - ell*repunit(d, j)).
unsigned covering_index(const Integer& n, int d);

/// Some n >= -k with f_d(n + k) != b_d(n), showing that shifting by k does
/// not turn f_d into b_d. Built from a balanced representation of k with
/// no digit -ell:
///   - if some digit delta_i != ell, n has digit 1 on top, -delta_i at
///     position i and ell-1 elsewhere, so b_d(n) = 1 while n + k has a
///     standard representation with leading 1 and an interior 0;
///   - otherwise k = ell*repunit(d, m+1) and n = hi(I_{m+1}) + 1.
/// The witness is checked numerically; InternalCheckFailed if it fails.
Integer witness_against_shift(const Integer& k, int d);

}  // namespace repcount
