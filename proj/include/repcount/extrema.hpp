#pragma once

#include <repcount/counting.hpp>
#include <repcount/numeral.hpp>
#include <repcount/scan.hpp>

namespace repcount {

/// Exact maximum of a counting function over an inclusive interval and the
/// smallest argument attaining it.
struct MaxScan {
    Count max_value;
    Integer first_argmax;
};

struct MaxReport {
    Interval interval;
    Count max_value;
    Integer first_argmax;
    Integer predicted_argmax;
    Count predicted_value;
    /// max_value == predicted_value and the predicted argmax, which lies in
    /// the interval, attains it.
    bool agree;

    bool first_argmax_matches() const { return first_argmax == predicted_argmax; }
};

/// First maximiser of f_d on [d^(k-2), d^(k-1)):
/// [(1 0)^(k/2 - 1) 0]_d for even k, [(1 0)^((k-1)/2)]_d for odd k.
Integer defant_A(unsigned k, int d);

/// Point where b_4 reaches F_{r+3} on I_{r+1}: [(1 2)^ceil(r/2)]_4 for odd r,
/// [(1 2)^(r/2) 2]_4 for even r, computed from the closed forms
/// 2(4^(r+1) - 1)/5 and 2 + 8(4^r - 1)/5.
Integer balanced_argmax(unsigned r);

MaxScan max_scan(CountKind kind, int d, const Interval& interval,
                 const ScanOptions& options = {});

/// Scans [d^(k-2), d^(k-1) - 1]; predicts F_k first attained at defant_A(k, d).
MaxReport verify_hyper_maxima(unsigned k, int d, const ScanOptions& options = {});

/// Scans interval_I(4, r + 1); predicts F_{r+3} attained at balanced_argmax(r).
/// Whether the first argmax equals the prediction is recorded, not required.
MaxReport verify_balanced_maxima(unsigned r, const ScanOptions& options = {});

}  // namespace repcount
