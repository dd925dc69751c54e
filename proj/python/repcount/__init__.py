"""Counts of hyper-d-ary and balanced d-ary representations of integers."""

from ._core import (
    BudgetExceeded,
    Counter,
    balanced_argmax,
    balanced_count,
    balanced_is_one_predicate,
    count_via_enumeration,
    covering_index,
    defant_A,
    enumerate_reps,
    eval_digits,
    eval_pattern,
    expand_pattern,
    fibonacci,
    format_pattern,
    hyper_count,
    hyper_is_one_predicate,
    interval_I,
    interval_I_shifted,
    max_scan,
    normalize_balanced,
    repunit,
    shift_difference,
    stern,
    to_standard_digits,
    validate,
    verify_balanced_maxima,
    verify_hyper_maxima,
    verify_shift_interval,
    witness_against_shift,
)

__all__ = [name for name in dir() if not name.startswith("_")]
