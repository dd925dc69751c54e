#pragma once

#include <repcount/counting.hpp>
#include <repcount/numeral.hpp>

#include <vector>

namespace repcount {

/// Every canonical representation of n over the alphabet, sorted by length
/// and then by digits read most-significant-first.
///
/// Digits are chosen least-significant-first: the lowest digit must be
/// congruent to n mod d, and the remaining digits represent (n - digit)/d.
/// Preconditions: Hyper needs an even base and n >= 0, Standard needs
/// n >= 0, Balanced needs an even base >= 4 (balanced binary would be
/// infinite). Violations throw DomainError.
std::vector<DigitVec> enumerate_reps(const Integer& n, int d, Alphabet alphabet);

Count count_via_enumeration(const Integer& n, int d, Alphabet alphabet);

/// Same set as enumerate_reps, found by trying every digit string up to the
/// longest length whose smallest possible magnitude still fits |n|. Only
/// usable for tiny |n| and d; kept separate as a cross-check.
std::vector<DigitVec> enumerate_reps_exhaustive(const Integer& n, int d, Alphabet alphabet);

/// Longest canonical representation length that can still reach |n|.
unsigned max_representation_length(const Integer& n, int d, Alphabet alphabet);

/// Base 4, n >= 1: the standard quaternary digits are all in {1,2,3}.
bool hyper_is_one_predicate(const Integer& n);

/// Base 4: some balanced quaternary representation of n uses only {-1,0,1}.
bool balanced_is_one_predicate(const Integer& n);

/// Removes every digit -ell from a balanced representation by rewriting
/// the left-most one with [a -ell] -> [(a-1) ell], prepending a 0 when it
/// is the leading digit. Value is preserved and the result is still
/// balanced. Most-significant zeros are kept; call canonical() to drop them.
DigitVec normalize_balanced(const DigitVec& v);

}  // namespace repcount
