#pragma once

#include <utility>

#include "combinadics/natural.hpp"

namespace combinadics {

/// Extended binomial coefficient: C(n, r) = n! / (r! (n-r)!) when n >= r,
/// and 0 when n < r. Total on all non-negative inputs, always exact.
///
/// Computed as the running product of (n-r+i)/i for i = 1..r with an exact
/// division at every step, so intermediates never exceed the result by more
/// than one factor.
Natural binomial(const Natural& n, const Natural& r);

/// Both sides of the Pascal recurrence:
///   first  = C(n+1, r)
///   second = C(n, r) + C(n, r-1)
/// The two are equal for every n and every r >= 1. Returned as a pair so a
/// mismatch (which would indicate a broken binomial) is directly inspectable.
/// Throws Error(InvalidArgument) when r = 0.
std::pair<Natural, Natural> pascal_lhs_rhs(const Natural& n, const Natural& r);

/// Both sides of the Hockey-Stick identity:
///   first  = C(n+1, r)
///   second = sum over j = 0..r of C(n-r+j, j)
/// Requires n >= r so every summand index is non-negative; throws
/// Error(InvalidArgument) otherwise.
std::pair<Natural, Natural> hockey_stick_lhs_rhs(const Natural& n, const Natural& r);

/// The strict-gap pair behind greedy digit maximality:
///   first  = C(n+r, r)
///   second = sum over i = 1..r of C(n+i-1, i)
/// first exceeds second by exactly 1 for every n >= 0, r >= 1; the +1 is
/// what the successor operation absorbs when it collapses a run.
/// Throws Error(InvalidArgument) when r = 0.
std::pair<Natural, Natural> gap_lhs_rhs(const Natural& n, const Natural& r);

namespace detail {

// In-place binomial used by the hot paths (greedy digit search, sweeps).
// Avoids the temporary churn of the value-returning overload.
void binomial_assign(mpz_class& out, const mpz_class& n, const mpz_class& r);
void binomial_assign_ui(mpz_class& out, unsigned long n, unsigned long r);

}  // namespace detail

}  // namespace combinadics
