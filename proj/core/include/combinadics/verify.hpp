#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "combinadics/combinadic.hpp"
#include "combinadics/natural.hpp"

namespace combinadics {

/// Two representations that decoded to the same value — the witness a
/// uniqueness violation would produce.
struct DuplicateEntry {
  Natural value;
  Combinadic first;
  Combinadic second;

  bool operator==(const DuplicateEntry& rhs) const = default;
};

/// Result of an exhaustive sweep. Violations accumulate here instead of
/// aborting the sweep, so one run characterizes every failure.
///
/// Field use by sweep:
///  - sweep_uniqueness: values_covered counts distinct in-range values;
///    duplicates and gaps are existence/uniqueness violations.
///  - sweep_roundtrip: values_covered counts values swept; a decode
///    round-trip failure at m is recorded as a gap at m, and a successor
///    mismatch at m records the two rival representations of m+1 as a
///    duplicate.
///  - sweep_identities: only the identities_* counters are used.
struct VerifyReport {
  std::size_t degree = 0;
  Natural coefficient_bound;
  Natural values_covered;
  std::vector<DuplicateEntry> duplicates;
  std::vector<Natural> gaps;
  std::uint64_t identities_checked = 0;
  std::uint64_t identities_failed = 0;

  bool pass() const {
    return duplicates.empty() && gaps.empty() && identities_failed == 0;
  }

  /// Line-oriented text form, stable for golden tests:
  ///   RESULT pass|fail
  ///   COVERED <n>
  ///   DUPLICATE <value> <rep1> <rep2>   (zero or more)
  ///   GAP <value>                       (zero or more)
  ///   IDENTITIES <checked> <failed>
  std::string serialize() const;
};

/// Brute-force witness for existence and uniqueness: enumerates every
/// strictly decreasing r-tuple with C_r < coefficient_bound (in
/// lexicographic order of the descending tuples), computes each tuple's
/// value by direct summation — independently of encode — and checks that
/// the values are pairwise distinct and fill [0, C(coefficient_bound, r))
/// without gaps.
/// Throws Error(InvalidArgument) when r = 0 or coefficient_bound < r.
VerifyReport sweep_uniqueness(std::size_t r, const Natural& coefficient_bound);

/// For every m in [0, m_max]: decode(encode(m, r)) must equal m, and
/// successor(encode(m, r)) must equal encode(m+1, r). Large ranges are
/// partitioned across threads; the merged report is identical to a
/// sequential run. Throws Error(InvalidArgument) when r = 0.
VerifyReport sweep_roundtrip(std::size_t r, const Natural& m_max);

/// Exhaustive identity checks:
///  - Pascal recurrence for n <= n_max, 1 <= r <= r_max,
///  - Hockey-Stick identity for r <= n <= n_max,
///  - the gap pair differing by exactly 1 for n <= n_max, 1 <= r <= r_max,
///  - strict monotonicity of C(., r) on adjacent n with n >= r.
VerifyReport sweep_identities(std::size_t n_max, std::size_t r_max);

}  // namespace combinadics
