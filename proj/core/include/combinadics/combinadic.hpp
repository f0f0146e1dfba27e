#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "combinadics/natural.hpp"

namespace combinadics {

/// A degree-r combinatorial representation: coefficients (C_r, ..., C_1)
/// stored in descending order, strictly decreasing, all non-negative.
/// The value it denotes is sum of C(C_i, i) for i = 1..r; entries with
/// C_i < i are legal and contribute 0.
///
/// There is no unchecked way to build one: every constructor path validates,
/// so holding a Combinadic is proof the invariants hold.
class Combinadic {
public:
  /// The degree-r representation of zero: (r-1, r-2, ..., 1, 0).
  /// Throws Error(InvalidArgument) when degree = 0.
  static Combinadic zero(std::size_t degree);

  /// Validates and adopts a descending coefficient tuple.
  /// Throws Error(EmptyRepresentation) on an empty tuple and
  /// Error(NotStrictlyDecreasing) naming the first offending adjacent pair.
  static Combinadic from_coefficients(std::vector<Natural> coefficients);

  /// Parses the canonical text form: comma-separated decimal coefficients,
  /// descending, no whitespace, e.g. "4,3,0".
  static Combinadic parse(std::string_view text);

  std::size_t degree() const { return coefficients_.size(); }

  /// Coefficients in storage order: coefficients()[0] is C_r,
  /// coefficients()[degree()-1] is C_1.
  const std::vector<Natural>& coefficients() const { return coefficients_; }

  /// C_i for subscript i in [1, degree()], counting from the low end.
  const Natural& coefficient(std::size_t i) const {
    return coefficients_[coefficients_.size() - i];
  }

  /// Canonical text form, e.g. "4,3,0".
  std::string str() const;

  bool operator==(const Combinadic& rhs) const = default;

  friend std::ostream& operator<<(std::ostream& os, const Combinadic& rep);

private:
  explicit Combinadic(std::vector<Natural> coefficients)
      : coefficients_(std::move(coefficients)) {}

  std::vector<Natural> coefficients_;
};

/// The value represented: sum of C(C_i, i) for i = 1..r. Exact.
Natural decode(const Combinadic& rep);

/// The unique degree-r representation of m, built greedily: for i = r down
/// to 1, C_i is the largest c (strictly below C_{i+1} when i < r) with
/// C(c, i) <= remaining value. Each digit is located by a doubling ascent
/// followed by binary search, so the cost is logarithmic in the digit.
/// Throws Error(InvalidArgument) when degree = 0.
Combinadic encode(const Natural& m, std::size_t degree);

/// The representation of decode(rep) + 1, computed without decoding.
///
/// Let j be the maximal run length with C_{l+1} = C_l + 1 for 1 <= l < j.
/// Adding 1 turns the run plus the carry into the single term
/// C(C_1 + j, j); positions j-1 down to 1 are refilled with the zero block
/// (j-2, ..., 1, 0). When the whole tuple is one run (j = r) the sum
/// collapses the same way into a new top coefficient C_1 + r.
Combinadic successor(const Combinadic& rep);

/// The representation of decode(rep) - 1, i.e. encode(decode(rep) - 1, r).
/// Throws Error(PredecessorOfZero) when rep represents 0.
Combinadic predecessor(const Combinadic& rep);

/// Orders two same-degree representations by the values they denote.
/// Lexicographic comparison of the descending tuples, which coincides with
/// numeric order of the decoded values.
/// Throws Error(DegreeMismatch) when the degrees differ.
std::strong_ordering compare(const Combinadic& a, const Combinadic& b);

}  // namespace combinadics
