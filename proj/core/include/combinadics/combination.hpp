#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combinadics/combinadic.hpp"
#include "combinadics/natural.hpp"

namespace combinadics {

/// 0-based colexicographic position of a combination. Same arithmetic as
/// any Natural; the alias marks intent in signatures.
using Rank = Natural;

/// An r-combination: strictly increasing 0-based element indices
/// (c_1 < c_2 < ... < c_r). It is the ascending view of a Combinadic —
/// reversing the element tuple gives the descending coefficient tuple and
/// vice versa, so the two types are in bijection.
class Combination {
public:
  /// Validates and adopts an ascending element tuple.
  /// Throws Error(EmptyCombination) on an empty tuple and
  /// Error(NotStrictlyIncreasing) on an order violation.
  static Combination from_elements(std::vector<Natural> elements);

  /// Parses the canonical text form: comma-separated decimal elements,
  /// ascending, e.g. "0,3,4".
  static Combination parse(std::string_view text);

  static Combination from_combinadic(const Combinadic& rep);
  Combinadic to_combinadic() const;

  std::size_t size() const { return elements_.size(); }
  const std::vector<Natural>& elements() const { return elements_; }

  /// Canonical text form, e.g. "0,3,4".
  std::string str() const;

  bool operator==(const Combination& rhs) const = default;

  friend std::ostream& operator<<(std::ostream& os, const Combination& comb);

private:
  explicit Combination(std::vector<Natural> elements)
      : elements_(std::move(elements)) {}

  std::vector<Natural> elements_;
};

/// 0-based colexicographic rank: sum of C(c_i, i) for i = 1..r. The rank is
/// universe-free — it is the same no matter how large the ground set is.
Rank rank(const Combination& comb);

/// Inverse of rank for a fixed size r: the unique combination at the given
/// colex position. Throws Error(InvalidArgument) when r = 0.
Combination unrank(const Rank& x, std::size_t r);

/// Streams r-combinations in colexicographic order starting at a given
/// rank. Positions once via unrank, then steps with the successor
/// operation; it never unranks twice. One consumer per stream — to go
/// parallel, carve the rank space with split_range and give each worker
/// its own stream.
class ColexStream {
public:
  ColexStream(std::size_t r, const Rank& start);

  /// The combination at the current rank.
  Combination current() const { return Combination::from_combinadic(state_); }

  /// Advances to the next rank.
  void advance();

  /// current(), then advance().
  Combination next();

private:
  Combinadic state_;
};

/// The `count` combinations at ranks start, start+1, ..., start+count-1,
/// in colexicographic order. Throws Error(InvalidArgument) when r = 0.
std::vector<Combination> enumerate(std::size_t r, const Rank& start,
                                   unsigned long long count);

/// Splits [start, end) into `parts` contiguous half-open rank intervals
/// covering it exactly, sizes differing by at most one, larger parts first.
/// Deterministic; intended for carving work across independent streams.
/// Throws Error(InvalidRange) when start > end or parts = 0, and
/// Error(InvalidArgument) when r = 0.
std::vector<std::pair<Rank, Rank>> split_range(std::size_t r, const Rank& start,
                                               const Rank& end, std::size_t parts);

/// Renders a combination as an n-character '0'/'1' string, most significant
/// bit first: the leftmost character is element index n-1, the rightmost is
/// element index 0. Throws Error(ElementOutOfUniverse) when any element
/// is >= n and Error(InvalidArgument) when n = 0.
std::string to_bitstring(const Combination& comb, std::size_t universe);

/// Inverse of to_bitstring with n = s.length(). Throws
/// Error(MalformedBitstring) on characters outside {0,1} or empty input,
/// and Error(EmptyCombination) when no bit is set.
Combination from_bitstring(std::string_view s);

}  // namespace combinadics
