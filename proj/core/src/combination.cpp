#include "combinadics/combination.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "combinadics/binomial.hpp"
#include "combinadics/errors.hpp"

namespace combinadics {

namespace {

std::string join(const std::vector<Natural>& values) {
  std::string out;
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (p != 0) out += ',';
    out += values[p].str();
  }
  return out;
}

}  // namespace

Combination Combination::from_elements(std::vector<Natural> elements) {
  if (elements.empty()) {
    throw Error(ErrorKind::EmptyCombination, "a combination needs at least one element");
  }
  for (std::size_t p = 0; p + 1 < elements.size(); ++p) {
    if (!(elements[p] < elements[p + 1])) {
      std::ostringstream msg;
      msg << "elements " << elements[p] << " and " << elements[p + 1]
          << " at positions " << p + 1 << " and " << p + 2
          << " do not strictly increase";
      throw Error(ErrorKind::NotStrictlyIncreasing, msg.str());
    }
  }
  return Combination(std::move(elements));
}

Combination Combination::parse(std::string_view text) {
  std::vector<Natural> elements;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    elements.push_back(Natural::parse(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_elements(std::move(elements));
}

Combination Combination::from_combinadic(const Combinadic& rep) {
  std::vector<Natural> elements(rep.coefficients().rbegin(), rep.coefficients().rend());
  return Combination(std::move(elements));  // reversal of strictly decreasing is valid
}

Combinadic Combination::to_combinadic() const {
  std::vector<Natural> coeffs(elements_.rbegin(), elements_.rend());
  return Combinadic::from_coefficients(std::move(coeffs));
}

std::string Combination::str() const { return join(elements_); }

std::ostream& operator<<(std::ostream& os, const Combination& comb) {
  return os << comb.str();
}

Rank rank(const Combination& comb) {
  const auto& es = comb.elements();
  Natural sum;
  mpz_class term, index;
  for (std::size_t i = 1; i <= es.size(); ++i) {
    mpz_set_ui(index.get_mpz_t(), static_cast<unsigned long>(i));
    detail::binomial_assign(term, es[i - 1].mpz(), index);
    sum.mpz() += term;
  }
  return sum;
}

Combination unrank(const Rank& x, std::size_t r) {
  return Combination::from_combinadic(encode(x, r));
}

ColexStream::ColexStream(std::size_t r, const Rank& start) : state_(encode(start, r)) {}

void ColexStream::advance() { state_ = successor(state_); }

Combination ColexStream::next() {
  Combination result = current();
  advance();
  return result;
}

std::vector<Combination> enumerate(std::size_t r, const Rank& start,
                                   unsigned long long count) {
  ColexStream stream(r, start);
  std::vector<Combination> out;
  out.reserve(count);
  for (unsigned long long k = 0; k < count; ++k) {
    out.push_back(stream.next());
  }
  return out;
}

std::vector<std::pair<Rank, Rank>> split_range(std::size_t r, const Rank& start,
                                               const Rank& end, std::size_t parts) {
  if (r == 0) {
    throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  }
  if (parts == 0) {
    throw Error(ErrorKind::InvalidRange, "parts must be >= 1");
  }
  if (start > end) {
    throw Error(ErrorKind::InvalidRange,
                "start " + start.str() + " exceeds end " + end.str());
  }

  mpz_class total = end.mpz() - start.mpz();
  mpz_class base;
  // remainder < parts, so it fits a machine word
  unsigned long leftover =
      mpz_fdiv_q_ui(base.get_mpz_t(), total.get_mpz_t(), static_cast<unsigned long>(parts));

  std::vector<std::pair<Rank, Rank>> intervals;
  intervals.reserve(parts);
  Natural cursor = start;
  for (std::size_t p = 0; p < parts; ++p) {
    Natural next = cursor;
    next.mpz() += base;
    if (p < leftover) ++next;
    intervals.emplace_back(cursor, next);
    cursor = std::move(next);
  }
  return intervals;
}

std::string to_bitstring(const Combination& comb, std::size_t universe) {
  if (universe == 0) {
    throw Error(ErrorKind::InvalidArgument, "universe size must be >= 1");
  }
  const Natural bound(static_cast<unsigned long long>(universe));
  std::string bits(universe, '0');
  for (const Natural& element : comb.elements()) {
    if (!(element < bound)) {
      throw Error(ErrorKind::ElementOutOfUniverse,
                  "element " + element.str() + " does not fit a universe of " +
                      bound.str());
    }
    bits[universe - 1 - element.to_ulong()] = '1';
  }
  return bits;
}

Combination from_bitstring(std::string_view s) {
  if (s.empty()) {
    throw Error(ErrorKind::MalformedBitstring, "empty bitstring");
  }
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::MalformedBitstring,
                  std::string("unexpected character '") + c + "'");
    }
  }
  std::vector<Natural> elements;
  for (std::size_t p = s.size(); p-- > 0;) {
    if (s[p] == '1') {
      elements.emplace_back(static_cast<unsigned long long>(s.size() - 1 - p));
    }
  }
  if (elements.empty()) {
    throw Error(ErrorKind::EmptyCombination, "bitstring has no bit set");
  }
  return Combination::from_elements(std::move(elements));
}

}  // namespace combinadics
