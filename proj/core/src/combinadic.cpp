#include "combinadics/combinadic.hpp"

#include <cassert>
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

Combinadic Combinadic::zero(std::size_t degree) {
  if (degree == 0) {
    throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  }
  std::vector<Natural> coeffs;
  coeffs.reserve(degree);
  for (std::size_t i = degree; i-- > 0;) {
    coeffs.emplace_back(static_cast<unsigned long long>(i));
  }
  return Combinadic(std::move(coeffs));
}

Combinadic Combinadic::from_coefficients(std::vector<Natural> coefficients) {
  if (coefficients.empty()) {
    throw Error(ErrorKind::EmptyRepresentation, "a representation needs at least one term");
  }
  const std::size_t r = coefficients.size();
  for (std::size_t p = 0; p + 1 < r; ++p) {
    if (!(coefficients[p] > coefficients[p + 1])) {
      // Subscripts follow the C_r..C_1 convention: storage position p holds C_{r-p}.
      std::ostringstream msg;
      msg << "adjacent pair (C_" << r - p << ", C_" << r - p - 1 << ") = ("
          << coefficients[p] << ", " << coefficients[p + 1]
          << ") does not strictly decrease";
      throw Error(ErrorKind::NotStrictlyDecreasing, msg.str());
    }
  }
  return Combinadic(std::move(coefficients));
}

Combinadic Combinadic::parse(std::string_view text) {
  std::vector<Natural> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    coeffs.push_back(Natural::parse(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_coefficients(std::move(coeffs));
}

std::string Combinadic::str() const { return join(coefficients_); }

std::ostream& operator<<(std::ostream& os, const Combinadic& rep) {
  return os << rep.str();
}

Natural decode(const Combinadic& rep) {
  const auto& cs = rep.coefficients();
  const std::size_t r = cs.size();
  Natural sum;
  mpz_class term;
  mpz_class index;
  for (std::size_t i = 1; i <= r; ++i) {
    mpz_set_ui(index.get_mpz_t(), static_cast<unsigned long>(i));
    detail::binomial_assign(term, cs[r - i].mpz(), index);
    sum.mpz() += term;
  }
  return sum;
}

Combinadic encode(const Natural& m, std::size_t degree) {
  if (degree == 0) {
    throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  }
  std::vector<Natural> coeffs(degree);
  mpz_class rem = m.mpz();
  mpz_class index, lo, hi, mid, probe, cap;
  bool has_cap = false;

  for (std::size_t i = degree; i >= 1; --i) {
    mpz_class& c = coeffs[degree - i].mpz();
    mpz_set_ui(index.get_mpz_t(), static_cast<unsigned long>(i));

    if (mpz_sgn(rem.get_mpz_t()) == 0) {
      // Largest c with C(c, i) = 0 is i-1; always below the cap because
      // the coefficient above is at least i.
      c = i - 1;
    } else {
      // Bracket the digit: lo is always feasible, grow hi by doubling until
      // it overshoots the remainder or the cap.
      lo = i - 1;
      hi = i;
      while (true) {
        if (has_cap && hi > cap) {
          hi = cap + 1;
          break;
        }
        detail::binomial_assign(probe, hi, index);
        if (probe > rem) break;
        lo = hi;
        hi *= 2;
      }
      // Largest c in [lo, hi) with C(c, i) <= rem.
      while (hi - lo > 1) {
        mid = lo + (hi - lo) / 2;
        detail::binomial_assign(probe, mid, index);
        if (probe <= rem) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      c = lo;
      detail::binomial_assign(probe, c, index);
      rem -= probe;
    }

    if (i > 1) {
      cap = c - 1;
      has_cap = true;
    }
  }
  assert(mpz_sgn(rem.get_mpz_t()) == 0 && "greedy digits must consume the whole value");

  return Combinadic::from_coefficients(std::move(coeffs));
}

Combinadic successor(const Combinadic& rep) {
  const auto& cs = rep.coefficients();
  const std::size_t r = cs.size();

  // Maximal run C_{l+1} = C_l + 1 starting at C_1 (storage index r-1).
  std::size_t run = 1;
  while (run < r && cs[r - run - 1] == cs[r - run] + 1) {
    ++run;
  }

  std::vector<Natural> out = cs;
  // The run plus the carried 1 collapses into a single term at position
  // `run`; when run == r this is a brand-new top coefficient.
  out[r - run] = cs[r - 1] + run;
  for (std::size_t l = 1; l < run; ++l) {
    out[r - l] = l - 1;
  }
  return Combinadic::from_coefficients(std::move(out));
}

Combinadic predecessor(const Combinadic& rep) {
  Natural value = decode(rep);
  if (value.is_zero()) {
    throw Error(ErrorKind::PredecessorOfZero,
                "the zero representation " + rep.str() + " has no predecessor");
  }
  --value;
  return encode(value, rep.degree());
}

std::strong_ordering compare(const Combinadic& a, const Combinadic& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::DegreeMismatch,
                "cannot order degree " + std::to_string(a.degree()) +
                    " against degree " + std::to_string(b.degree()));
  }
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  for (std::size_t p = 0; p < x.size(); ++p) {
    auto order = x[p] <=> y[p];
    if (order != std::strong_ordering::equal) return order;
  }
  return std::strong_ordering::equal;
}

}  // namespace combinadics
