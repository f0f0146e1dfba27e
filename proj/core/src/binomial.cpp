#include "combinadics/binomial.hpp"

#include "combinadics/errors.hpp"

namespace combinadics {

namespace detail {

void binomial_assign_ui(mpz_class& out, unsigned long n, unsigned long r) {
  if (r > n) {
    out = 0;
    return;
  }
  if (n - r < r) r = n - r;
  out = 1;
  for (unsigned long i = 1; i <= r; ++i) {
    mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), n - r + i);
    // The running product of (n-r+1)..(n-r+i) is divisible by i!, so this
    // division is exact at every step.
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), i);
  }
}

void binomial_assign(mpz_class& out, const mpz_class& n, const mpz_class& r) {
  if (r > n) {
    out = 0;
    return;
  }
  if (n.fits_ulong_p()) {  // r <= n, so r fits as well
    binomial_assign_ui(out, n.get_ui(), r.get_ui());
    return;
  }
  mpz_class k = n - r;
  if (r < k) k = r;
  out = 1;
  mpz_class numerator = n - k;
  mpz_class i = 0;
  while (i < k) {
    ++i;
    ++numerator;
    mpz_mul(out.get_mpz_t(), out.get_mpz_t(), numerator.get_mpz_t());
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), i.get_mpz_t());
  }
}

}  // namespace detail

Natural binomial(const Natural& n, const Natural& r) {
  Natural result;
  detail::binomial_assign(result.mpz(), n.mpz(), r.mpz());
  return result;
}

std::pair<Natural, Natural> pascal_lhs_rhs(const Natural& n, const Natural& r) {
  if (r.is_zero()) {
    throw Error(ErrorKind::InvalidArgument,
                "the Pascal recurrence needs r >= 1 (r-1 must be a valid lower index)");
  }
  Natural lhs = binomial(n + 1, r);
  Natural rhs = binomial(n, r) + binomial(n, r - 1);
  return {lhs, rhs};
}

std::pair<Natural, Natural> hockey_stick_lhs_rhs(const Natural& n, const Natural& r) {
  if (n < r) {
    throw Error(ErrorKind::InvalidArgument,
                "Hockey-Stick identity needs n >= r, got n=" + n.str() + " r=" + r.str());
  }
  Natural lhs = binomial(n + 1, r);
  Natural rhs;
  const Natural base = n - r;  // summand index is base + j
  for (Natural j; j <= r; ++j) {
    rhs += binomial(base + j, j);
  }
  return {lhs, rhs};
}

std::pair<Natural, Natural> gap_lhs_rhs(const Natural& n, const Natural& r) {
  if (r.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "gap pair needs r >= 1");
  }
  Natural lhs = binomial(n + r, r);
  Natural rhs;
  for (Natural i = 1; i <= r; ++i) {
    rhs += binomial(n + i - 1, i);
  }
  return {lhs, rhs};
}

}  // namespace combinadics
