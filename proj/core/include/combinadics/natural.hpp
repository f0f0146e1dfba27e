#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace combinadics {

/// Unbounded non-negative integer with value semantics.
///
/// Backed by GMP. Every arithmetic result is exact; operations that would
/// leave the non-negative range throw. Decimal rendering is canonical
/// (no sign, no leading zeros), so parse(str(x)) == x always holds.
class Natural {
public:
  Natural() = default;
  Natural(unsigned long long v) {
    if (v <= std::numeric_limits<unsigned long>::max()) {
      value_ = static_cast<unsigned long>(v);
    } else {  // unsigned long is narrower than 64 bits on this platform
      value_ = static_cast<unsigned long>(v >> 32);
      mpz_mul_2exp(value_.get_mpz_t(), value_.get_mpz_t(), 32);
      mpz_add_ui(value_.get_mpz_t(), value_.get_mpz_t(),
                 static_cast<unsigned long>(v & 0xffffffffULL));
    }
  }

  /// Parses a base-10 string of digits. Rejects signs, whitespace,
  /// and anything else that is not [0-9]+.
  static Natural parse(std::string_view text);

  std::string str() const { return value_.get_str(); }

  bool is_zero() const { return mpz_sgn(value_.get_mpz_t()) == 0; }
  bool fits_ulong() const { return value_.fits_ulong_p(); }
  unsigned long to_ulong() const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator++();
  Natural& operator--();

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }

  friend bool operator==(const Natural& a, const Natural& b) {
    return mpz_cmp(a.value_.get_mpz_t(), b.value_.get_mpz_t()) == 0;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = mpz_cmp(a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n);

  /// Access to the backing GMP integer. Exists so internal routines (and
  /// callers that already live in GMP land) can avoid copies.
  mpz_class& mpz() { return value_; }
  const mpz_class& mpz() const { return value_; }

private:
  mpz_class value_;
};

}  // namespace combinadics
