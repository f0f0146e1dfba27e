#include "combinadics/natural.hpp"

#include <ostream>
#include <stdexcept>

#include "combinadics/errors.hpp"

namespace combinadics {

Natural Natural::parse(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorKind::MalformedNumber, "empty string is not a number");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::MalformedNumber,
                  "not a base-10 natural number: '" + std::string(text) + "'");
    }
  }
  Natural n;
  // Cannot fail after the digit scan above.
  mpz_set_str(n.value_.get_mpz_t(), std::string(text).c_str(), 10);
  return n;
}

unsigned long Natural::to_ulong() const {
  if (!fits_ulong()) {
    throw Error(ErrorKind::InvalidArgument,
                "value " + str() + " does not fit a machine word");
  }
  return value_.get_ui();
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (value_ < rhs.value_) {
    throw std::logic_error("Natural underflow: " + str() + " - " + rhs.str());
  }
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator++() {
  ++value_;
  return *this;
}

Natural& Natural::operator--() {
  if (is_zero()) {
    throw std::logic_error("Natural underflow: --0");
  }
  --value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) {
  return os << n.value_;
}

}  // namespace combinadics
