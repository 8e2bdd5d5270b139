#include "doubler/rational.hpp"

#include <climits>
#include <ostream>

#include "doubler/error.hpp"

namespace doubler {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  // mpz_class has no portable int64 constructor; go through the string form
  // only when the value does not fit a long.
  if (value >= LONG_MIN && value <= LONG_MAX) {
    value_ = mpq_class(static_cast<long>(value));
  } else {
    value_ = mpq_class(mpz_class(std::to_string(value)));
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(Integer(std::to_string(numerator)), Integer(std::to_string(denominator))) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t num_begin = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == num_begin) {
    throw ParseError(pos, "expected digits in rational '" + std::string(text) + "'");
  }
  const std::string numerator(text.substr(0, pos));
  if (pos == text.size()) {
    return Rational(Integer(numerator));
  }
  if (text[pos] != '/') {
    throw ParseError(pos, "unexpected character in rational '" + std::string(text) + "'");
  }
  const std::string_view den = text.substr(pos + 1);
  if (!all_digits(den)) {
    throw ParseError(pos + 1, "expected denominator digits in rational '" +
                                  std::string(text) + "'");
  }
  Integer denominator{std::string(den)};
  if (denominator == 0) {
    throw ParseError(pos + 1, "zero denominator in rational '" + std::string(text) + "'");
  }
  return Rational(Integer(numerator), denominator);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace doubler
