#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cpgame {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar.  Always stored in lowest terms with a positive
/// denominator; zero is 0/1.  Arithmetic never rounds.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long long value) : value_(value) {}  // NOLINT: implicit by design
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p/q" or a bare integer "p".  Rejects zero and negative
  /// denominators and anything that is not plain decimal notation.
  static Rational parse(std::string_view text);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  /// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend bool operator!=(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ != rhs.value_;
  }
  friend bool operator<(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ < rhs.value_;
  }
  friend bool operator<=(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ <= rhs.value_;
  }
  friend bool operator>(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ > rhs.value_;
  }
  friend bool operator>=(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ >= rhs.value_;
  }

private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend value) : value_(std::move(value)) {}

  Backend value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace cpgame
