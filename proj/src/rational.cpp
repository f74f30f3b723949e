#include "cpgame/rational.hpp"

#include <cctype>
#include <ostream>

#include "cpgame/errors.hpp"

namespace cpgame {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator.is_zero()) {
    throw ValidationError("rational with zero denominator");
  }
  // cpp_rational rejects negative denominators instead of normalizing them.
  if (denominator < 0) {
    value_ = Backend(-numerator, -denominator);
  } else {
    value_ = Backend(numerator, denominator);
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  bool negative = false;
  if (!num.empty() && (num.front() == '-')) {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num)) {
    throw ParseError("expected a rational \"p/q\" or integer, got \"" + std::string(text) + "\"");
  }
  Integer p(std::string(num));
  if (negative) p = -p;
  if (slash == std::string_view::npos) {
    return Rational(p, 1);
  }
  std::string_view den = text.substr(slash + 1);
  if (!all_digits(den)) {
    throw ParseError("denominator must be a positive integer in \"" + std::string(text) + "\"");
  }
  Integer q{std::string(den)};
  if (q.is_zero()) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(p, q);
}

std::string Rational::str() const {
  std::string out = numerator().str();
  const Integer den = denominator();
  if (den != 1) {
    out += "/";
    out += den.str();
  }
  return out;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

Rational Rational::operator-() const { return Rational(Backend(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw ValidationError("division of rational by zero");
  }
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

}  // namespace cpgame
