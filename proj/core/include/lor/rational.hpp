#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace lor {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always stored reduced with a positive denominator,
// so equality is plain member comparison. Score arithmetic never touches
// binary floating point; rendering happens only in render_score().
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design of score math
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;
  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }

  bool operator==(const Rational& other) const = default;
  bool operator<(const Rational& other) const;
  bool operator<=(const Rational& other) const { return !(other < *this); }
  bool operator>(const Rational& other) const { return other < *this; }
  bool operator>=(const Rational& other) const { return !(*this < other); }

  double to_double() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

// Rounds half up at two decimal places, then drops trailing fractional
// zeros: 28 -> "28", 36/5 -> "7.2", 1512/100 -> "15.12".
std::string render_score(const Rational& value);

// Exact form "num/den" ("num" when integral). Used by diagnostics and tests.
std::ostream& operator<<(std::ostream& os, const Rational& value);

// 10^exponent as an exact integer, exponent >= 0.
BigInt pow10(int exponent);

}  // namespace lor
