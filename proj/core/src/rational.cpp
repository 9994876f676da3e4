#include "lor/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace lor {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& other) const {
  return Rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Rational Rational::operator-(const Rational& other) const {
  return Rational(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

Rational Rational::operator*(const Rational& other) const {
  return Rational(num_ * other.num_, den_ * other.den_);
}

Rational Rational::operator/(const Rational& other) const {
  if (other.num_ == 0) {
    throw std::invalid_argument("rational division by zero");
  }
  return Rational(num_ * other.den_, den_ * other.num_);
}

bool Rational::operator<(const Rational& other) const {
  return num_ * other.den_ < other.num_ * den_;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string render_score(const Rational& value) {
  bool negative = value.num() < 0;
  BigInt num = negative ? BigInt(-value.num()) : value.num();
  // Half-up at two decimals: round(100 * num / den).
  BigInt cents = (num * 200 + value.den()) / (2 * value.den());
  BigInt whole = cents / 100;
  int frac = static_cast<int>(cents % 100);

  std::string out = negative && cents != 0 ? "-" : "";
  out += whole.str();
  if (frac != 0) {
    out.push_back('.');
    out.push_back(static_cast<char>('0' + frac / 10));
    if (frac % 10 != 0) {
      out.push_back(static_cast<char>('0' + frac % 10));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  os << value.num().str();
  if (!value.is_integer()) {
    os << '/' << value.den().str();
  }
  return os;
}

BigInt pow10(int exponent) {
  if (exponent < 0) {
    throw std::invalid_argument("pow10 of negative exponent");
  }
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) {
    result *= 10;
  }
  return result;
}

}  // namespace lor
