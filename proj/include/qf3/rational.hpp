#pragma once

#include <compare>
#include <numeric>
#include <string>

#include "qf3/arith.hpp"

namespace qf3 {

/// Exact rational with 128-bit numerator/denominator, always reduced with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(i128 num) : num_(num), den_(1) {}  // NOLINT(implicit)
  Rational(i128 num, i128 den) : num_(num), den_(den) {
    if (den_ == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
    normalize();
  }

  i128 num() const { return num_; }
  i128 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return {checked_add(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)), checked_mul(x.den_, y.den_)};
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + Rational(-y.num_, y.den_); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return {checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_)};
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw Error(ErrorKind::InvalidInput, "division by zero");
    return {checked_mul(x.num_, y.den_), checked_mul(x.den_, y.num_)};
  }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return checked_mul(x.num_, y.den_) <=> checked_mul(y.num_, x.den_);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const {
    return den_ == 1 ? qf3::to_string(num_) : qf3::to_string(num_) + "/" + qf3::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    i128 a = num_ < 0 ? -num_ : num_, b = den_;
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num_ /= a;
      den_ /= a;
    }
  }

  i128 num_ = 0;
  i128 den_ = 1;
};

}  // namespace qf3
