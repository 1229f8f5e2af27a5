#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cantor {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact dyadic value num / 2^exp.
///
/// Canonical form keeps num odd, or (0, 0) for zero, so equality is plain
/// field comparison.  Closed under +, -, negation and comparison; embeds
/// into Rational.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Int numerator, unsigned exponent) : num_(std::move(numerator)), exp_(exponent) {
    normalize();
  }
  static Dyadic from_int(long v) { return Dyadic(Int(v), 0); }

  const Int& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  Rational to_rational() const { return Rational(num_, Int(1) << exp_); }

  Dyadic operator-() const {
    Dyadic d;
    d.num_ = -num_;
    d.exp_ = exp_;
    return d;
  }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
  }

  Dyadic abs() const { return num_ < 0 ? -*this : *this; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
  }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

  std::string str() const;

 private:
  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && bit_test(abs_ref(), 0) == false) {
      num_ >>= 1;
      --exp_;
    }
  }
  const Int& abs_ref() const { return num_; }  // bit_test works on magnitude

  Int num_;
  unsigned exp_ = 0;
};

/// Parses "p/q" or plain "p" (optional sign, decimal digits only).
Rational parse_fraction(const std::string& text);

/// Canonical decimal-free encoding: "p" when the denominator is 1, else "p/q".
std::string fraction_str(const Rational& r);

std::string fraction_str(const Dyadic& d);

}  // namespace cantor
