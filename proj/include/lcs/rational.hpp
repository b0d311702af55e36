/** @file rational.hpp
 *  Exact rational scalars: the coefficient field Q.
 *
 *  Storage is boost::multiprecision::cpp_rational, which keeps the value
 *  gcd-reduced with a positive denominator; zero is 0/1.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "lcs/errors.hpp"

namespace lcs {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    v_ = boost::multiprecision::cpp_rational(num, den);
  }

  static Rational parse(const std::string& text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return v_ < 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational operator-() const { return Rational(-v_); }
  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rational(v_ / o.v_);
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(1 / v_);
  }

  Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

 private:
  explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}
  boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)),
                    BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error("malformed rational literal: " + text);
  }
}

inline Rational factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return Rational(r);
}

inline Rational binomial(int m, int k) {
  if (k < 0 || k > m) return Rational(0);
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
  return Rational(r);
}

}  // namespace lcs
