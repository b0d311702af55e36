/** @file param_fraction.hpp
 *  The coefficient field Q(parameters): canonical-form ratios of
 *  ParamPolynomial.  Invariants: denominator nonzero, gcd(num, den) a unit,
 *  denominator monic under the graded lex order, zero is 0/1.
 */
#pragma once

#include <map>
#include <string>
#include <utility>

#include "lcs/param_poly.hpp"

namespace lcs {

class ParamFraction {
 public:
  ParamFraction() = default;
  explicit ParamFraction(ParamList params)
      : num_(ParamPolynomial::zero(params)),
        den_(ParamPolynomial::constant(params, Rational(1))) {}

  ParamFraction(ParamPolynomial num, ParamPolynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (!same_params(num_.params(), den_.params()))
      throw ParameterMismatch("fraction parts over different parameters");
    if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
    reduce();
  }

  explicit ParamFraction(ParamPolynomial num)
      : num_(std::move(num)),
        den_(ParamPolynomial::constant(num_.params(), Rational(1))) {}

  static ParamFraction zero(ParamList params) {
    return ParamFraction(std::move(params));
  }

  static ParamFraction constant(ParamList params, const Rational& c) {
    ParamFraction f(params);
    f.num_ = ParamPolynomial::constant(std::move(params), c);
    return f;
  }

  static ParamFraction one(ParamList params) {
    return constant(std::move(params), Rational(1));
  }

  static ParamFraction variable(const ParamList& params,
                                const std::string& name) {
    return ParamFraction(ParamPolynomial::variable(params, name));
  }

  const ParamPolynomial& num() const { return num_; }
  const ParamPolynomial& den() const { return den_; }
  const ParamList& params() const { return num_.params(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

  Rational rational_value() const {
    assert(is_rational());
    return num_.constant_value();  // den is monic constant, i.e. 1
  }

  ParamFraction operator-() const {
    ParamFraction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  ParamFraction operator+(const ParamFraction& o) const {
    return ParamFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }

  ParamFraction operator-(const ParamFraction& o) const {
    return ParamFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }

  ParamFraction operator*(const ParamFraction& o) const {
    return ParamFraction(num_ * o.num_, den_ * o.den_);
  }

  ParamFraction operator/(const ParamFraction& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return ParamFraction(num_ * o.den_, den_ * o.num_);
  }

  ParamFraction& operator+=(const ParamFraction& o) { return *this = *this + o; }
  ParamFraction& operator-=(const ParamFraction& o) { return *this = *this - o; }
  ParamFraction& operator*=(const ParamFraction& o) { return *this = *this * o; }

  ParamFraction inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return ParamFraction(den_, num_);
  }

  bool operator==(const ParamFraction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const ParamFraction& o) const { return !(*this == o); }
  bool operator<(const ParamFraction& o) const {
    if (num_ < o.num_) return true;
    if (o.num_ < num_) return false;
    return den_ < o.den_;
  }

  ParamFraction embedded(const ParamList& target) const {
    if (same_params(params(), target)) return *this;
    ParamFraction r;
    r.num_ = num_.embedded(target);
    r.den_ = den_.embedded(target);
    return r;
  }

  /// Substitutes parameters by fraction images over a target list; any
  /// parameter missing from `images` must itself exist in the target list.
  ParamFraction substituted(const std::map<std::string, ParamFraction>& images,
                            const ParamList& target) const {
    ParamFraction n = eval_poly(num_, images, target);
    ParamFraction d = eval_poly(den_, images, target);
    if (d.is_zero())
      throw DenominatorVanishes("denominator vanishes under substitution: " +
                                den_.str());
    return n / d;
  }

  /// Exact evaluation; the assignment must cover every parameter.
  Rational specialized(const std::map<std::string, Rational>& assignment) const;

  std::string str() const;

 private:
  static ParamFraction eval_poly(
      const ParamPolynomial& p,
      const std::map<std::string, ParamFraction>& images,
      const ParamList& target) {
    ParamFraction total = zero(target);
    for (const auto& [mono, coeff] : p.terms()) {
      ParamFraction t = constant(target, coeff);
      for (int i = 0; i < p.arity(); ++i) {
        if (mono[i] == 0) continue;
        const std::string& name = (*p.params())[i];
        auto it = images.find(name);
        ParamFraction img =
            it != images.end() ? it->second : variable(target, name);
        for (int e = 0; e < mono[i]; ++e) t *= img;
      }
      total += t;
    }
    return total;
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = ParamPolynomial::constant(num_.params(), Rational(1));
      return;
    }
    ParamPolynomial g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divided_exactly(g);
      den_ = *den_.divided_exactly(g);
    }
    Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
      Rational inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  ParamPolynomial num_;
  ParamPolynomial den_;
};

inline std::string ParamFraction::str() const {
  if (is_polynomial()) return num_.str();
  auto wrap = [](const ParamPolynomial& p) {
    std::string s = p.str();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

inline Rational ParamFraction::specialized(
    const std::map<std::string, Rational>& assignment) const {
  std::vector<Rational> point;
  point.reserve(num_.arity());
  for (const auto& name : *params()) {
    auto it = assignment.find(name);
    // Parameters absent from the value are harmless; occurring ones are not.
    if (it == assignment.end()) {
      if (num_.degree_in(param_index(params(), name)) > 0 ||
          den_.degree_in(param_index(params(), name)) > 0)
        throw Error("specialization misses parameter: " + name);
      point.emplace_back(0);
    } else {
      point.push_back(it->second);
    }
  }
  Rational d = den_.evaluate(point);
  if (d.is_zero())
    throw DenominatorVanishes("denominator " + den_.str() + " vanishes");
  return num_.evaluate(point) / d;
}

}  // namespace lcs
