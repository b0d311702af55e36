/** @file formal_poly.hpp
 *  Sparse polynomials over Q(parameters) in the four formal variables of the
 *  conformal calculus: the derivation D and the bracket variables x, y, z
 *  (written ∂, λ, μ, ν on paper).  The variable set is fixed; exponent
 *  vectors are flat arrays of four ints.
 */
#pragma once

#include <array>
#include <cassert>
#include <limits>
#include <map>
#include <string>

#include "lcs/param_fraction.hpp"

namespace lcs {

enum class FormalVariable : int { Partial = 0, Lambda = 1, Mu = 2, Nu = 3 };

inline constexpr int kFormalVarCount = 4;
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

inline const char* formal_variable_name(FormalVariable v) {
  switch (v) {
    case FormalVariable::Partial: return "D";
    case FormalVariable::Lambda: return "x";
    case FormalVariable::Mu: return "y";
    case FormalVariable::Nu: return "z";
  }
  return "?";
}

using FormalMonomial = std::array<int, kFormalVarCount>;

struct FormalGrlexGreater {
  bool operator()(const FormalMonomial& a, const FormalMonomial& b) const {
    int da = a[0] + a[1] + a[2] + a[3];
    int db = b[0] + b[1] + b[2] + b[3];
    if (da != db) return da > db;
    return a > b;
  }
};

class FormalPolynomial {
 public:
  using TermMap = std::map<FormalMonomial, ParamFraction, FormalGrlexGreater>;

  FormalPolynomial() = default;
  explicit FormalPolynomial(ParamList params) : params_(std::move(params)) {}

  static FormalPolynomial zero(ParamList params) {
    return FormalPolynomial(std::move(params));
  }

  static FormalPolynomial constant(ParamFraction c) {
    FormalPolynomial p(c.params());
    if (!c.is_zero()) p.terms_.emplace(FormalMonomial{0, 0, 0, 0}, std::move(c));
    return p;
  }

  static FormalPolynomial one(const ParamList& params) {
    return constant(ParamFraction::one(params));
  }

  static FormalPolynomial rational(const ParamList& params, const Rational& c) {
    return constant(ParamFraction::constant(params, c));
  }

  static FormalPolynomial variable(const ParamList& params, FormalVariable v) {
    FormalPolynomial p(params);
    FormalMonomial m{0, 0, 0, 0};
    m[static_cast<int>(v)] = 1;
    p.terms_.emplace(m, ParamFraction::one(params));
    return p;
  }

  const ParamList& params() const { return params_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_scalar() const {  // free of all formal variables
    for (const auto& [m, c] : terms_)
      if (m != FormalMonomial{0, 0, 0, 0}) return false;
    return true;
  }

  ParamFraction scalar_value() const {
    assert(is_scalar());
    return terms_.empty() ? ParamFraction::zero(params_)
                          : terms_.begin()->second;
  }

  void add_term(const FormalMonomial& m, const ParamFraction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FormalPolynomial operator-() const {
    FormalPolynomial r(params_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  FormalPolynomial operator+(const FormalPolynomial& o) const {
    check_params(o);
    FormalPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  FormalPolynomial operator-(const FormalPolynomial& o) const {
    check_params(o);
    FormalPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }

  FormalPolynomial operator*(const FormalPolynomial& o) const {
    check_params(o);
    FormalPolynomial r(params_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        FormalMonomial m;
        for (int i = 0; i < kFormalVarCount; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  FormalPolynomial scaled(const ParamFraction& c) const {
    FormalPolynomial r(params_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  FormalPolynomial pow(int e) const {
    assert(e >= 0);
    FormalPolynomial r = one(params_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool operator==(const FormalPolynomial& o) const {
    return same_params(params_, o.params_) && terms_ == o.terms_;
  }
  bool operator!=(const FormalPolynomial& o) const { return !(*this == o); }

  int degree_in(FormalVariable v) const {
    if (terms_.empty()) return kNegInfDegree;
    int d = 0;
    for (const auto& [m, c] : terms_)
      d = std::max(d, m[static_cast<int>(v)]);
    return d;
  }

  int total_formal_degree() const {
    if (terms_.empty()) return kNegInfDegree;
    const FormalMonomial& m = terms_.begin()->first;
    return m[0] + m[1] + m[2] + m[3];
  }

  bool contains(FormalVariable v) const {
    return degree_in(v) != kNegInfDegree && degree_in(v) > 0;
  }

  /// Coefficient of v^k, with v removed from the result.
  FormalPolynomial coefficient_in(FormalVariable v, int k) const {
    FormalPolynomial r(params_);
    int iv = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
      if (m[iv] != k) continue;
      FormalMonomial mm = m;
      mm[iv] = 0;
      r.terms_.emplace(mm, c);
    }
    return r;
  }

  /// Substitutes an affine image for variable v.  Ring homomorphism in v;
  /// images of formal degree > 1 are rejected.
  FormalPolynomial substituted(FormalVariable v,
                               const FormalPolynomial& image) const {
    check_params(image);
    if (!image.is_zero() && image.total_formal_degree() > 1)
      throw NonlinearImage("substitution image must be affine, got " +
                           image.str());
    int iv = static_cast<int>(v);
    FormalPolynomial r(params_);
    for (const auto& [m, c] : terms_) {
      FormalMonomial mm = m;
      int e = mm[iv];
      mm[iv] = 0;
      FormalPolynomial t(params_);
      t.terms_.emplace(mm, c);
      if (e > 0) t = t * image.pow(e);
      r = r + t;
    }
    return r;
  }

  FormalPolynomial embedded(const ParamList& target) const {
    if (same_params(params_, target)) return *this;
    FormalPolynomial r(target);
    for (const auto& [m, c] : terms_) r.add_term(m, c.embedded(target));
    return r;
  }

  FormalPolynomial substituted_params(
      const std::map<std::string, ParamFraction>& images,
      const ParamList& target) const {
    FormalPolynomial r(target);
    for (const auto& [m, c] : terms_)
      r.add_term(m, c.substituted(images, target));
    return r;
  }

  std::string str() const;

 private:
  void check_params(const FormalPolynomial& o) const {
    if (!same_params(params_, o.params_))
      throw ParameterMismatch("formal polynomials over different parameters");
  }

  ParamList params_;
  TermMap terms_;
};

inline std::string FormalPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int i = 0; i < kFormalVarCount; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += formal_variable_name(static_cast<FormalVariable>(i));
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    // Sign is pulled out only for coefficients whose numerator is a single
    // term; parenthesized sums keep their signs inside.
    bool negative = false;
    ParamFraction cc = c;
    if (c.num().terms().size() == 1 &&
        c.num().leading_coefficient().is_negative()) {
      negative = true;
      cc = -c;
    }
    std::string cs = cc.str();
    bool needs_parens =
        cc.num().terms().size() > 1 && !mono.empty();
    if (needs_parens) cs = "(" + cs + ")";
    std::string body;
    if (mono.empty())
      body = cs;
    else if (cc.is_one())
      body = mono;
    else
      body = cs + "*" + mono;
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out;
}

}  // namespace lcs
