/** @file param_poly.hpp
 *  Sparse multivariate polynomials over Q in a declared list of named
 *  parameters.  Terms are kept in graded lexicographic order (total degree
 *  first, then lex on the declared parameter order); the map never stores a
 *  zero coefficient, so equality is term-map equality.
 */
#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lcs/errors.hpp"
#include "lcs/rational.hpp"

namespace lcs {

using ParamList = std::shared_ptr<const std::vector<std::string>>;

inline ParamList make_params(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline ParamList make_params(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return make_params(std::move(v));
}

inline bool same_params(const ParamList& a, const ParamList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

inline int param_index(const ParamList& params, const std::string& name) {
  if (!params) return -1;
  auto it = std::find(params->begin(), params->end(), name);
  return it == params->end() ? -1 : static_cast<int>(it - params->begin());
}

using Monomial = std::vector<int>;

/// Graded lex, largest monomial first, so map::begin() is the leading term.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

class ParamPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  ParamPolynomial() = default;
  explicit ParamPolynomial(ParamList params) : params_(std::move(params)) {}

  static ParamPolynomial zero(ParamList params) {
    return ParamPolynomial(std::move(params));
  }

  static ParamPolynomial constant(ParamList params, const Rational& c) {
    ParamPolynomial p(std::move(params));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.arity(), 0), c);
    return p;
  }

  static ParamPolynomial variable(ParamList params, int index) {
    ParamPolynomial p(std::move(params));
    assert(index >= 0 && index < p.arity());
    Monomial m(p.arity(), 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  static ParamPolynomial variable(const ParamList& params,
                                  const std::string& name) {
    int idx = param_index(params, name);
    if (idx < 0) throw UnknownSymbol("unknown parameter: " + name);
    return variable(params, idx);
  }

  const ParamList& params() const { return params_; }
  int arity() const { return params_ ? static_cast<int>(params_->size()) : 0; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
  }

  Rational constant_value() const {
    assert(is_constant());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  const Monomial& leading_monomial() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
  }

  Rational leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  int total_degree() const {
    return terms_.empty() ? -1 : monomial_degree(terms_.begin()->first);
  }

  int degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  bool contains(int var) const { return degree_in(var) > 0; }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ParamPolynomial operator-() const {
    ParamPolynomial r(params_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  ParamPolynomial operator+(const ParamPolynomial& o) const {
    check_params(o);
    ParamPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  ParamPolynomial operator-(const ParamPolynomial& o) const {
    check_params(o);
    ParamPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }

  ParamPolynomial operator*(const ParamPolynomial& o) const {
    check_params(o);
    ParamPolynomial r(params_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m(ma);
        for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  ParamPolynomial operator*(const Rational& c) const {
    ParamPolynomial r(params_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  bool operator==(const ParamPolynomial& o) const {
    return same_params(params_, o.params_) && terms_ == o.terms_;
  }
  bool operator!=(const ParamPolynomial& o) const { return !(*this == o); }

  /// Strict total order (for use as map key); graded-lex on term sequences.
  bool operator<(const ParamPolynomial& o) const {
    GrlexGreater gt;
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
      if (gt(a->first, b->first)) return false;
      if (gt(b->first, a->first)) return true;
      if (a->second != b->second) return a->second < b->second;
    }
    return a == terms_.end() && b != o.terms_.end();
  }

  /// Monic under the graded lex order.
  ParamPolynomial normalized() const {
    if (is_zero()) return *this;
    return *this * leading_coefficient().inverse();
  }

  /// Exact division; nullopt when the divisor does not divide exactly.
  std::optional<ParamPolynomial> divided_exactly(
      const ParamPolynomial& d) const {
    check_params(d);
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    ParamPolynomial q(params_);
    ParamPolynomial r = *this;
    const Monomial& dm = d.leading_monomial();
    const Rational dc = d.leading_coefficient();
    while (!r.is_zero()) {
      const Monomial& rm = r.leading_monomial();
      Monomial qm(rm);
      for (size_t i = 0; i < qm.size(); ++i) {
        qm[i] -= dm[i];
        if (qm[i] < 0) return std::nullopt;
      }
      Rational qc = r.leading_coefficient() / dc;
      ParamPolynomial t(params_);
      t.terms_.emplace(qm, qc);
      q.add_term(qm, qc);
      r = r - t * d;
    }
    return q;
  }

  /// Coefficient of var^k, with that variable's exponent dropped to zero.
  ParamPolynomial coefficient_in(int var, int k) const {
    ParamPolynomial r(params_);
    for (const auto& [m, c] : terms_) {
      if (m[var] != k) continue;
      Monomial mm(m);
      mm[var] = 0;
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

  ParamPolynomial pow(int e) const {
    assert(e >= 0);
    ParamPolynomial r = constant(params_, Rational(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Re-expresses the polynomial over a superset parameter list.
  ParamPolynomial embedded(const ParamList& target) const {
    if (same_params(params_, target)) return *this;
    std::vector<int> where(arity());
    for (int i = 0; i < arity(); ++i) {
      where[i] = param_index(target, (*params_)[i]);
      if (where[i] < 0)
        throw ParameterMismatch("parameter " + (*params_)[i] +
                                " missing from target list");
    }
    ParamPolynomial r(target);
    for (const auto& [m, c] : terms_) {
      Monomial mm(r.arity(), 0);
      for (int i = 0; i < arity(); ++i) mm[where[i]] += m[i];
      r.add_term(mm, c);
    }
    return r;
  }

  /// Full evaluation at rational points (all parameters assigned).
  Rational evaluate(const std::vector<Rational>& point) const {
    assert(static_cast<int>(point.size()) == arity());
    Rational total(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < arity(); ++i)
        for (int e = 0; e < m[i]; ++e) t *= point[i];
      total += t;
    }
    return total;
  }

  std::string str() const;

  static int monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
  }

 private:
  void check_params(const ParamPolynomial& o) const {
    if (!same_params(params_, o.params_))
      throw ParameterMismatch("polynomials over different parameter lists");
  }

  ParamList params_;
  TermMap terms_;
};

namespace detail {

/// Pseudo-remainder of a by b with respect to variable var (deg_var b >= 0).
inline ParamPolynomial prem(const ParamPolynomial& a, const ParamPolynomial& b,
                            int var) {
  int db = b.degree_in(var);
  ParamPolynomial lcb = b.coefficient_in(var, db);
  ParamPolynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    ParamPolynomial lcr = r.coefficient_in(var, dr);
    ParamPolynomial shift =
        ParamPolynomial::variable(a.params(), var).pow(dr - db);
    r = r * lcb - lcr * shift * b;
  }
  return r;
}

}  // namespace detail

ParamPolynomial poly_gcd(const ParamPolynomial& a, const ParamPolynomial& b);

namespace detail {

/// Content w.r.t. var: the gcd of the var-coefficients (a polynomial free of
/// var), monic.  Returns {content, primitive part}.
inline std::pair<ParamPolynomial, ParamPolynomial> cont_pp(
    const ParamPolynomial& a, int var) {
  ParamPolynomial content = ParamPolynomial::zero(a.params());
  for (int k = a.degree_in(var); k >= 0; --k) {
    ParamPolynomial ck = a.coefficient_in(var, k);
    if (!ck.is_zero()) content = poly_gcd(content, ck);
    if (content.is_constant() && !content.is_zero()) break;
  }
  auto pp = a.divided_exactly(content);
  assert(pp.has_value());
  return {content, *pp};
}

}  // namespace detail

inline std::string ParamPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int i = 0; i < arity(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*params_)[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    Rational a = c.abs();
    std::string body;
    if (mono.empty())
      body = a.str();
    else if (a.is_one())
      body = mono;
    else
      body = a.str() + "*" + mono;
    if (first) {
      out += c.is_negative() ? "-" + body : body;
      first = false;
    } else {
      out += c.is_negative() ? " - " + body : " + " + body;
    }
  }
  return out;
}

/// Gcd in Q[params], primitive PRS on the highest occurring variable.
/// The result is monic under the graded lex order; gcd(x, 0) = normalized x.
inline ParamPolynomial poly_gcd(const ParamPolynomial& a,
                                const ParamPolynomial& b) {
  if (!same_params(a.params(), b.params()))
    throw ParameterMismatch("gcd of polynomials over different parameters");
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();

  int var = -1;
  for (int i = a.arity() - 1; i >= 0; --i) {
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      var = i;
      break;
    }
  }
  if (var < 0)  // both constants
    return ParamPolynomial::constant(a.params(), Rational(1));

  auto [ca, pa] = detail::cont_pp(a, var);
  auto [cb, pb] = detail::cont_pp(b, var);
  ParamPolynomial c = poly_gcd(ca, cb);

  ParamPolynomial big = pa, small = pb;
  if (big.degree_in(var) < small.degree_in(var)) std::swap(big, small);
  while (!small.is_zero()) {
    ParamPolynomial r = detail::prem(big, small, var);
    big = small;
    small = r.is_zero() ? r : detail::cont_pp(r, var).second;
  }
  return (c * big).normalized();
}

}  // namespace lcs
