/** @file echelon.hpp
 *  Leading-position reduction in free modules over Q(params)[D].
 *
 *  Vectors are sparse maps position -> FormalPolynomial.  Row entries used
 *  for division contain only D; vectors being reduced may carry the bracket
 *  variables, which ride along as inert scalars (division is performed per
 *  slice of identical (x,y,z)-exponents).
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lcs/formal_poly.hpp"

namespace lcs {

/// Quotient and remainder of f by a nonzero divisor in D alone; remainder
/// has D-degree below deg(g) in every (x,y,z)-slice.
inline std::pair<FormalPolynomial, FormalPolynomial> divrem_by_partial(
    const FormalPolynomial& f, const FormalPolynomial& g) {
  assert(!g.is_zero());
  assert(g.degree_in(FormalVariable::Lambda) <= 0 &&
         g.degree_in(FormalVariable::Mu) <= 0 &&
         g.degree_in(FormalVariable::Nu) <= 0);
  const int dg = g.degree_in(FormalVariable::Partial);
  const ParamFraction lc = g.coefficient_in(FormalVariable::Partial, dg)
                               .scalar_value();
  FormalPolynomial q(f.params());
  FormalPolynomial r = f;
  for (;;) {
    // highest D-exponent term still reducible
    const FormalMonomial* pick = nullptr;
    const ParamFraction* pick_c = nullptr;
    for (const auto& [m, c] : r.terms()) {
      if (m[0] < dg) continue;
      if (!pick || m[0] > (*pick)[0]) {
        pick = &m;
        pick_c = &c;
      }
    }
    if (!pick) break;
    FormalMonomial qm = *pick;
    qm[0] -= dg;
    FormalPolynomial qt(f.params());
    qt.add_term(qm, *pick_c / lc);
    q = q + qt;
    r = r - qt * g;
  }
  return {q, r};
}

template <typename Key>
using SparseVec = std::map<Key, FormalPolynomial>;

template <typename Key>
void vec_add_scaled(SparseVec<Key>& target, const SparseVec<Key>& src,
                    const FormalPolynomial& factor) {
  for (const auto& [k, p] : src) {
    FormalPolynomial t = p * factor;
    auto it = target.find(k);
    if (it == target.end()) {
      if (!t.is_zero()) target.emplace(k, std::move(t));
    } else {
      it->second = it->second + t;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

template <typename Key>
void vec_prune(SparseVec<Key>& v) {
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
}

/// Echelon basis of a submodule of the free module over Q(params)[D].
/// Rows have pairwise distinct leading positions (in the supplied position
/// order), monic leading entries, and each row tracks its expression as a
/// combination of the original input vectors.
template <typename Key>
class Echelon {
 public:
  struct Row {
    SparseVec<Key> vec;
    std::map<int, FormalPolynomial> combo;  // over input indices
    int lead_pos;                           // index into order_
  };

  Echelon(std::vector<SparseVec<Key>> inputs, std::vector<Key> order,
          ParamList params)
      : order_(std::move(order)), params_(std::move(params)) {
    for (size_t i = 0; i < inputs.size(); ++i) {
      SparseVec<Key> v = std::move(inputs[i]);
      vec_prune(v);
      std::map<int, FormalPolynomial> combo;
      combo.emplace(static_cast<int>(i), FormalPolynomial::one(params_));
      insert(std::move(v), std::move(combo));
    }
  }

  const std::vector<Row>& rows() const { return rows_; }
  int dropped_inputs() const { return dropped_; }

  /// Reduces v against the rows.  Returns the remainder; when `combo` is
  /// given, accumulates the coefficients over the original input vectors
  /// such that v = sum(combo_i * input_i) + remainder.
  SparseVec<Key> reduce(SparseVec<Key> v,
                        std::map<int, FormalPolynomial>* combo = nullptr) const {
    vec_prune(v);
    for (const auto& row : rows_) {
      const Key& lead = order_[row.lead_pos];
      auto it = v.find(lead);
      if (it == v.end() || it->second.is_zero()) continue;
      auto [q, rem] = divrem_by_partial(it->second, row.vec.at(lead));
      if (q.is_zero()) continue;
      FormalPolynomial neg_q = -q;
      vec_add_scaled(v, row.vec, neg_q);
      if (combo)
        for (const auto& [idx, c] : row.combo) {
          auto [cit, inserted] = combo->emplace(idx, c * q);
          if (!inserted) cit->second = cit->second + c * q;
        }
    }
    vec_prune(v);
    if (combo)
      for (auto it = combo->begin(); it != combo->end();)
        it = it->second.is_zero() ? combo->erase(it) : std::next(it);
    return v;
  }

 private:
  int position_of(const SparseVec<Key>& v) const {
    for (size_t i = 0; i < order_.size(); ++i) {
      auto it = v.find(order_[i]);
      if (it != v.end() && !it->second.is_zero()) return static_cast<int>(i);
    }
    return -1;
  }

  void insert(SparseVec<Key> v, std::map<int, FormalPolynomial> combo) {
    for (;;) {
      int pos = position_of(v);
      if (pos < 0) {
        ++dropped_;
        return;
      }
      Row* clash = nullptr;
      for (auto& row : rows_)
        if (row.lead_pos == pos) {
          clash = &row;
          break;
        }
      if (!clash) {
        normalize(v, combo, pos);
        rows_.push_back(Row{std::move(v), std::move(combo), pos});
        std::sort(rows_.begin(), rows_.end(),
                  [](const Row& a, const Row& b) { return a.lead_pos < b.lead_pos; });
        return;
      }
      const Key& lead = order_[pos];
      FormalPolynomial mine = v.at(lead);
      FormalPolynomial theirs = clash->vec.at(lead);
      if (mine.degree_in(FormalVariable::Partial) <
          theirs.degree_in(FormalVariable::Partial)) {
        std::swap(v, clash->vec);
        std::swap(combo, clash->combo);
        normalize(clash->vec, clash->combo, pos);
        std::swap(mine, theirs);
      }
      auto [q, rem] = divrem_by_partial(mine, theirs);
      FormalPolynomial neg_q = -q;
      vec_add_scaled(v, clash->vec, neg_q);
      for (const auto& [idx, c] : clash->combo) {
        FormalPolynomial t = c * neg_q;
        auto [cit, inserted] = combo.emplace(idx, t);
        if (!inserted) cit->second = cit->second + t;
      }
      vec_prune(v);
    }
  }

  void normalize(SparseVec<Key>& v, std::map<int, FormalPolynomial>& combo,
                 int pos) {
    const FormalPolynomial& lead = v.at(order_[pos]);
    ParamFraction lc =
        lead.coefficient_in(FormalVariable::Partial,
                            lead.degree_in(FormalVariable::Partial))
            .scalar_value();
    if (lc.is_one()) return;
    ParamFraction inv = lc.inverse();
    for (auto& [k, p] : v) p = p.scaled(inv);
    for (auto& [k, p] : combo) p = p.scaled(inv);
  }

  std::vector<Key> order_;
  ParamList params_;
  std::vector<Row> rows_;
  int dropped_ = 0;
};

}  // namespace lcs
