/*
 * Copyright 2026 The metrichg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "metrichg/lp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace metrichg {

bool LinearConstraint::satisfied_by(const std::vector<Rational>& x) const {
  Rational lhs = 0;
  for (const auto& [var, a] : terms) lhs += a * x.at(var);
  return sense == Sense::Equal ? lhs == rhs : lhs >= rhs;
}

// ---------------------------------------------------------------------------
// Dictionary

Dictionary::Dictionary(int variable_count, const std::vector<int>& nonbasic)
    : location_(variable_count, kPinned), nonbasic_(nonbasic), stride_(int(nonbasic.size())) {
  for (std::size_t c = 0; c < nonbasic.size(); ++c) location_.at(nonbasic[c]) = -int(c) - 1;
}

void Dictionary::add_row(int id, const Rational& constant, const std::vector<Rational>& coefs) {
  if (int(coefs.size()) != columns()) throw std::invalid_argument("row width does not match column count");
  location_.at(id) = rows();
  basic_.push_back(id);
  constant_.push_back(constant);
  coef_.resize(coef_.size() + stride_);
  const int r = rows() - 1;
  for (int c = 0; c < columns(); ++c) coef(r, c) = coefs[c];
}

bool Dictionary::is_feasible() const {
  return std::all_of(constant_.begin(), constant_.end(), [](const Rational& k) { return sgn(k) >= 0; });
}

void Dictionary::pivot(int row, int col) {
  ++pivots_;
  const int ncols = columns();
  Rational inv = 1 / coef(row, col);

  // Solve the pivot row for the entering variable.
  mpq_ptr k = constant_[row].get_mpq_t();
  mpq_mul(k, k, inv.get_mpq_t());
  mpq_neg(k, k);
  for (int c = 0; c < ncols; ++c) {
    if (c == col) continue;
    mpq_ptr a = coef(row, c).get_mpq_t();
    if (mpq_sgn(a) == 0) continue;
    mpq_mul(a, a, inv.get_mpq_t());
    mpq_neg(a, a);
  }
  coef(row, col) = inv;

  std::swap(basic_[row], nonbasic_[col]);
  location_[basic_[row]] = row;
  location_[nonbasic_[col]] = -col - 1;

  // Substitute into every other row.
  mpq_class alpha;
  mpq_class tmp;
  for (int r = 0; r < rows(); ++r) {
    if (r == row) continue;
    if (sgn(coef(r, col)) == 0) continue;
    alpha = coef(r, col);
    mpq_mul(tmp.get_mpq_t(), alpha.get_mpq_t(), constant_[row].get_mpq_t());
    mpq_add(constant_[r].get_mpq_t(), constant_[r].get_mpq_t(), tmp.get_mpq_t());
    for (int c = 0; c < ncols; ++c) {
      if (c == col) continue;
      mpq_srcptr b = coef(row, c).get_mpq_t();
      if (mpq_sgn(b) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), alpha.get_mpq_t(), b);
      mpq_ptr target = coef(r, c).get_mpq_t();
      mpq_add(target, target, tmp.get_mpq_t());
    }
    mpq_mul(coef(r, col).get_mpq_t(), alpha.get_mpq_t(), inv.get_mpq_t());
  }
}

void Dictionary::remove_row(int r) {
  const int last = rows() - 1;
  location_[basic_[r]] = kPinned;
  if (r != last) {
    std::swap(basic_[r], basic_[last]);
    std::swap(constant_[r], constant_[last]);
    for (int c = 0; c < columns(); ++c) std::swap(coef(r, c), coef(last, c));
    location_[basic_[r]] = r;
  }
  basic_.pop_back();
  constant_.pop_back();
  coef_.resize(coef_.size() - stride_);
}

void Dictionary::remove_column(int c) {
  const int last = columns() - 1;
  location_[nonbasic_[c]] = kPinned;
  if (c != last) {
    std::swap(nonbasic_[c], nonbasic_[last]);
    for (int r = 0; r < rows(); ++r) std::swap(coef(r, c), coef(r, last));
    location_[nonbasic_[c]] = -c - 1;
  }
  nonbasic_.pop_back();
  for (int r = 0; r < rows(); ++r) coef(r, last) = 0;
}

bool Dictionary::fix_to_zero(int id) {
  for (;;) {
    const int loc = location_.at(id);
    if (loc == kPinned) return true;
    if (loc < 0) {
      remove_column(-loc - 1);
      return true;
    }
    const int r = loc;
    if (sgn(constant_[r]) == 0) {
      // Degenerate exit: any nonzero column can take its place.
      int best = -1;
      for (int c = 0; c < columns(); ++c) {
        if (sgn(coef(r, c)) != 0 && (best < 0 || nonbasic_[c] < nonbasic_[best])) best = c;
      }
      if (best < 0) {
        remove_row(r);
        return true;
      }
      pivot(r, best);
      remove_column(best);
      return true;
    }

    // Bland: lowest-id improving column, then lowest-id blocking row.
    int enter = -1;
    for (int c = 0; c < columns(); ++c) {
      if (sgn(coef(r, c)) < 0 && (enter < 0 || nonbasic_[c] < nonbasic_[enter])) enter = c;
    }
    if (enter < 0) return false;

    int leave = -1;
    Rational best_ratio;
    Rational ratio;
    for (int i = 0; i < rows(); ++i) {
      const Rational& a = coef(i, enter);
      if (sgn(a) >= 0) continue;
      ratio = constant_[i] / -a;
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    assert(leave >= 0);
    pivot(leave, enter);
  }
}

Rational Dictionary::value(int id) const {
  const int loc = location_.at(id);
  return loc >= 0 ? constant_[loc] : Rational(0);
}

// ---------------------------------------------------------------------------
// EqualityPropagator

namespace {

bool single_signed(const std::vector<Rational>& row) {
  int sign = 0;
  for (const auto& a : row) {
    const int s = sgn(a);
    if (s == 0) continue;
    if (sign == 0) {
      sign = s;
    } else if (s != sign) {
      return false;
    }
  }
  return sign != 0;
}

}  // namespace

bool EqualityPropagator::add(std::vector<Rational> coefs) {
  if (contradictory_) return false;
  if (int(coefs.size()) != variables_) throw std::invalid_argument("equality width does not match");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational factor = coefs[pivot_[i]];
    if (sgn(factor) == 0) continue;
    for (int v = 0; v < variables_; ++v) {
      if (sgn(rows_[i][v]) != 0) coefs[v] -= factor * rows_[i][v];
    }
  }
  int lead = -1;
  for (int v = 0; v < variables_ && lead < 0; ++v) {
    if (sgn(coefs[v]) != 0) lead = v;
  }
  if (lead < 0) return true;  // implied by the current rows

  const Rational scale = 1 / coefs[lead];
  for (auto& a : coefs) a *= scale;
  for (auto& row : rows_) {
    const Rational factor = row[lead];
    if (sgn(factor) == 0) continue;
    for (int v = 0; v < variables_; ++v) {
      if (sgn(coefs[v]) != 0) row[v] -= factor * coefs[v];
    }
  }
  rows_.push_back(std::move(coefs));
  pivot_.push_back(lead);

  for (const auto& row : rows_) {
    if (single_signed(row)) {
      contradictory_ = true;
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// lp_feasible

std::optional<std::vector<Rational>> lp_feasible(const LinearSystem& system) {
  const int nvars = system.variables;
  using Sense = LinearConstraint::Sense;

  auto dense = [&](const LinearConstraint& c) {
    std::vector<Rational> row(nvars + 1);
    for (const auto& [var, a] : c.terms) {
      if (var < 0 || var >= nvars) throw std::invalid_argument("constraint references unknown variable");
      row[var] += a;
    }
    row[nvars] = c.rhs;
    return row;
  };

  // Gauss-Jordan on the equalities: row = [coefs | rhs].
  std::vector<std::vector<Rational>> eq;
  std::vector<int> eq_pivot;
  for (const auto& c : system.constraints) {
    if (c.sense != Sense::Equal) continue;
    auto row = dense(c);
    for (std::size_t i = 0; i < eq.size(); ++i) {
      const Rational factor = row[eq_pivot[i]];
      if (sgn(factor) == 0) continue;
      for (int v = 0; v <= nvars; ++v) row[v] -= factor * eq[i][v];
    }
    int lead = -1;
    for (int v = 0; v < nvars && lead < 0; ++v) {
      if (sgn(row[v]) != 0) lead = v;
    }
    if (lead < 0) {
      if (sgn(row[nvars]) != 0) return std::nullopt;  // 0 = nonzero
      continue;
    }
    const Rational scale = 1 / row[lead];
    for (auto& a : row) a *= scale;
    for (auto& other : eq) {
      const Rational factor = other[lead];
      if (sgn(factor) == 0) continue;
      for (int v = 0; v <= nvars; ++v) other[v] -= factor * row[v];
    }
    eq.push_back(std::move(row));
    eq_pivot.push_back(lead);
  }

  // Free variables are the non-pivot ones; x_p = rhs_p - sum_f c_pf x_f.
  std::vector<int> pivot_row(nvars, -1);
  for (std::size_t i = 0; i < eq.size(); ++i) pivot_row[eq_pivot[i]] = int(i);
  std::vector<int> free_vars;
  for (int v = 0; v < nvars; ++v) {
    if (pivot_row[v] < 0) free_vars.push_back(v);
  }
  const int nfree = int(free_vars.size());

  // Dictionary variables: u_j = 2j, v_j = 2j+1 (x_f = u - v), artificial
  // = 2 nfree, then one slack per inequality.
  const int artificial = 2 * nfree;
  std::vector<const LinearConstraint*> inequalities;
  for (const auto& c : system.constraints) {
    if (c.sense == Sense::GreaterEqual) inequalities.push_back(&c);
  }
  std::vector<int> nonbasic;
  for (int j = 0; j < 2 * nfree + 1; ++j) nonbasic.push_back(j);
  Dictionary dict(2 * nfree + 1 + int(inequalities.size()), nonbasic);

  int most_negative = -1;
  Rational worst = 0;
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    const auto row = dense(*inequalities[i]);
    // a.x - b with pivots substituted: constant + sum_f g_f x_f.
    Rational constant = -row[nvars];
    std::vector<Rational> g(nfree);
    for (int v = 0; v < nvars; ++v) {
      if (sgn(row[v]) == 0) continue;
      if (pivot_row[v] >= 0) {
        const auto& e = eq[pivot_row[v]];
        constant += row[v] * e[nvars];
        for (int j = 0; j < nfree; ++j) g[j] -= row[v] * e[free_vars[j]];
      } else {
        const int j = int(std::find(free_vars.begin(), free_vars.end(), v) - free_vars.begin());
        g[j] += row[v];
      }
    }
    std::vector<Rational> coefs(2 * nfree + 1);
    for (int j = 0; j < nfree; ++j) {
      coefs[2 * j] = g[j];
      coefs[2 * j + 1] = -g[j];
    }
    coefs[artificial] = 1;
    if (constant < worst) {
      worst = constant;
      most_negative = int(i);
    }
    dict.add_row(artificial + 1 + int(i), constant, coefs);
  }

  if (most_negative >= 0) {
    // Phase one: bring the artificial variable in on the most violated row.
    const int row = most_negative;
    dict.pivot(row, artificial);
    if (!dict.fix_to_zero(artificial)) return std::nullopt;
  } else {
    dict.fix_to_zero(artificial);
  }

  std::vector<Rational> x(nvars);
  for (int j = 0; j < nfree; ++j) x[free_vars[j]] = dict.value(2 * j) - dict.value(2 * j + 1);
  for (std::size_t i = 0; i < eq.size(); ++i) {
    Rational value = eq[i][nvars];
    for (int j = 0; j < nfree; ++j) value -= eq[i][free_vars[j]] * x[free_vars[j]];
    x[eq_pivot[i]] = value;
  }
  for (const auto& c : system.constraints) {
    if (!c.satisfied_by(x)) throw std::logic_error("lp_feasible produced a point violating a constraint");
  }
  return x;
}

}  // namespace metrichg
