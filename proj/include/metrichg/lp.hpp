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

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "metrichg/rational.hpp"

namespace metrichg {

struct LinearConstraint {
  enum class Sense { Equal, GreaterEqual };

  /// (variable index, coefficient); repeated indices are summed.
  std::vector<std::pair<int, Rational>> terms;
  Sense sense = Sense::GreaterEqual;
  Rational rhs;

  bool satisfied_by(const std::vector<Rational>& x) const;
};

/// Constraints over `variables` real unknowns of unrestricted sign.
struct LinearSystem {
  int variables = 0;
  std::vector<LinearConstraint> constraints;
};

/// Exact feasibility: equalities are eliminated by Gauss-Jordan reduction,
/// the rest is solved by a two-phase simplex with Bland's rule. Returns a point
/// satisfying every constraint exactly, or nothing when the system is infeasible.
std::optional<std::vector<Rational>> lp_feasible(const LinearSystem& system);

/// A feasible simplex dictionary. Every variable is non-negative; each basic
/// variable equals its row constant plus a combination of the nonbasic ones,
/// and all row constants are kept >= 0. Variables are identified by ids in
/// [0, variable_count).
class Dictionary {
 public:
  Dictionary() = default;
  /// Starts with the given nonbasic variables and no rows.
  Dictionary(int variable_count, const std::vector<int>& nonbasic);

  /// Adds basic variable `id` = constant + sum coefs[c] * nonbasic(c).
  void add_row(int id, const Rational& constant, const std::vector<Rational>& coefs);

  int rows() const { return int(basic_.size()); }
  int columns() const { return int(nonbasic_.size()); }
  bool is_feasible() const;

  /// Exchanges the nonbasic variable of column `col` with the basic variable of `row`.
  void pivot(int row, int col);

  /// Minimizes variable `id` from the current vertex. If the minimum is 0 the
  /// variable is pinned to 0 for good (removed) and true is returned; otherwise
  /// the dictionary is left at an optimal vertex and false is returned.
  bool fix_to_zero(int id);

  /// Value of variable `id` at the current basic solution (0 if pinned).
  Rational value(int id) const;

  long pivots() const { return pivots_; }

 private:
  static constexpr int kPinned = -1'000'000'000;

  Rational& coef(int r, int c) { return coef_[std::size_t(r) * stride_ + c]; }
  const Rational& coef(int r, int c) const { return coef_[std::size_t(r) * stride_ + c]; }
  void remove_row(int r);
  void remove_column(int c);

  // location_[id] >= 0: basic row; < 0 and != kPinned: nonbasic column -(loc+1).
  std::vector<int> location_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<Rational> constant_;
  std::vector<Rational> coef_;
  int stride_ = 0;
  long pivots_ = 0;
};

/// Homogeneous equalities over positive variables kept in reduced row echelon
/// form. A row whose nonzero coefficients all share one sign cannot hold for
/// positive values and marks the system contradictory.
class EqualityPropagator {
 public:
  EqualityPropagator() = default;
  explicit EqualityPropagator(int variables) : variables_(variables) {}

  /// Adds sum coefs[i] * x_i = 0; false if the system became contradictory.
  bool add(std::vector<Rational> coefs);
  int rank() const { return int(rows_.size()); }
  bool contradictory() const { return contradictory_; }

 private:
  int variables_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivot_;
  bool contradictory_ = false;
};

}  // namespace metrichg
