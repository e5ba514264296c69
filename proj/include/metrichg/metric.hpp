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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "metrichg/hypergraph.hpp"
#include "metrichg/rational.hpp"

namespace metrichg {

/// A finite metric space on points {0, ..., n-1} with exact rational distances,
/// stored as a dense symmetric matrix.
class FiniteMetric {
 public:
  FiniteMetric() = default;
  /// All off-diagonal entries set to `fill`.
  explicit FiniteMetric(int n, const Rational& fill = Rational(1));

  int n() const { return n_; }

  const Rational& operator()(Vertex x, Vertex y) const { return d_[std::size_t(x) * n_ + y]; }
  /// Writes both d(x, y) and d(y, x).
  void set(Vertex x, Vertex y, const Rational& value);

  /// Distances of the pairs (i, j), i < j, in lexicographic order.
  std::vector<Rational> upper_triangle() const;

  friend bool operator==(const FiniteMetric&, const FiniteMetric&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> d_;
};

class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MetricViolation {
  enum class Kind { NonzeroDiagonal, Asymmetric, NonPositive, Triangle };
  Kind kind;
  Vertex i = 0;
  Vertex j = 0;
  Vertex k = 0;
  std::string message;
};

/// Checks zero diagonal, symmetry, positivity and d(i,k) <= d(i,j) + d(j,k).
std::optional<MetricViolation> validate_metric(const FiniteMetric& m);

/// d(x,z) = d(x,y) + d(y,z), i.e. y lies between x and z. Ids must be distinct.
bool is_between(const FiniteMetric& m, Vertex x, Vertex y, Vertex z);

/// The middle point of a collinear triple, if any.
std::optional<Vertex> middle_of(const FiniteMetric& m, const Triple& t);

/// H_M: all collinear triples. Throws MetricError when `m` is not a metric.
Hypergraph betweenness_hypergraph(const FiniteMetric& m);

/// Same as betweenness_hypergraph(m) == h without building H_M.
bool realizes(const FiniteMetric& m, const Hypergraph& h);

/// Points of `b` follow those of `a`; cross distances all equal the largest
/// internal distance plus 1/2.
FiniteMetric disjoint_union_metric(const FiniteMetric& a, const FiniteMetric& b);

FiniteMetric scaled(const FiniteMetric& m, const Rational& factor);

/// result(new_id[x], new_id[y]) = m(x, y).
FiniteMetric relabel(const FiniteMetric& m, std::span<const Vertex> new_id);

/// Restriction to the listed points, in the given order.
FiniteMetric restrict_to(const FiniteMetric& m, std::span<const Vertex> points);

/// Distinct off-diagonal values, ascending.
std::vector<Rational> distance_values(const FiniteMetric& m);

}  // namespace metrichg
