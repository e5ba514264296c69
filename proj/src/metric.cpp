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

#include "metrichg/metric.hpp"

#include <algorithm>

namespace metrichg {

FiniteMetric::FiniteMetric(int n, const Rational& fill) : n_(n), d_(std::size_t(n) * n, fill) {
  for (int i = 0; i < n; ++i) d_[std::size_t(i) * n + i] = 0;
}

void FiniteMetric::set(Vertex x, Vertex y, const Rational& value) {
  d_[std::size_t(x) * n_ + y] = value;
  d_[std::size_t(y) * n_ + x] = value;
}

std::vector<Rational> FiniteMetric::upper_triangle() const {
  std::vector<Rational> out;
  out.reserve(std::size_t(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) out.push_back((*this)(i, j));
  }
  return out;
}

std::optional<MetricViolation> validate_metric(const FiniteMetric& m) {
  using Kind = MetricViolation::Kind;
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != 0) return MetricViolation{Kind::NonzeroDiagonal, i, i, i, "d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0"};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (m(i, j) != m(j, i)) return MetricViolation{Kind::Asymmetric, i, j, j, "asymmetric pair " + pair};
      if (m(i, j) <= 0) return MetricViolation{Kind::NonPositive, i, j, j, "non-positive distance at " + pair};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        // Check each side against the other two.
        const Rational& ij = m(i, j);
        const Rational& jk = m(j, k);
        const Rational& ik = m(i, k);
        auto report = [&](Vertex a, Vertex b, Vertex c) {
          return MetricViolation{Kind::Triangle, a, b, c,
                                 "triangle inequality fails at triple (" + std::to_string(i) + "," + std::to_string(j) +
                                     "," + std::to_string(k) + ")"};
        };
        if (ik > ij + jk) return report(i, j, k);
        if (ij > ik + jk) return report(i, k, j);
        if (jk > ij + ik) return report(j, i, k);
      }
    }
  }
  return std::nullopt;
}

bool is_between(const FiniteMetric& m, Vertex x, Vertex y, Vertex z) {
  if (x == y || y == z || x == z) throw std::invalid_argument("is_between needs three distinct points");
  return m(x, z) == m(x, y) + m(y, z);
}

std::optional<Vertex> middle_of(const FiniteMetric& m, const Triple& t) {
  if (is_between(m, t.b, t.a, t.c)) return t.a;
  if (is_between(m, t.a, t.b, t.c)) return t.b;
  if (is_between(m, t.a, t.c, t.b)) return t.c;
  return std::nullopt;
}

Hypergraph betweenness_hypergraph(const FiniteMetric& m) {
  if (auto bad = validate_metric(m)) throw MetricError("not a metric: " + bad->message);
  std::vector<Triple> edges;
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (middle_of(m, Triple{i, j, k})) edges.push_back(Triple{i, j, k});
      }
    }
  }
  return Hypergraph(n, std::move(edges));
}

bool realizes(const FiniteMetric& m, const Hypergraph& h) {
  if (m.n() != h.n() || validate_metric(m)) return false;
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Triple t{i, j, k};
        if (middle_of(m, t).has_value() != h.has_edge(t)) return false;
      }
    }
  }
  return true;
}

FiniteMetric disjoint_union_metric(const FiniteMetric& a, const FiniteMetric& b) {
  Rational largest = 0;
  for (const auto& v : a.upper_triangle()) largest = std::max(largest, v);
  for (const auto& v : b.upper_triangle()) largest = std::max(largest, v);
  const Rational cross = largest + Rational(1, 2);

  const int n = a.n() + b.n();
  FiniteMetric out(n, cross);
  for (int i = 0; i < a.n(); ++i) {
    for (int j = i + 1; j < a.n(); ++j) out.set(i, j, a(i, j));
  }
  for (int i = 0; i < b.n(); ++i) {
    for (int j = i + 1; j < b.n(); ++j) out.set(a.n() + i, a.n() + j, b(i, j));
  }
  return out;
}

FiniteMetric scaled(const FiniteMetric& m, const Rational& factor) {
  FiniteMetric out(m.n());
  for (int i = 0; i < m.n(); ++i) {
    for (int j = i + 1; j < m.n(); ++j) out.set(i, j, m(i, j) * factor);
  }
  return out;
}

FiniteMetric relabel(const FiniteMetric& m, std::span<const Vertex> new_id) {
  FiniteMetric out(m.n());
  for (int i = 0; i < m.n(); ++i) {
    for (int j = i + 1; j < m.n(); ++j) out.set(new_id[i], new_id[j], m(i, j));
  }
  return out;
}

FiniteMetric restrict_to(const FiniteMetric& m, std::span<const Vertex> points) {
  const int k = int(points.size());
  FiniteMetric out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) out.set(i, j, m(points[i], points[j]));
  }
  return out;
}

std::vector<Rational> distance_values(const FiniteMetric& m) {
  auto values = m.upper_triangle();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace metrichg
