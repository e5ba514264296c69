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

#include <array>
#include <initializer_list>
#include <vector>

#include "metrichg/hypergraph.hpp"
#include "metrichg/metric.hpp"
#include "metrichg/rational.hpp"

namespace fixtures {

inline metrichg::Hypergraph hg(int n, std::initializer_list<std::array<int, 3>> edges) {
  std::vector<metrichg::Triple> out;
  for (const auto& e : edges) out.push_back(metrichg::Triple::of(e[0], e[1], e[2]));
  return metrichg::Hypergraph(n, out);
}

inline metrichg::Rational q(long num, long den = 1) { return metrichg::make_rational(num, den); }

/// Points of the real line at the given coordinates.
inline metrichg::FiniteMetric line_metric(const std::vector<long>& coords) {
  metrichg::FiniteMetric m(int(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t j = i + 1; j < coords.size(); ++j) {
      const long d = coords[i] > coords[j] ? coords[i] - coords[j] : coords[j] - coords[i];
      m.set(int(i), int(j), q(d));
    }
  }
  return m;
}

}  // namespace fixtures
