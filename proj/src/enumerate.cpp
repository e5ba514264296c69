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

#include "metrichg/enumerate.hpp"

#include <map>
#include <string>

#include "metrichg/canonical.hpp"

namespace metrichg {

std::vector<Hypergraph> enumerate_up_to_isomorphism(int n, int max_edges, const HypergraphFilter& keep) {
  std::vector<Triple> all;
  for (int c = 2; c < n; ++c) {
    for (int b = 1; b < c; ++b) {
      for (int a = 0; a < b; ++a) all.push_back(Triple{a, b, c});
    }
  }
  std::vector<Hypergraph> out;
  std::vector<Hypergraph> level{Hypergraph(n)};
  if (!keep(level.front())) return out;
  for (int m = 0;; ++m) {
    out.insert(out.end(), level.begin(), level.end());
    if (m == max_edges) break;
    std::map<std::string, Hypergraph> next;
    for (const auto& h : level) {
      for (const auto& t : all) {
        if (h.has_edge(t)) continue;
        auto edges = h.edges();
        edges.push_back(t);
        Hypergraph g(n, std::move(edges));
        if (!keep(g)) continue;
        auto form = canonical_form(g);
        if (!next.contains(form)) next.emplace(std::move(form), canonical_graph(g));
      }
    }
    if (next.empty()) break;
    level.clear();
    for (auto& [form, g] : next) level.push_back(std::move(g));
  }
  return out;
}

bool is_covering(const Hypergraph& h) {
  VertexSet seen = 0;
  for (const auto& e : h.edges()) seen |= e.mask();
  return popcount(seen) == h.n();
}

}  // namespace metrichg
