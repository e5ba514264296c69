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

#include "metrichg/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace metrichg {

namespace {

struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

void require_mask_size(const Hypergraph& h) {
  if (h.n() > kMaxMaskVertices) {
    throw SizeLimitError("operation supports at most " + std::to_string(kMaxMaskVertices) + " vertices");
  }
}

// Grows `x` with the smallest ids outside it until it has `size` elements.
std::vector<Vertex> pad_to(VertexSet x, int size, int n) {
  for (Vertex v = 0; v < n && popcount(x) < size; ++v) x |= bit(v);
  return to_vertices(x);
}

}  // namespace

std::vector<Vertex> to_vertices(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(popcount(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet to_mask(std::span<const Vertex> vertices) {
  VertexSet s = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaxMaskVertices) throw SizeLimitError("vertex id out of bitmask range");
    s |= bit(v);
  }
  return s;
}

Triple Triple::of(Vertex x, Vertex y, Vertex z) {
  std::array<Vertex, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) {
    throw std::invalid_argument("triple has repeated vertex " + std::to_string(v[1]));
  }
  return Triple{v[0], v[1], v[2]};
}

std::array<Vertex, 2> Triple::others(Vertex v) const {
  if (v == a) return {b, c};
  if (v == b) return {a, c};
  return {a, b};
}

int shared_vertices(const Triple& e, const Triple& f) {
  return int(f.contains(e.a)) + int(f.contains(e.b)) + int(f.contains(e.c));
}

std::string to_string(const Triple& e) {
  return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "," + std::to_string(e.c) + "}";
}

Hypergraph::Hypergraph(int n, std::vector<Triple> edges) : n_(n), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

bool Hypergraph::has_edge(const Triple& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

int Hypergraph::edge_index(const Triple& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  return it != edges_.end() && *it == e ? int(it - edges_.begin()) : -1;
}

int Hypergraph::degree(Vertex v) const {
  return int(std::count_if(edges_.begin(), edges_.end(), [v](const Triple& e) { return e.contains(v); }));
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    for (Vertex v : e.vertices()) {
      if (v >= 0 && v < n_) ++deg[v];
    }
  }
  return deg;
}

std::optional<HypergraphViolation> validate(const Hypergraph& h) {
  if (h.n() < 0) return HypergraphViolation{"negative vertex count", std::nullopt, std::nullopt};
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Triple& e = edges[i];
    if (!(e.a < e.b && e.b < e.c)) {
      return HypergraphViolation{"triple " + to_string(e) + " is not three distinct ascending ids", e, std::nullopt};
    }
    for (Vertex v : e.vertices()) {
      if (v < 0 || v >= h.n()) {
        return HypergraphViolation{"vertex " + std::to_string(v) + " in " + to_string(e) + " is outside [0, " +
                                       std::to_string(h.n()) + ")",
                                   e, v};
      }
    }
    if (i > 0 && edges[i - 1] == e) {
      return HypergraphViolation{"duplicate edge " + to_string(e), e, std::nullopt};
    }
  }
  return std::nullopt;
}

int induced_edge_count(const Hypergraph& h, VertexSet x) {
  int count = 0;
  for (const auto& e : h.edges()) count += (e.mask() & ~x) == 0;
  return count;
}

std::optional<std::vector<Vertex>> find_kl_violation(const Hypergraph& h, SparsityParams p) {
  if (p.k < 3 || p.l < 0) throw std::invalid_argument("sparsity parameters need k >= 3 and l >= 0");
  const int n = h.n();
  const int m = int(h.edge_count());
  if (p.k >= n) {
    if (m > p.l) {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), 0);
      return all;
    }
    return std::nullopt;
  }
  if (m <= p.l) return std::nullopt;
  require_mask_size(h);

  // Look for l+1 edges whose union fits in k vertices.
  const auto& edges = h.edges();
  std::optional<VertexSet> found;
  std::function<void(int, int, VertexSet)> grow = [&](int start, int chosen, VertexSet uni) {
    if (found) return;
    if (chosen == p.l + 1) {
      found = uni;
      return;
    }
    for (int i = start; i < m && !found; ++i) {
      if (m - i < p.l + 1 - chosen) break;
      VertexSet next = uni | edges[i].mask();
      if (popcount(next) <= p.k) grow(i + 1, chosen + 1, next);
    }
  };
  grow(0, 0, 0);
  if (!found) return std::nullopt;
  return pad_to(*found, p.k, n);
}

bool is_kl_sparse(const Hypergraph& h, SparsityParams p) { return !find_kl_violation(h, p).has_value(); }

long f0(int k) { return (k + 1) / 2; }

std::optional<std::vector<Vertex>> find_f_violation(const Hypergraph& h, const EdgeBudget& budget) {
  const int n = h.n();
  if (n < 4) return std::nullopt;
  const int m = int(h.edge_count());
  if (m > budget(n)) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  require_mask_size(h);

  // Only edge-incident vertices matter: a violating set stays violating
  // after dropping isolated members, as long as it is padded back to 4.
  VertexSet used = 0;
  for (const auto& e : h.edges()) used |= e.mask();
  const std::vector<Vertex> support = to_vertices(used);
  const int s = int(support.size());
  constexpr int kMaxSupport = 26;
  if (s > kMaxSupport) {
    throw SizeLimitError("f-sparsity check supports at most " + std::to_string(kMaxSupport) + " edge-incident vertices");
  }

  std::vector<VertexSet> local(h.edge_count());
  for (std::size_t i = 0; i < local.size(); ++i) {
    VertexSet lm = 0;
    for (Vertex v : h.edges()[i].vertices()) {
      lm |= bit(int(std::lower_bound(support.begin(), support.end(), v) - support.begin()));
    }
    local[i] = lm;
  }

  const VertexSet limit = VertexSet{1} << s;
  for (VertexSet y = 1; y < limit; ++y) {
    int inside = 0;
    for (VertexSet e : local) inside += (e & ~y) == 0;
    if (inside == 0) continue;
    const int k = std::max(4, popcount(y));
    if (k > n) continue;
    if (inside > budget(k)) {
      VertexSet x = 0;
      for (Vertex i : to_vertices(y)) x |= bit(support[i]);
      return pad_to(x, k, n);
    }
  }
  return std::nullopt;
}

bool is_f_sparse(const Hypergraph& h, const EdgeBudget& budget) { return !find_f_violation(h, budget).has_value(); }

InducedHypergraph induced(const Hypergraph& h, std::span<const Vertex> x) {
  std::vector<Vertex> labels(x.begin(), x.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<Vertex> local(h.n(), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) local.at(labels[i]) = Vertex(i);

  std::vector<Triple> edges;
  for (const auto& e : h.edges()) {
    if (local[e.a] >= 0 && local[e.b] >= 0 && local[e.c] >= 0) {
      edges.push_back(Triple::of(local[e.a], local[e.b], local[e.c]));
    }
  }
  return {Hypergraph(int(labels.size()), std::move(edges)), std::move(labels)};
}

Hypergraph remove_induced(const Hypergraph& h, std::span<const Vertex> x) {
  std::vector<bool> in(h.n(), false);
  for (Vertex v : x) in.at(v) = true;
  std::vector<Triple> kept;
  for (const auto& e : h.edges()) {
    if (!(in[e.a] && in[e.b] && in[e.c])) kept.push_back(e);
  }
  return Hypergraph(h.n(), std::move(kept));
}

std::vector<std::vector<Vertex>> components(const Hypergraph& h) {
  DisjointSets sets(h.n());
  for (const auto& e : h.edges()) {
    sets.unite(e.a, e.b);
    sets.unite(e.a, e.c);
  }
  std::vector<std::vector<Vertex>> by_root(h.n());
  for (Vertex v = 0; v < h.n(); ++v) by_root[sets.find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& part : by_root) {
    if (!part.empty()) out.push_back(std::move(part));
  }
  return out;
}

bool is_connected(const Hypergraph& h) {
  int with_edges = 0;
  for (const auto& part : components(h)) with_edges += part.size() > 1;
  return with_edges <= 1;
}

std::vector<EdgeCluster> intersection_clusters(const Hypergraph& h) {
  const auto& edges = h.edges();
  const int m = int(edges.size());
  DisjointSets sets(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (shared_vertices(edges[i], edges[j]) >= 2) sets.unite(i, j);
    }
  }
  std::vector<std::vector<int>> by_root(m);
  for (int i = 0; i < m; ++i) by_root[sets.find(i)].push_back(i);

  std::vector<EdgeCluster> out;
  for (const auto& members : by_root) {
    if (members.size() < 2) continue;
    EdgeCluster cluster;
    for (int i : members) {
      cluster.edges.push_back(edges[i]);
      for (Vertex v : edges[i].vertices()) cluster.support.push_back(v);
    }
    std::sort(cluster.support.begin(), cluster.support.end());
    cluster.support.erase(std::unique(cluster.support.begin(), cluster.support.end()), cluster.support.end());
    out.push_back(std::move(cluster));
  }
  return out;
}

std::optional<std::pair<Triple, Triple>> find_overlapping_pair(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (shared_vertices(edges[i], edges[j]) >= 2) return std::pair{edges[i], edges[j]};
    }
  }
  return std::nullopt;
}

bool is_linear(const Hypergraph& h) { return !find_overlapping_pair(h).has_value(); }

Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> new_id, int n) {
  std::vector<Triple> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) edges.push_back(Triple::of(new_id[e.a], new_id[e.b], new_id[e.c]));
  return Hypergraph(n, std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  std::vector<Triple> edges = a.edges();
  const int shift = a.n();
  for (const auto& e : b.edges()) edges.push_back(Triple{e.a + shift, e.b + shift, e.c + shift});
  return Hypergraph(a.n() + b.n(), std::move(edges));
}

Hypergraph drop_isolated(const Hypergraph& h, std::vector<Vertex>* labels) {
  std::vector<Vertex> kept;
  const auto deg = h.degrees();
  for (Vertex v = 0; v < h.n(); ++v) {
    if (deg[v] > 0) kept.push_back(v);
  }
  auto sub = induced(h, kept);
  if (labels != nullptr) *labels = sub.labels;
  return std::move(sub.graph);
}

}  // namespace metrichg
