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
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace metrichg {

using Vertex = int;

/// Bitmask over vertex ids; operations that use it require n <= 64.
using VertexSet = std::uint64_t;

constexpr int kMaxMaskVertices = 64;

inline VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }
std::vector<Vertex> to_vertices(VertexSet s);
VertexSet to_mask(std::span<const Vertex> vertices);

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hyperedge {a, b, c}. Built through `of`, which sorts the ids.
struct Triple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  /// Throws std::invalid_argument if two ids coincide.
  static Triple of(Vertex x, Vertex y, Vertex z);

  bool contains(Vertex v) const { return a == v || b == v || c == v; }
  std::array<Vertex, 3> vertices() const { return {a, b, c}; }
  VertexSet mask() const { return bit(a) | bit(b) | bit(c); }
  /// The two vertices other than `v`; `v` must be in the triple.
  std::array<Vertex, 2> others(Vertex v) const;

  auto operator<=>(const Triple&) const = default;
};

int shared_vertices(const Triple& e, const Triple& f);
std::string to_string(const Triple& e);

/// H = (V, E) with V = {0, ..., n-1}. Edges are kept sorted; duplicates and
/// out-of-range ids are not rejected here, see `validate`.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n, std::vector<Triple> edges = {});

  int n() const { return n_; }
  const std::vector<Triple>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool has_edge(const Triple& e) const;
  /// Index of `e` in `edges()`, or -1.
  int edge_index(const Triple& e) const;
  int degree(Vertex v) const;
  std::vector<int> degrees() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Triple> edges_;
};

struct HypergraphViolation {
  std::string message;
  std::optional<Triple> triple;
  std::optional<Vertex> vertex;
};

/// Names the first malformed triple, out-of-range id or duplicate edge.
std::optional<HypergraphViolation> validate(const Hypergraph& h);

struct SparsityParams {
  int k = 6;
  int l = 2;
};

/// A k-subset inducing more than l edges, or nothing if H is (k,l)-sparse.
/// For k > n the only candidate is V itself.
std::optional<std::vector<Vertex>> find_kl_violation(const Hypergraph& h, SparsityParams p);
bool is_kl_sparse(const Hypergraph& h, SparsityParams p);

using EdgeBudget = std::function<long(int)>;

/// ceil(k / 2).
long f0(int k);

/// A k-set (4 <= k <= n) inducing more than budget(k) edges, if any.
/// `budget` must be monotonically increasing.
std::optional<std::vector<Vertex>> find_f_violation(const Hypergraph& h, const EdgeBudget& budget = f0);
bool is_f_sparse(const Hypergraph& h, const EdgeBudget& budget = f0);

/// Number of edges e with e ⊆ X.
int induced_edge_count(const Hypergraph& h, VertexSet x);

struct InducedHypergraph {
  Hypergraph graph;
  /// labels[i] is the original id of local vertex i.
  std::vector<Vertex> labels;
};

/// H[X] relabeled onto {0, ..., |X|-1} in increasing original order.
InducedHypergraph induced(const Hypergraph& h, std::span<const Vertex> x);
/// H \ E[X] on the original vertex set.
Hypergraph remove_induced(const Hypergraph& h, std::span<const Vertex> x);

/// Connected components, each sorted, ordered by smallest vertex. Isolated
/// vertices form singleton components.
std::vector<std::vector<Vertex>> components(const Hypergraph& h);
/// True when all edges lie in one component (an edgeless graph counts).
bool is_connected(const Hypergraph& h);

struct EdgeCluster {
  std::vector<Triple> edges;
  std::vector<Vertex> support;
};

/// Classes of the transitive closure of |e ∩ f| >= 2 that hold two or more edges.
std::vector<EdgeCluster> intersection_clusters(const Hypergraph& h);

/// Two edges sharing two vertices, if any.
std::optional<std::pair<Triple, Triple>> find_overlapping_pair(const Hypergraph& h);
/// Every two distinct edges share at most one vertex.
bool is_linear(const Hypergraph& h);

/// `new_id[v]` is the image of v; the result has `n` vertices.
Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> new_id, int n);
/// Vertices of `b` are shifted by a.n().
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);
/// Removes isolated vertices; `labels` receives the kept original ids.
Hypergraph drop_isolated(const Hypergraph& h, std::vector<Vertex>* labels = nullptr);

}  // namespace metrichg
