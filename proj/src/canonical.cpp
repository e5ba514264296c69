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

#include "metrichg/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace metrichg {

namespace {

// Stable color refinement: each round a vertex is recolored by its old color
// plus the multiset of color pairs it sees through its edges. Colors are ranks
// of sorted signatures, so they are isomorphism invariant.
std::vector<int> refine_colors(const Hypergraph& h) {
  const int n = h.n();
  std::vector<int> color = h.degrees();
  {
    auto sorted = color;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& c : color) c = int(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
  }
  int classes = *std::max_element(color.begin(), color.end()) + 1;

  for (;;) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Signature> sig(n);
    for (Vertex v = 0; v < n; ++v) sig[v].first = color[v];
    for (const auto& e : h.edges()) {
      for (Vertex v : e.vertices()) {
        auto [x, y] = e.others(v);
        sig[v].second.emplace_back(std::min(color[x], color[y]), std::max(color[x], color[y]));
      }
    }
    for (auto& s : sig) std::sort(s.second.begin(), s.second.end());
    std::map<Signature, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, value] : rank) value = next++;
    for (Vertex v = 0; v < n; ++v) color[v] = rank[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Hypergraph& h) : h_(h), n_(h.n()) {
    adjacency_.assign(std::size_t(n_) * n_ * n_, false);
    for (const auto& e : h.edges()) {
      for (Vertex x : e.vertices()) {
        for (Vertex y : e.vertices()) {
          for (Vertex z : e.vertices()) {
            if (x != y && y != z && x != z) adjacency_[index(x, y, z)] = true;
          }
        }
      }
    }
    color_ = refine_colors(h);
    twin_.assign(std::size_t(n_) * n_, false);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        twin_[u * n_ + v] = twin_[v * n_ + u] = are_twins(u, v);
      }
    }
    const int triples = n_ * (n_ - 1) * (n_ - 2) / 6;
    current_.assign(triples, 0);
    best_.assign(triples, 0);
    order_.assign(n_, -1);
    placed_.assign(n_, false);
  }

  std::vector<Vertex> run() {
    if (n_ > 0) extend(0);
    std::vector<Vertex> new_id(n_);
    for (int pos = 0; pos < n_; ++pos) new_id[best_order_[pos]] = pos;
    return new_id;
  }

 private:
  std::size_t index(Vertex x, Vertex y, Vertex z) const { return (std::size_t(x) * n_ + y) * n_ + z; }

  bool are_twins(Vertex u, Vertex v) const {
    if (color_[u] != color_[v]) return false;
    // Swapping u and v must map every edge onto an edge.
    for (const auto& e : h_.edges()) {
      if (e.contains(u) == e.contains(v)) continue;
      Vertex from = e.contains(u) ? u : v;
      Vertex to = from == u ? v : u;
      auto [x, y] = e.others(from);
      if (!adjacency_[index(to, x, y)]) return false;
    }
    return true;
  }

  static int block_start(int pos) { return pos * (pos - 1) * (pos - 2) / 6; }

  void extend(int pos) {
    // Candidates: unplaced vertices of the smallest remaining color.
    int target = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (!placed_[v] && (target < 0 || color_[v] < target)) target = color_[v];
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (placed_[v] || color_[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twin_[u * n_ + v]; })) continue;
      tried.push_back(v);

      order_[pos] = v;
      placed_[v] = true;
      // Triples whose largest new label is `pos`, colex order.
      int k = block_start(pos);
      for (int j = 1; j < pos; ++j) {
        for (int i = 0; i < j; ++i) current_[k++] = adjacency_[index(order_[i], order_[j], v)];
      }
      const int end = block_start(pos + 1);
      int cmp = 0;
      if (have_best_) {
        for (int t = 0; t < end && cmp == 0; ++t) cmp = int(current_[t]) - int(best_[t]);
      } else {
        cmp = 1;
      }
      if (cmp >= 0) {
        if (pos + 1 == n_) {
          if (cmp > 0) {
            best_ = current_;
            best_order_ = order_;
            have_best_ = true;
          }
        } else {
          extend(pos + 1);
        }
      }
      placed_[v] = false;
      order_[pos] = -1;
    }
  }

  const Hypergraph& h_;
  int n_;
  std::vector<bool> adjacency_;
  std::vector<int> color_;
  std::vector<bool> twin_;
  std::vector<char> current_;
  std::vector<char> best_;
  std::vector<Vertex> order_;
  std::vector<Vertex> best_order_;
  std::vector<bool> placed_;
  bool have_best_ = false;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Hypergraph& h) {
  if (h.n() > kMaxCanonicalVertices) {
    throw SizeLimitError("canonical form supports at most " + std::to_string(kMaxCanonicalVertices) + " vertices");
  }
  return CanonicalSearch(h).run();
}

Hypergraph canonical_graph(const Hypergraph& h) {
  const auto new_id = canonical_labeling(h);
  return relabel(h, new_id, h.n());
}

std::string canonical_form(const Hypergraph& h) {
  const Hypergraph g = canonical_graph(h);
  std::string out = std::to_string(g.n()) + ":";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e.a) + "." + std::to_string(e.b) + "." + std::to_string(e.c);
  }
  return out;
}

std::vector<Vertex> find_isomorphism(const Hypergraph& from, const Hypergraph& to) {
  if (from.n() != to.n() || from.edge_count() != to.edge_count()) return {};
  const auto a = canonical_labeling(from);
  const auto b = canonical_labeling(to);
  if (relabel(from, a, from.n()) != relabel(to, b, to.n())) return {};
  std::vector<Vertex> b_inverse(to.n());
  for (Vertex v = 0; v < to.n(); ++v) b_inverse[b[v]] = v;
  std::vector<Vertex> map(from.n());
  for (Vertex v = 0; v < from.n(); ++v) map[v] = b_inverse[a[v]];
  return map;
}

std::vector<std::vector<Vertex>> automorphisms(const Hypergraph& h, std::size_t limit) {
  const int n = h.n();
  const auto color = refine_colors(h);
  std::vector<bool> edge(std::size_t(n) * n * n, false);
  for (const auto& e : h.edges()) {
    for (Vertex x : e.vertices()) {
      for (Vertex y : e.vertices()) {
        for (Vertex z : e.vertices()) {
          if (x != y && y != z && x != z) edge[(std::size_t(x) * n + y) * n + z] = true;
        }
      }
    }
  }
  auto is_edge = [&](Vertex x, Vertex y, Vertex z) { return edge[(std::size_t(x) * n + y) * n + z]; };

  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(Vertex)> extend = [&](Vertex v) {
    if (out.size() >= limit) return;
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (Vertex w = 0; w < n && out.size() < limit; ++w) {
      if (used[w] || color[w] != color[v]) continue;
      // Triples among mapped vertices must keep their edge status.
      bool ok = true;
      for (Vertex j = 1; j < v && ok; ++j) {
        for (Vertex i = 0; i < j && ok; ++i) ok = is_edge(i, j, v) == is_edge(image[i], image[j], w);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      extend(v + 1);
      used[w] = false;
      image[v] = -1;
    }
  };
  extend(0);
  // Identity is found first because candidates are tried in id order.
  return out;
}

}  // namespace metrichg
