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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "metrichg/generators.hpp"
#include "metrichg/hypergraph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace metrichg;
using fixtures::hg;

Hypergraph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Triple> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (keep(rng)) edges.push_back(Triple::of(a, b, c));
      }
    }
  }
  return Hypergraph(n, edges);
}

std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(Validate, WellFormed) {
  EXPECT_FALSE(validate(hg(4, {{0, 1, 2}})).has_value());
  EXPECT_FALSE(validate(fano()).has_value());
}

TEST(Validate, VertexOutOfRange) {
  const Hypergraph h(3, {Triple{0, 1, 3}});
  const auto v = validate(h);
  ASSERT_TRUE(v.has_value());
  ASSERT_TRUE(v->vertex.has_value());
  EXPECT_EQ(*v->vertex, 3);
}

TEST(Validate, DuplicateAndMalformed) {
  EXPECT_TRUE(validate(Hypergraph(4, {Triple{0, 1, 2}, Triple{0, 1, 2}})).has_value());
  EXPECT_TRUE(validate(Hypergraph(4, {Triple{0, 0, 2}})).has_value());
  EXPECT_THROW(Triple::of(1, 1, 2), std::invalid_argument);
}

TEST(Sparsity, FanoIs52Sparse) { EXPECT_TRUE(is_kl_sparse(fano(), {5, 2})); }

TEST(Sparsity, FanoIsNot62Sparse) {
  EXPECT_FALSE(is_kl_sparse(fano(), {6, 2}));
  const auto w = find_kl_violation(fano(), {6, 2});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 6u);
  EXPECT_GT(induced_edge_count(fano(), to_mask(*w)), 2);
  // Every 6-set of Fano holds exactly 4 lines.
  oracles::for_each_subset(7, 6, [](const std::vector<int>& x) { EXPECT_EQ(oracles::count_inside(fano(), x), 4); });
}

TEST(Sparsity, EmptyIsAlwaysSparse) {
  const Hypergraph h(10);
  for (int k = 3; k <= 12; ++k) {
    for (int l = 0; l <= 3; ++l) EXPECT_TRUE(is_kl_sparse(h, {k, l}));
  }
  EXPECT_TRUE(is_f_sparse(h));
}

TEST(Sparsity, KLargerThanNChecksWholeSet) {
  const Hypergraph h = hg(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  EXPECT_FALSE(is_kl_sparse(h, {6, 2}));
  EXPECT_TRUE(is_kl_sparse(h, {6, 3}));
}

TEST(Sparsity, F0Examples) {
  EXPECT_EQ(f0(4), 2);
  EXPECT_EQ(f0(7), 4);
  EXPECT_TRUE(is_f_sparse(hg(4, {{0, 1, 2}, {0, 1, 3}})));
  const auto w = find_f_violation(fano());
  ASSERT_TRUE(w.has_value());
  EXPECT_GT(induced_edge_count(fano(), to_mask(*w)), f0(int(w->size())));
  EXPECT_EQ(oracles::count_inside(fano(), {0, 1, 2, 3, 4, 5, 6}), 7);
}

TEST(Sparsity, AgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + int(rng() % 5);
    const Hypergraph h = random_graph(rng, n, 0.05 + 0.3 * double(rng() % 100) / 100.0);
    for (int k = 3; k <= n + 1; ++k) {
      for (int l = 0; l <= 3; ++l) {
        EXPECT_EQ(is_kl_sparse(h, {k, l}), oracles::kl_sparse(h, k, l));
      }
    }
    EXPECT_EQ(is_f_sparse(h), oracles::f0_sparse(h));
  }
}

TEST(Sparsity, PermutationInvariant) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + int(rng() % 5);
    const Hypergraph h = random_graph(rng, n, 0.1);
    const Hypergraph p = relabel(h, random_permutation(rng, n), n);
    EXPECT_EQ(is_kl_sparse(h, {6, 2}), is_kl_sparse(p, {6, 2}));
    EXPECT_EQ(is_f_sparse(h), is_f_sparse(p));
    EXPECT_EQ(is_linear(h), is_linear(p));
    EXPECT_EQ(components(h).size(), components(p).size());
  }
}

TEST(Induced, Examples) {
  const auto line = induced(fano(), std::vector<Vertex>{0, 1, 2});
  EXPECT_EQ(line.graph.n(), 3);
  EXPECT_EQ(line.graph.edge_count(), 1u);

  const Hypergraph h = hg(5, {{0, 1, 2}, {2, 3, 4}});
  const auto all = induced(h, std::vector<Vertex>{0, 1, 2, 3, 4});
  EXPECT_EQ(all.graph, h);
  const auto part = induced(h, std::vector<Vertex>{0, 1, 2, 3});
  EXPECT_EQ(part.graph, hg(4, {{0, 1, 2}}));
}

TEST(Induced, RelabelsInOrder) {
  const auto r = induced(hg(6, {{1, 3, 5}, {0, 1, 2}}), std::vector<Vertex>{1, 3, 5});
  EXPECT_EQ(r.graph, hg(3, {{0, 1, 2}}));
  EXPECT_EQ(r.labels, (std::vector<Vertex>{1, 3, 5}));
}

TEST(Induced, PartitionsEdgesWithRemove) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + int(rng() % 5);
    const Hypergraph h = random_graph(rng, n, 0.2);
    std::vector<Vertex> x;
    for (int v = 0; v < n; ++v) {
      if (rng() % 2) x.push_back(v);
    }
    const auto in = induced(h, x);
    const Hypergraph out = remove_induced(h, x);
    EXPECT_EQ(in.graph.edge_count() + out.edge_count(), h.edge_count());
    std::set<Triple> all(out.edges().begin(), out.edges().end());
    for (const auto& e : in.graph.edges()) {
      all.insert(Triple::of(in.labels[e.a], in.labels[e.b], in.labels[e.c]));
    }
    EXPECT_EQ(all, std::set<Triple>(h.edges().begin(), h.edges().end()));
    EXPECT_EQ(int(in.graph.edge_count()), oracles::count_inside(h, x));
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(components(hg(5, {{0, 1, 2}, {2, 3, 4}})).size(), 1u);
  EXPECT_EQ(components(hg(6, {{0, 1, 2}, {3, 4, 5}})),
            (std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}}));
  EXPECT_EQ(components(Hypergraph(3)), (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
  EXPECT_TRUE(is_connected(Hypergraph(3)));
  EXPECT_FALSE(is_connected(hg(6, {{0, 1, 2}, {3, 4, 5}})));
}

TEST(Components, PartitionVertices) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + int(rng() % 8);
    const Hypergraph h = random_graph(rng, n, 0.04);
    std::vector<int> owner(n, -1);
    const auto comps = components(h);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (Vertex v : comps[c]) {
        EXPECT_EQ(owner[v], -1);
        owner[v] = int(c);
      }
    }
    for (int v = 0; v < n; ++v) EXPECT_GE(owner[v], 0);
    for (const auto& e : h.edges()) {
      EXPECT_EQ(owner[e.a], owner[e.b]);
      EXPECT_EQ(owner[e.a], owner[e.c]);
    }
  }
}

TEST(Clusters, Examples) {
  const auto two = intersection_clusters(hg(4, {{0, 1, 2}, {0, 1, 3}}));
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].edges.size(), 2u);
  EXPECT_EQ(two[0].support, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(intersection_clusters(hg(5, {{0, 1, 2}, {2, 3, 4}})).empty());
  // Two Fano lines share exactly one point, so no pair is related.
  EXPECT_TRUE(intersection_clusters(fano()).empty());
  EXPECT_TRUE(is_linear(fano()));
}

TEST(Clusters, TransitiveClosure) {
  const auto c = intersection_clusters(hg(7, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {4, 5, 6}}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].edges.size(), 3u);
  EXPECT_EQ(c[0].support, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(Hypergraph, DisjointUnionAndDropIsolated) {
  const Hypergraph u = disjoint_union(hg(3, {{0, 1, 2}}), hg(4, {{1, 2, 3}}));
  EXPECT_EQ(u, hg(7, {{0, 1, 2}, {4, 5, 6}}));
  std::vector<Vertex> labels;
  const Hypergraph d = drop_isolated(u, &labels);
  EXPECT_EQ(d, hg(6, {{0, 1, 2}, {3, 4, 5}}));
  EXPECT_EQ(labels, (std::vector<Vertex>{0, 1, 2, 4, 5, 6}));
}

}  // namespace
