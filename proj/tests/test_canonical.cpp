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
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "metrichg/canonical.hpp"
#include "metrichg/enumerate.hpp"
#include "metrichg/generators.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace metrichg;
using fixtures::hg;

Hypergraph random_graph(std::mt19937_64& rng, int n, int m) {
  std::vector<Triple> all;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) all.push_back(Triple::of(a, b, c));
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(all.size(), m));
  return Hypergraph(n, all);
}

std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(Canonical, RelabelingGivesSameForm) {
  EXPECT_EQ(canonical_form(hg(4, {{0, 1, 2}})), canonical_form(hg(4, {{1, 2, 3}})));
}

TEST(Canonical, DifferentIntersectionProfiles) {
  EXPECT_NE(canonical_form(hg(5, {{0, 1, 2}, {0, 1, 3}})), canonical_form(hg(5, {{0, 1, 2}, {0, 3, 4}})));
}

TEST(Canonical, FanoDiffersFromEverySevenSubsetOfSts9) {
  const Hypergraph sts9 = steiner_triple_system(9);
  const std::string fano_form = canonical_form(fano());
  oracles::for_each_subset(9, 7, [&](const std::vector<int>& x) {
    EXPECT_NE(canonical_form(induced(sts9, x).graph), fano_form);
  });
}

TEST(Canonical, InvariantUnderRandomPermutations) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + int(rng() % 8);
    const Hypergraph h = random_graph(rng, n, int(rng() % 12));
    const Hypergraph p = relabel(h, random_permutation(rng, n), n);
    EXPECT_EQ(canonical_form(h), canonical_form(p));
    EXPECT_EQ(canonical_graph(h), canonical_graph(p));
  }
}

TEST(Canonical, SeparatesClassesLikeBruteForce) {
  // Same form iff the naive minimum over all relabelings agrees.
  std::mt19937_64 rng(22);
  std::map<std::vector<Triple>, std::string> seen;
  for (int trial = 0; trial < 400; ++trial) {
    const Hypergraph h = random_graph(rng, 6, 2 + int(rng() % 4));
    const auto key = oracles::naive_canonical(h);
    const std::string form = canonical_form(h);
    auto [it, fresh] = seen.emplace(key, form);
    if (!fresh) EXPECT_EQ(it->second, form);
  }
  std::set<std::string> forms;
  for (const auto& [key, form] : seen) forms.insert(form);
  EXPECT_EQ(forms.size(), seen.size());
}

TEST(Canonical, IsomorphismMapsEdges) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 5 + int(rng() % 4);
    const Hypergraph h = random_graph(rng, n, 6);
    const Hypergraph p = relabel(h, random_permutation(rng, n), n);
    const auto iso = find_isomorphism(h, p);
    ASSERT_EQ(int(iso.size()), n);
    EXPECT_EQ(relabel(h, iso, n), p);
  }
  EXPECT_TRUE(find_isomorphism(hg(5, {{0, 1, 2}, {0, 1, 3}}), hg(5, {{0, 1, 2}, {0, 3, 4}})).empty());
}

TEST(Canonical, Automorphisms) {
  // |Aut(Fano)| = 168, |Aut(AG(2,3))| = 432.
  EXPECT_EQ(automorphisms(fano()).size(), 168u);
  EXPECT_EQ(automorphisms(steiner_triple_system(9)).size(), 432u);
  const auto group = automorphisms(hg(4, {{0, 1, 2}, {0, 1, 3}}));
  EXPECT_EQ(group.size(), 4u);
  std::vector<Vertex> id{0, 1, 2, 3};
  EXPECT_EQ(group.front(), id);
  for (const auto& g : group) EXPECT_EQ(relabel(hg(4, {{0, 1, 2}, {0, 1, 3}}), g, 4), hg(4, {{0, 1, 2}, {0, 1, 3}}));
}

TEST(Canonical, SizeCap) { EXPECT_THROW(canonical_form(Hypergraph(13)), SizeLimitError); }

TEST(Enumerate, ClassCountsMatchBruteForce) {
  for (int n = 3; n <= 5; ++n) {
    const auto fast = enumerate_up_to_isomorphism(n, 100, [](const Hypergraph&) { return true; });
    EXPECT_EQ(fast.size(), oracles::all_classes(n).size()) << "n=" << n;
  }
  // Known counts of 3-graphs up to isomorphism: 2, 5, 34.
  EXPECT_EQ(oracles::all_classes(3).size(), 2u);
  EXPECT_EQ(oracles::all_classes(4).size(), 5u);
  EXPECT_EQ(oracles::all_classes(5).size(), 34u);
}

TEST(Enumerate, FilterAndOrder) {
  const auto sparse = enumerate_up_to_isomorphism(6, 100, [](const Hypergraph& h) { return is_kl_sparse(h, {6, 2}); });
  std::set<std::string> forms;
  for (std::size_t i = 0; i < sparse.size(); ++i) {
    EXPECT_TRUE(is_kl_sparse(sparse[i], {6, 2}));
    EXPECT_TRUE(forms.insert(canonical_form(sparse[i])).second);
    if (i > 0) EXPECT_LE(sparse[i - 1].edge_count(), sparse[i].edge_count());
  }
  EXPECT_FALSE(is_covering(hg(4, {{0, 1, 2}})));
  EXPECT_TRUE(is_covering(hg(4, {{0, 1, 2}, {0, 1, 3}})));
}

}  // namespace
