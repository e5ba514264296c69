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

#include <random>
#include <set>

#include "metrichg/catalog.hpp"
#include "metrichg/enumerate.hpp"
#include "metrichg/generators.hpp"
#include "metrichg/realizer.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace metrichg;
using fixtures::hg;
using fixtures::q;

const Catalog& catalog() {
  static const Catalog c = enumerate_f0_cores(7).catalog;
  return c;
}

TEST(Rho0, SingleEdge) {
  const Hypergraph h = hg(3, {{0, 1, 2}});
  const FiniteMetric m = rho0_construct(h, EdgeLabeling{{Triple::of(0, 1, 2), 0}});
  EXPECT_EQ(m(0, 1), q(1));
  EXPECT_EQ(m(0, 2), q(1));
  EXPECT_EQ(m(1, 2), q(2));
  EXPECT_TRUE(oracles::realizes(m, h));
}

TEST(Rho0, TwoDisjointEdges) {
  const Hypergraph h = hg(6, {{0, 1, 2}, {3, 4, 5}});
  const FiniteMetric m = rho0_construct(h, EdgeLabeling{{Triple::of(0, 1, 2), 0}, {Triple::of(3, 4, 5), 3}});
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) EXPECT_EQ(m(a, b), q(3, 2));
  }
  EXPECT_TRUE(oracles::realizes(m, h));
}

TEST(Rho0, Preconditions) {
  try {
    rho0_construct(hg(4, {{0, 1, 2}, {0, 1, 3}}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_TRUE(e.overlap().has_value());
  }
  try {
    rho0_construct(fano());
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.witness().size(), 6u);
  }
  EXPECT_FALSE(rho0_values(hg(4, {{0, 1, 2}, {0, 1, 3}}),
                           EdgeLabeling{{Triple::of(0, 1, 2), 2}, {Triple::of(0, 1, 3), 0}})
                   .has_value());
}

TEST(Rho0, AnyLabelingOfLinearSparseGraphs) {
  std::mt19937_64 rng(51);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 6 + int(rng() % 7);
    const Hypergraph h = random_62_sparse(n, n, rng());
    if (!is_linear(h)) continue;
    EdgeLabeling labels;
    for (const auto& e : h.edges()) labels[e] = e.vertices()[rng() % 3];
    const FiniteMetric m = rho0_construct(h, labels);
    EXPECT_TRUE(oracles::realizes(m, h));
    for (const Rational& d : distance_values(m)) EXPECT_TRUE(d == q(1) || d == q(3, 2) || d == q(2));
    ++checked;
  }
  EXPECT_GT(checked, 60);
}

TEST(Realize62, Examples) {
  try {
    realize_62sparse(fano());
    FAIL();
  } catch (const PreconditionError& e) {
    ASSERT_EQ(e.witness().size(), 6u);
    EXPECT_GE(oracles::count_inside(fano(), e.witness()), 3);
  }
  const FiniteMetric m = realize_62sparse(hg(4, {{0, 1, 2}, {0, 1, 3}}));
  EXPECT_EQ(m(0, 1), q(1));
  EXPECT_EQ(m(0, 2), q(1));
  EXPECT_EQ(m(0, 3), q(1));
  EXPECT_EQ(m(1, 2), q(2));
  EXPECT_EQ(m(1, 3), q(2));
  EXPECT_EQ(m(2, 3), q(3, 2));
  EXPECT_EQ(realize_62sparse(Hypergraph(5)), FiniteMetric(5));
}

TEST(Realize62, ConnectedSparseGraphsOnSixOrMoreVerticesAreLinear) {
  for (int n = 6; n <= 7; ++n) {
    const auto all = enumerate_up_to_isomorphism(n, 100, [](const Hypergraph& h) { return is_kl_sparse(h, {6, 2}); });
    for (const auto& h : all) {
      if (is_covering(h) && components(h).size() == 1) EXPECT_TRUE(is_linear(h));
    }
  }
}

TEST(Realize62, RandomRoundtrip) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + int(rng() % 10);
    const Hypergraph h = random_62_sparse(n, int(rng() % (n + 1)), rng());
    EXPECT_TRUE(oracles::realizes(realize_62sparse(h), h));
  }
}

TEST(Decompose, NoCoresForLinearSparse) {
  const Hypergraph h = hg(5, {{0, 1, 2}, {2, 3, 4}});
  const Decomposition d = decompose_f0(h);
  EXPECT_TRUE(d.cores.empty());
  EXPECT_EQ(d.remainder, h);
  EXPECT_TRUE(check_decomposition(h, d).empty());
}

TEST(Decompose, OneCore) {
  const Hypergraph h = hg(7, {{0, 1, 2}, {0, 1, 3}, {4, 5, 6}});
  const Decomposition d = decompose_f0(h, &catalog());
  ASSERT_EQ(d.cores.size(), 1u);
  EXPECT_EQ(d.cores[0].support, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(d.cores[0].catalog_name, "H4");
  EXPECT_EQ(d.remainder, hg(7, {{4, 5, 6}}));
  EXPECT_TRUE(d.discrepancies.empty());
}

TEST(Decompose, TwoDisjointCores) {
  const Hypergraph h = hg(8, {{0, 1, 2}, {0, 1, 3}, {4, 5, 6}, {4, 5, 7}});
  const Decomposition d = decompose_f0(h, &catalog());
  ASSERT_EQ(d.cores.size(), 2u);
  std::vector<Vertex> common;
  std::set_intersection(d.cores[0].support.begin(), d.cores[0].support.end(), d.cores[1].support.begin(),
                        d.cores[1].support.end(), std::back_inserter(common));
  EXPECT_TRUE(common.empty());
  EXPECT_TRUE(d.remainder.empty());
}

TEST(Decompose, Errors) {
  EXPECT_THROW(decompose_f0(fano()), PreconditionError);
  Decomposition bogus{{Core{{0, 1, 2}, {Triple::of(0, 1, 2)}, ""}, Core{{0, 1, 3}, {Triple::of(0, 1, 3)}, ""}},
                      Hypergraph(4), {}};
  EXPECT_FALSE(check_decomposition(hg(4, {{0, 1, 2}, {0, 1, 3}}), bogus).empty());
}

TEST(RealizeF0, Examples) {
  const Hypergraph h4 = hg(4, {{0, 1, 2}, {0, 1, 3}});
  EXPECT_EQ(realize_f0(h4), realize_62sparse(h4));

  const Hypergraph h = hg(7, {{0, 1, 2}, {0, 1, 3}, {4, 5, 6}});
  F0Options options;
  options.catalog = &catalog();
  const Realization r = realize_f0_report(h, options);
  EXPECT_EQ(r.oracle_fallbacks, 0);
  EXPECT_TRUE(oracles::realizes(r.metric, h));
  EXPECT_EQ(r.metric(4, 5), q(1));
  EXPECT_EQ(r.metric(4, 6), q(1));
  EXPECT_EQ(r.metric(5, 6), q(2));
  for (int a = 0; a < 4; ++a) {
    for (int b = 4; b < 7; ++b) EXPECT_EQ(r.metric(a, b), q(3, 2));
  }
  EXPECT_EQ(oracles::collinear(r.metric).size(), 3u);

  EXPECT_THROW(realize_f0(fano()), PreconditionError);
}

TEST(RealizeF0, RandomSparseGraphs) {
  F0Options options;
  options.catalog = &catalog();
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + int(rng() % 6);
    const Hypergraph h = random_f0_sparse(n, rng());
    const Realization r = realize_f0_report(h, options);
    EXPECT_TRUE(oracles::realizes(r.metric, h)) << r.method;
    EXPECT_EQ(r.oracle_fallbacks, 0);
  }
}

}  // namespace
