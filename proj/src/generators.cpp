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

#include "metrichg/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace metrichg {

namespace {

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) out.push_back(Triple{a, b, c});
    }
  }
  return out;
}

template <class Keep>
Hypergraph random_sparse(int n, int target_m, std::uint64_t seed, Keep keep) {
  if (n < 3) throw std::invalid_argument("random hypergraphs need n >= 3");
  auto order = all_triples(n);
  std::mt19937_64 rng(seed);
  // Fisher-Yates by hand: std::shuffle differs between standard libraries.
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  std::vector<Triple> edges;
  for (const auto& t : order) {
    if (target_m >= 0 && int(edges.size()) >= target_m) break;
    edges.push_back(t);
    if (!keep(Hypergraph(n, edges))) edges.pop_back();
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace

Hypergraph fano() { return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}); }

Hypergraph steiner_triple_system(int order) {
  if (order == 7) return fano();
  if (order != 9) throw std::invalid_argument("unsupported Steiner triple system order " + std::to_string(order));
  std::vector<Triple> lines;
  for (const auto& t : all_triples(9)) {
    // Three points of AG(2,3) are collinear iff their coordinates sum to 0 mod 3.
    const int x = t.a / 3 + t.b / 3 + t.c / 3;
    const int y = t.a % 3 + t.b % 3 + t.c % 3;
    if (x % 3 == 0 && y % 3 == 0) lines.push_back(t);
  }
  return Hypergraph(9, std::move(lines));
}

Hypergraph complete(int n) { return Hypergraph(n, all_triples(n)); }

Hypergraph complete_minus(int n, std::span<const Triple> drop) {
  std::set<Triple> dropped;
  for (const auto& t : drop) {
    const Triple s = Triple::of(t.a, t.b, t.c);
    if (s.a < 0 || s.c >= n) throw std::invalid_argument("dropped triple " + to_string(s) + " is out of range");
    if (!dropped.insert(s).second) throw std::invalid_argument("triple " + to_string(s) + " dropped twice");
  }
  std::vector<Triple> edges;
  for (const auto& t : all_triples(n)) {
    if (!dropped.contains(t)) edges.push_back(t);
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_62_sparse(int n, int target_m, std::uint64_t seed) {
  return random_sparse(n, target_m, seed, [](const Hypergraph& h) { return is_kl_sparse(h, {6, 2}); });
}

Hypergraph random_f0_sparse(int n, std::uint64_t seed, int target_m) {
  return random_sparse(n, target_m, seed, [](const Hypergraph& h) { return is_f_sparse(h); });
}

}  // namespace metrichg
