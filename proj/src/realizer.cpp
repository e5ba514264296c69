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

#include "metrichg/realizer.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "metrichg/catalog.hpp"

namespace metrichg {

namespace {

bool verified(const FiniteMetric& m, const Hypergraph& h) { return !validate_metric(m) && realizes(m, h); }

std::string describe(std::span<const Vertex> vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices[i]);
  }
  return out + "}";
}

std::string describe(VertexSet s) { return describe(to_vertices(s)); }

void require_valid(const Hypergraph& h) {
  if (auto bad = validate(h)) throw std::invalid_argument(bad->message);
}

void require_62sparse(const Hypergraph& h) {
  if (auto bad = find_kl_violation(h, {6, 2})) {
    const int count = induced_edge_count(h, to_mask(*bad));
    throw PreconditionError(
        "not (6,2)-sparse: " + describe(*bad) + " induces " + std::to_string(count) + " edges", *bad);
  }
}

void require_f0_sparse(const Hypergraph& h) {
  if (auto bad = find_f_violation(h)) {
    const int count = induced_edge_count(h, to_mask(*bad));
    throw PreconditionError("not f0-sparse: " + describe(*bad) + " induces " + std::to_string(count) +
                                " edges, more than " + std::to_string(f0(int(bad->size()))),
                            *bad);
  }
}

void require_linear(const Hypergraph& h) {
  if (auto pair = find_overlapping_pair(h)) {
    throw PreconditionError("edges " + to_string(pair->first) + " and " + to_string(pair->second) +
                                " share two vertices",
                            to_vertices(pair->first.mask() | pair->second.mask()), pair);
  }
}

FiniteMetric realize_small(const Hypergraph& h) {
  if (h.empty()) return FiniteMetric(h.n());
  if (auto m = rho0_values(h, auto_labeling(h)); m && verified(*m, h)) return *m;
  if (auto m = alphabet_search(h, default_alphabet())) return *m;
  throw VerificationError("no metric over {1, 3/2, 2} realizes a " + std::to_string(h.n()) + "-vertex input");
}

// Components with two or more vertices, plus one block holding every isolated
// vertex, ordered by smallest vertex.
std::vector<std::vector<Vertex>> blocks_of(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> isolated;
  for (auto& part : components(h)) {
    if (part.size() == 1) {
      isolated.push_back(part.front());
    } else {
      blocks.push_back(std::move(part));
    }
  }
  if (!isolated.empty()) blocks.push_back(std::move(isolated));
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return blocks;
}

// Joins the block metrics with disjoint_union_metric and maps them back to the
// original ids.
FiniteMetric join_blocks(const std::vector<std::vector<Vertex>>& blocks, const std::vector<FiniteMetric>& parts) {
  std::vector<Vertex> order;
  std::optional<FiniteMetric> joined;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    joined = joined ? disjoint_union_metric(*joined, parts[i]) : parts[i];
    order.insert(order.end(), blocks[i].begin(), blocks[i].end());
  }
  return relabel(*joined, order);
}

VertexSet edge_mask_support(const Hypergraph& h, std::uint64_t edges) {
  VertexSet out = 0;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (edges >> i & 1) out |= h.edges()[i].mask();
  }
  return out;
}

bool obstructed(const Hypergraph& h, std::uint64_t edges) {
  std::vector<VertexSet> masks;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (edges >> i & 1) masks.push_back(h.edges()[i].mask());
  }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (popcount(masks[i] & masks[j]) >= 2) return true;
      for (std::size_t k = j + 1; k < masks.size(); ++k) {
        if (popcount(masks[i] | masks[j] | masks[k]) <= 6) return true;
      }
    }
  }
  return false;
}

bool lex_less(VertexSet x, VertexSet y) {
  if (popcount(x) != popcount(y)) return popcount(x) < popcount(y);
  return to_vertices(x) < to_vertices(y);
}

struct Candidate {
  VertexSet support;
  std::uint64_t edges;
  int edge_count;
  std::string name;
};

// Mask-level version of check_decomposition for the search.
bool quick_valid(const Hypergraph& h, std::span<const Candidate* const> cores) {
  std::uint64_t removed = 0;
  VertexSet all = 0;
  for (const auto* c : cores) {
    removed |= c->edges;
    all |= c->support;
  }
  if (cores.size() == 2 && popcount(cores[0]->support & cores[1]->support) > 1) return false;
  const bool touching = cores.size() == 2 && (cores[0]->support & cores[1]->support) != 0;
  std::vector<Triple> rest;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (removed >> i & 1) continue;
    const VertexSet e = h.edges()[i].mask();
    for (const auto* c : cores) {
      if (popcount(e & c->support) > 1) return false;
    }
    if (touching && popcount(e & all) > 1) return false;
    rest.push_back(h.edges()[i]);
  }
  const Hypergraph remainder(h.n(), std::move(rest));
  return is_linear(remainder) && is_kl_sparse(remainder, {6, 2});
}

Decomposition make_decomposition(const Hypergraph& h, std::span<const Candidate* const> cores) {
  Decomposition d;
  std::uint64_t removed = 0;
  for (const auto* c : cores) {
    Core core;
    core.support = to_vertices(c->support);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      if (c->edges >> i & 1) core.edges.push_back(h.edges()[i]);
    }
    core.catalog_name = c->name;
    d.cores.push_back(std::move(core));
    removed |= c->edges;
  }
  std::vector<Triple> rest;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (!(removed >> i & 1)) rest.push_back(h.edges()[i]);
  }
  d.remainder = Hypergraph(h.n(), std::move(rest));
  return d;
}

// Stitches the core metrics into rho0 of the remainder; core pairs win.
std::optional<FiniteMetric> realize_decomposition(const Hypergraph& h, const Decomposition& d, const Catalog* catalog) {
  std::vector<FiniteMetric> core_metrics;
  VertexSet core_vertices = 0;
  int core_pairs = 0;
  for (const auto& core : d.cores) {
    const auto local = induced(h, core.support);
    std::optional<FiniteMetric> m;
    if (catalog) {
      if (auto match = catalog->match_core(local.graph)) m = std::move(match->metric);
    }
    if (!m && local.graph.n() <= kMaxAlphabetVertices) m = alphabet_search(local.graph, default_alphabet());
    if (!m) return std::nullopt;
    core_metrics.push_back(std::move(*m));
    core_vertices |= to_mask(core.support);
    const int size = int(core.support.size());
    core_pairs += size * (size - 1) / 2;
  }

  auto build = [&](const EdgeLabeling& labels) {
    FiniteMetric m = *rho0_values(d.remainder, labels);
    for (std::size_t c = 0; c < d.cores.size(); ++c) {
      const auto& x = d.cores[c].support;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) m.set(x[i], x[j], core_metrics[c](Vertex(i), Vertex(j)));
      }
    }
    return m;
  };

  // Labels on remainder edges touching a core, auto labels first.
  constexpr std::size_t kMaxRelabeled = 6;
  EdgeLabeling labels = auto_labeling(d.remainder);
  std::vector<Triple> touching;
  for (const auto& e : d.remainder.edges()) {
    if ((e.mask() & core_vertices) && touching.size() < kMaxRelabeled) touching.push_back(e);
  }
  std::vector<int> choice(touching.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < touching.size(); ++i) labels[touching[i]] = touching[i].vertices()[choice[i]];
    FiniteMetric m = build(labels);
    if (verified(m, h)) return m;
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == 2) choice[i++] = 0;
    if (i == choice.size()) break;
    ++choice[i];
  }

  constexpr int kMaxSearchedPairs = 21;
  if (core_pairs > kMaxSearchedPairs) return std::nullopt;
  const FiniteMetric base = build(auto_labeling(d.remainder));
  const int n = h.n();
  PairDomains domains(std::size_t(n) * (n - 1) / 2);
  for (Vertex y = 1; y < n; ++y) {
    for (Vertex x = 0; x < y; ++x) domains[pair_index(x, y)] = {base(x, y)};
  }
  for (const auto& core : d.cores) {
    for (std::size_t i = 0; i < core.support.size(); ++i) {
      for (std::size_t j = i + 1; j < core.support.size(); ++j) {
        domains[pair_index(core.support[i], core.support[j])] = default_alphabet();
      }
    }
  }
  std::optional<FiniteMetric> found;
  for_each_domain_metric(h, domains, [&](const FiniteMetric& m) {
    found = m;
    return false;
  });
  return found;
}

std::string describe_cores(const Decomposition& d) {
  std::string out;
  for (const auto& core : d.cores) {
    if (!out.empty()) out += " + ";
    out += describe(core.support);
  }
  return out.empty() ? "no cores" : "cores " + out;
}

}  // namespace

EdgeLabeling auto_labeling(const Hypergraph& h) {
  EdgeLabeling labels;
  for (const auto& e : h.edges()) labels[e] = e.a;
  return labels;
}

std::optional<FiniteMetric> rho0_values(const Hypergraph& h, const EdgeLabeling& labeling) {
  const int n = h.n();
  FiniteMetric m(n, Rational(3, 2));
  std::vector<char> fixed(std::size_t(n) * n, 0);
  for (const auto& e : h.edges()) {
    auto it = labeling.find(e);
    if (it == labeling.end() || !e.contains(it->second)) {
      throw std::invalid_argument("labeling has no vertex of edge " + to_string(e));
    }
    const Vertex label = it->second;
    const auto v = e.vertices();
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const Rational value = v[i] == label || v[j] == label ? Rational(1) : Rational(2);
        char& seen = fixed[std::size_t(v[i]) * n + v[j]];
        if (seen && m(v[i], v[j]) != value) return std::nullopt;
        seen = 1;
        m.set(v[i], v[j], value);
      }
    }
  }
  return m;
}

FiniteMetric rho0_construct(const Hypergraph& h) { return rho0_construct(h, auto_labeling(h)); }

FiniteMetric rho0_construct(const Hypergraph& h, const EdgeLabeling& labeling) {
  require_valid(h);
  require_linear(h);
  require_62sparse(h);
  FiniteMetric m = *rho0_values(h, labeling);
  if (!verified(m, h)) throw VerificationError("rho0 does not realize the input");
  return m;
}

FiniteMetric realize_62sparse(const Hypergraph& h) {
  require_valid(h);
  require_62sparse(h);
  FiniteMetric m;
  if (h.n() <= 5) {
    m = realize_small(h);
  } else {
    const auto blocks = blocks_of(h);
    std::vector<FiniteMetric> parts;
    for (const auto& block : blocks) {
      const auto local = induced(h, block);
      if (local.graph.empty()) {
        parts.emplace_back(local.graph.n());
      } else if (local.graph.n() >= 6) {
        if (auto pair = find_overlapping_pair(local.graph)) {
          throw VerificationError("connected (6,2)-sparse component on " + std::to_string(block.size()) +
                                  " vertices has two edges sharing two vertices");
        }
        parts.push_back(rho0_construct(local.graph));
      } else {
        parts.push_back(realize_small(local.graph));
      }
    }
    m = join_blocks(blocks, parts);
  }
  if (!verified(m, h)) throw VerificationError("constructed metric does not realize the input");
  return m;
}

std::vector<VertexSet> candidate_core_supports(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  if (m > 64) throw SizeLimitError("core search supports at most 64 edges");
  constexpr int kMaxCoreEdges = 6;
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> level;
  for (std::size_t i = 0; i < m; ++i) {
    level.push_back(std::uint64_t{1} << i);
    seen.insert(level.back());
  }
  std::set<VertexSet> supports;
  for (int size = 1; size <= kMaxCoreEdges && !level.empty(); ++size) {
    std::vector<std::uint64_t> next;
    for (auto s : level) {
      const VertexSet support = edge_mask_support(h, s);
      if (size >= 2 && obstructed(h, s)) supports.insert(support);
      if (size == kMaxCoreEdges) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (s >> j & 1 || !(h.edges()[j].mask() & support)) continue;
        const auto t = s | std::uint64_t{1} << j;
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    level = std::move(next);
  }
  std::vector<VertexSet> out(supports.begin(), supports.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<std::string> check_decomposition(const Hypergraph& h, const Decomposition& d) {
  std::vector<std::string> out;
  if (d.cores.size() > 2) out.push_back(std::to_string(d.cores.size()) + " cores, more than two");
  std::set<Triple> removed;
  std::vector<VertexSet> supports;
  for (const auto& core : d.cores) {
    const VertexSet x = to_mask(core.support);
    supports.push_back(x);
    std::vector<Triple> inside;
    for (const auto& e : h.edges()) {
      if ((e.mask() & x) == e.mask()) inside.push_back(e);
    }
    auto edges = core.edges;
    std::sort(edges.begin(), edges.end());
    if (edges != inside) out.push_back("core edges on " + describe(x) + " are not the induced edge set");
    removed.insert(inside.begin(), inside.end());
  }
  for (std::size_t i = 0; i < supports.size(); ++i) {
    for (std::size_t j = i + 1; j < supports.size(); ++j) {
      if (const int shared = popcount(supports[i] & supports[j]); shared > 1) {
        out.push_back("cores " + describe(supports[i]) + " and " + describe(supports[j]) + " share " +
                      std::to_string(shared) + " vertices");
      }
    }
  }
  std::vector<Triple> rest;
  for (const auto& e : h.edges()) {
    if (!removed.contains(e)) rest.push_back(e);
  }
  if (Hypergraph(h.n(), rest) != d.remainder) out.push_back("remainder is not H minus the core edges");
  if (auto bad = find_kl_violation(d.remainder, {6, 2})) {
    out.push_back("remainder is not (6,2)-sparse: " + describe(*bad) + " induces " +
                  std::to_string(induced_edge_count(d.remainder, to_mask(*bad))) + " edges");
  }
  if (auto pair = find_overlapping_pair(d.remainder)) {
    out.push_back("remainder edges " + to_string(pair->first) + " and " + to_string(pair->second) +
                  " share two vertices");
  }
  const bool touching = supports.size() == 2 && (supports[0] & supports[1]) != 0;
  for (const auto& e : d.remainder.edges()) {
    if (touching && popcount(e.mask() & (supports[0] | supports[1])) > 1) {
      out.push_back("remainder edge " + to_string(e) + " meets the union of the touching cores in more than one vertex");
    }
    for (const auto x : supports) {
      if (popcount(e.mask() & x) > 1) {
        out.push_back("remainder edge " + to_string(e) + " meets core " + describe(x) + " in more than one vertex");
      }
    }
  }
  return out;
}

std::vector<Decomposition> find_decompositions(const Hypergraph& h, const DecompositionOptions& options) {
  std::vector<Candidate> candidates;
  for (const VertexSet x : candidate_core_supports(h)) {
    Candidate c{x, 0, 0, {}};
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      if ((h.edges()[i].mask() & x) == h.edges()[i].mask()) {
        c.edges |= std::uint64_t{1} << i;
        ++c.edge_count;
      }
    }
    if (options.proper_cores_only && std::size_t(c.edge_count) == h.edge_count()) continue;
    if (options.catalog) {
      const auto local = induced(h, to_vertices(x));
      if (const auto* entry = options.catalog->find(local.graph)) c.name = entry->name;
    }
    if (options.require_catalog && c.name.empty()) continue;
    candidates.push_back(std::move(c));
  }

  struct Option {
    std::vector<const Candidate*> cores;
    int unmatched = 0;
    int removed = 0;
    int support = 0;
  };
  std::vector<Option> options_found;
  auto consider = [&](std::vector<const Candidate*> cores) {
    if (!quick_valid(h, cores)) return;
    Option o;
    for (const auto* c : cores) {
      o.unmatched += c->name.empty() ? 1 : 0;
      o.removed += c->edge_count;
      o.support += popcount(c->support);
    }
    o.cores = std::move(cores);
    options_found.push_back(std::move(o));
  };
  consider({});
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    consider({&candidates[i]});
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (popcount(candidates[i].support & candidates[j].support) <= 1) consider({&candidates[i], &candidates[j]});
    }
  }
  auto key = [](const Option& o) {
    std::vector<std::vector<Vertex>> lists;
    for (const auto* c : o.cores) lists.push_back(to_vertices(c->support));
    return std::make_tuple(o.unmatched, o.removed, o.support, lists);
  };
  std::stable_sort(options_found.begin(), options_found.end(),
                   [&](const Option& x, const Option& y) { return key(x) < key(y); });
  if (options.limit && options_found.size() > options.limit) options_found.resize(options.limit);

  std::vector<Decomposition> out;
  for (const auto& o : options_found) out.push_back(make_decomposition(h, o.cores));
  return out;
}

Decomposition decompose_f0(const Hypergraph& h, const Catalog* catalog) {
  require_valid(h);
  require_f0_sparse(h);
  auto found = find_decompositions(h, {catalog, false, false, 1});
  if (found.empty()) {
    std::vector<std::string> diagnostics;
    for (const VertexSet x : candidate_core_supports(h)) {
      diagnostics.push_back("candidate core " + describe(x) + " with " + std::to_string(induced_edge_count(h, x)) +
                            " edges");
    }
    if (diagnostics.empty()) diagnostics.push_back("no candidate cores");
    throw DecompositionError("no decomposition with at most two cores meets every requirement", diagnostics);
  }
  Decomposition d = std::move(found.front());
  d.discrepancies = check_decomposition(h, d);
  if (catalog) {
    for (const auto& core : d.cores) {
      if (core.catalog_name.empty()) {
        d.discrepancies.push_back("core on " + describe(core.support) + " is not a copy of any catalog entry");
      }
    }
  }
  return d;
}

Realization realize_f0_report(const Hypergraph& h, const F0Options& options) {
  require_valid(h);
  require_f0_sparse(h);
  Realization out;
  if (is_kl_sparse(h, {6, 2}) && (h.n() <= 5 || is_linear(h))) {
    out.metric = realize_62sparse(h);
    out.method = "62sparse";
    return out;
  }

  const auto decompositions = find_decompositions(h, {options.catalog});
  if (decompositions.empty()) out.log.push_back("no decomposition with at most two cores");
  for (const auto& d : decompositions) {
    if (auto m = realize_decomposition(h, d, options.catalog)) {
      out.metric = std::move(*m);
      out.method = "decomposition";
      out.decomposition = d;
      if (options.catalog) {
        for (const auto& core : d.cores) {
          if (core.catalog_name.empty()) {
            out.decomposition->discrepancies.push_back("core on " + describe(core.support) +
                                                       " is not a copy of any catalog entry");
          }
        }
      }
      return out;
    }
    out.log.push_back("decomposition with " + describe_cores(d) + " did not verify");
  }

  const auto blocks = blocks_of(h);
  if (blocks.size() > 1) {
    std::vector<FiniteMetric> parts;
    for (const auto& block : blocks) {
      const auto local = induced(h, block);
      if (local.graph.empty()) {
        parts.emplace_back(local.graph.n());
        continue;
      }
      auto sub = realize_f0_report(local.graph, options);
      out.oracle_fallbacks += sub.oracle_fallbacks;
      for (auto& line : sub.log) out.log.push_back("component " + describe(block) + ": " + line);
      parts.push_back(std::move(sub.metric));
    }
    FiniteMetric m = join_blocks(blocks, parts);
    if (verified(m, h)) {
      out.metric = std::move(m);
      out.method = "components";
      return out;
    }
    out.log.push_back("component split did not verify");
  }

  if (h.n() > options.oracle_budget.max_vertices) {
    throw VerificationError("no construction realizes the input and it exceeds the oracle cap");
  }
  out.log.push_back("oracle fallback");
  auto verdict = decide_metric(h, options.oracle_budget);
  if (auto* metric = std::get_if<MetricVerdict>(&verdict)) {
    out.metric = std::move(metric->witness);
    out.method = "oracle";
    ++out.oracle_fallbacks;
    return out;
  }
  if (auto* over = std::get_if<BudgetExceededVerdict>(&verdict)) {
    throw OracleBudgetError("oracle fallback exceeded its budget: " + over->limit);
  }
  throw VerificationError("the oracle reports this f0-sparse input as nonmetric");
}

FiniteMetric realize_f0(const Hypergraph& h, const F0Options& options) {
  return realize_f0_report(h, options).metric;
}

}  // namespace metrichg
