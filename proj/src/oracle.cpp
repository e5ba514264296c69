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

#include "metrichg/oracle.hpp"

#include <algorithm>
#include <chrono>

#include "metrichg/canonical.hpp"
#include "metrichg/lp.hpp"

namespace metrichg {

int pair_index(Vertex x, Vertex y) {
  if (x > y) std::swap(x, y);
  return y * (y - 1) / 2 + x;
}

std::vector<Triple> branch_order(const Hypergraph& h) {
  const auto& edges = h.edges();
  std::vector<std::pair<int, int>> keyed;  // (-overlap, index)
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int overlap = 0;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j) overlap += shared_vertices(edges[i], edges[j]);
    }
    keyed.emplace_back(-overlap, int(i));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Triple> out;
  for (const auto& [key, i] : keyed) out.push_back(edges[i]);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Slack variable of "d(x,y) + d(y,z) - d(x,z)" for the triple with index t and
// middle position o (0, 1, 2 for a, b, c).
struct TripleTable {
  int n;
  int pairs;
  std::vector<Triple> triples;

  explicit TripleTable(int n_) : n(n_), pairs(n_ * (n_ - 1) / 2) {
    for (int c = 2; c < n; ++c) {
      for (int b = 1; b < c; ++b) {
        for (int a = 0; a < b; ++a) triples.push_back(Triple{a, b, c});
      }
    }
  }

  static int triple_index(const Triple& t) { return t.c * (t.c - 1) * (t.c - 2) / 6 + t.b * (t.b - 1) / 2 + t.a; }

  int slack_id(const Triple& t, Vertex middle) const {
    const int o = middle == t.a ? 0 : middle == t.b ? 1 : 2;
    return pairs + 3 * triple_index(t) + o;
  }

  int variable_count() const { return pairs + 3 * int(triples.size()); }
};

class MiddleSearch {
 public:
  MiddleSearch(const Hypergraph& h, const OracleBudget& budget)
      : h_(h),
        budget_(budget),
        table_(h.n()),
        order_(branch_order(h)),
        group_(automorphisms(h, kGroupLimit)),
        start_(Clock::now()) {
    const int m = int(order_.size());
    for (int i = 0; i < m; ++i) position_[order_[i]] = i;
    power3_.resize(m + 1);
    power3_[0] = 1;
    for (int i = 1; i <= m; ++i) power3_[i] = power3_[i - 1] * 3;
    stats_.branch_space = power3_[m];
    stats_.branches_covered = 0;
  }

  MetricityVerdict run() {
    Dictionary root = root_dictionary();
    EqualityPropagator equalities(table_.pairs);
    std::optional<MetricVerdict> found;
    std::vector<int> everything(group_.size());
    for (std::size_t g = 0; g < group_.size(); ++g) everything[g] = int(g);
    const bool completed = explore(0, root, equalities, std::vector<char>(3 * order_.size(), 0), everything, found);
    stats_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (found) {
      found->stats = stats_;
      return *found;
    }
    if (!completed) return BudgetExceededVerdict{stats_, limit_hit_};
    return NonmetricVerdict{stats_, failures_};
  }

 private:
  Dictionary root_dictionary() const {
    // Nonbasic s_p = d_p - 1 >= 0; d = (1, ..., 1) is feasible.
    std::vector<int> nonbasic(table_.pairs);
    for (int p = 0; p < table_.pairs; ++p) nonbasic[p] = p;
    Dictionary dict(table_.variable_count(), nonbasic);
    std::vector<Rational> coefs(table_.pairs);
    for (const Triple& t : table_.triples) {
      const bool edge = h_.has_edge(t);
      for (Vertex y : t.vertices()) {
        auto [x, z] = t.others(y);
        std::fill(coefs.begin(), coefs.end(), Rational(0));
        coefs[pair_index(x, y)] += 1;
        coefs[pair_index(y, z)] += 1;
        coefs[pair_index(x, z)] -= 1;
        // d_xy + d_yz - d_xz >= (edge ? 0 : 1), shifted by d = 1 + s.
        dict.add_row(table_.slack_id(t, y), Rational(edge ? 1 : 0), coefs);
      }
    }
    return dict;
  }

  bool out_of_budget() {
    if (stats_.nodes >= budget_.max_nodes) {
      limit_hit_ = "node limit " + std::to_string(budget_.max_nodes);
      return true;
    }
    if (budget_.max_seconds > 0 && (stats_.nodes & 255) == 0) {
      const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
      if (elapsed > budget_.max_seconds) {
        limit_hit_ = "time limit " + std::to_string(budget_.max_seconds) + "s";
        return true;
      }
    }
    return false;
  }

  void record_failure(int depth, BranchFailure::Reason reason) {
    stats_.branches_covered += power3_[order_.size() - depth - 1];
    switch (reason) {
      case BranchFailure::Reason::EqualityPropagation:
        ++stats_.pruned_by_propagation;
        break;
      case BranchFailure::Reason::LinearProgram:
        ++stats_.pruned_by_lp;
        break;
      case BranchFailure::Reason::Symmetry:
        ++stats_.pruned_by_symmetry;
        break;
    }
    if (int(failures_.size()) < budget_.max_reasons) {
      BranchFailure f;
      f.reason = reason;
      for (int i = 0; i <= depth; ++i) f.prefix.emplace_back(order_[i], middles_[i]);
      failures_.push_back(std::move(f));
    }
  }

  int flag(const Triple& e, Vertex middle) const {
    const int slot = middle == e.a ? 0 : middle == e.b ? 1 : 2;
    return 3 * position_.at(e) + slot;
  }

  // The subtree below (order_[depth] -> y) holds no metric, so neither does
  // any image of that choice under an automorphism fixing the current prefix.
  void add_nogoods(int depth, Vertex y, const std::vector<int>& stabilizer, std::vector<char>& nogoods) const {
    const Triple e = order_[depth];
    for (int g : stabilizer) {
      const auto& map = group_[g];
      nogoods[flag(Triple::of(map[e.a], map[e.b], map[e.c]), map[y])] = 1;
    }
  }

  // Returns false when the budget ran out before the subtree was decided.
  // `nogoods` flags (edge, middle) choices known to fail below this node and
  // `stabilizer` lists the automorphisms that fix the current prefix.
  bool explore(int depth, Dictionary& dict, const EqualityPropagator& equalities, std::vector<char> nogoods,
               const std::vector<int>& stabilizer, std::optional<MetricVerdict>& found) {
    if (depth == int(order_.size())) {
      make_witness(dict, found);
      return true;
    }
    const Triple e = order_[depth];
    middles_.resize(depth + 1);
    const auto candidates = e.vertices();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (out_of_budget()) return false;
      ++stats_.nodes;
      const Vertex y = candidates[i];
      middles_[depth] = y;
      if (nogoods[flag(e, y)]) {
        record_failure(depth, BranchFailure::Reason::Symmetry);
        continue;
      }
      auto [x, z] = e.others(y);

      EqualityPropagator next_eq = equalities;
      std::vector<Rational> coefs(table_.pairs);
      coefs[pair_index(x, y)] = 1;
      coefs[pair_index(y, z)] = 1;
      coefs[pair_index(x, z)] = -1;
      if (!next_eq.add(std::move(coefs))) {
        record_failure(depth, BranchFailure::Reason::EqualityPropagation);
        add_nogoods(depth, y, stabilizer, nogoods);
        continue;
      }

      // The last candidate can reuse the parent's dictionary.
      Dictionary copy;
      Dictionary* next = &dict;
      if (i + 1 < candidates.size()) {
        copy = dict;
        next = &copy;
      }
      const long before = next->pivots();
      const bool ok = next->fix_to_zero(table_.slack_id(e, y));
      stats_.lp_pivots += next->pivots() - before;
      if (!ok) {
        record_failure(depth, BranchFailure::Reason::LinearProgram);
        add_nogoods(depth, y, stabilizer, nogoods);
        continue;
      }

      std::vector<int> child_stabilizer;
      for (int g : stabilizer) {
        const auto& map = group_[g];
        if (map[y] == y && Triple::of(map[e.a], map[e.b], map[e.c]) == e) child_stabilizer.push_back(g);
      }
      if (!explore(depth + 1, *next, next_eq, nogoods, child_stabilizer, found)) return false;
      if (found) return true;
      add_nogoods(depth, y, stabilizer, nogoods);
    }
    return true;
  }

  void make_witness(const Dictionary& dict, std::optional<MetricVerdict>& found) {
    stats_.branches_covered += 1;
    FiniteMetric witness(h_.n());
    for (int y = 1; y < h_.n(); ++y) {
      for (int x = 0; x < y; ++x) witness.set(x, y, 1 + dict.value(pair_index(x, y)));
    }
    if (!realizes(witness, h_)) throw std::logic_error("oracle witness does not realize the hypergraph");
    MetricVerdict verdict;
    verdict.witness = std::move(witness);
    for (std::size_t i = 0; i < order_.size(); ++i) verdict.assignment[order_[i]] = middles_[i];
    found = std::move(verdict);
  }

  const Hypergraph& h_;
  OracleBudget budget_;
  TripleTable table_;
  static constexpr std::size_t kGroupLimit = 20000;

  std::vector<Triple> order_;
  std::map<Triple, int> position_;
  std::vector<std::vector<Vertex>> group_;
  std::vector<mpz_class> power3_;
  std::vector<Vertex> middles_;
  std::vector<BranchFailure> failures_;
  SearchStats stats_;
  std::string limit_hit_;
  Clock::time_point start_;
};

}  // namespace

MetricityVerdict decide_metric(const Hypergraph& h, const OracleBudget& budget) {
  if (h.n() > budget.max_vertices) {
    throw SizeLimitError("oracle is capped at " + std::to_string(budget.max_vertices) + " vertices");
  }
  if (auto bad = validate(h)) throw std::invalid_argument(bad->message);
  return MiddleSearch(h, budget).run();
}

// ---------------------------------------------------------------------------
// Finite alphabet search

std::vector<Rational> default_alphabet() { return {Rational(1), Rational(3, 2), Rational(2)}; }

namespace {

class DomainSearch {
 public:
  DomainSearch(const Hypergraph& h, const PairDomains& domains, const std::function<bool(const FiniteMetric&)>& visit)
      : h_(h), n_(h.n()), domains_(domains), visit_(visit), metric_(h.n()) {
    for (int y = 1; y < n_; ++y) {
      for (int x = 0; x < y; ++x) pairs_.emplace_back(x, y);
    }
    if (domains_.size() != pairs_.size()) throw std::invalid_argument("one domain per pair is required");
    edge_.assign(std::size_t(n_) * n_ * n_, false);
    for (const auto& e : h.edges()) edge_[(std::size_t(e.a) * n_ + e.b) * n_ + e.c] = true;
  }

  long run() {
    extend(0);
    return solutions_;
  }

 private:
  // Triple (i, x, y) with i < x < y is complete once pair (x, y) is set.
  bool consistent(Vertex x, Vertex y) const {
    const Rational& xy = metric_(x, y);
    for (Vertex i = 0; i < x; ++i) {
      const Rational& ix = metric_(i, x);
      const Rational& iy = metric_(i, y);
      if (iy > ix + xy || ix > iy + xy || xy > ix + iy) return false;
      const bool collinear = iy == ix + xy || ix == iy + xy || xy == ix + iy;
      if (collinear != edge_[(std::size_t(i) * n_ + x) * n_ + y]) return false;
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == pairs_.size()) {
      ++solutions_;
      return visit_(metric_);
    }
    const auto [x, y] = pairs_[k];
    for (const auto& value : domains_[k]) {
      metric_.set(x, y, value);
      if (consistent(x, y) && !extend(k + 1)) return false;
    }
    return true;
  }

  const Hypergraph& h_;
  int n_;
  const PairDomains& domains_;
  const std::function<bool(const FiniteMetric&)>& visit_;
  FiniteMetric metric_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<bool> edge_;
  long solutions_ = 0;
};

}  // namespace

long for_each_domain_metric(const Hypergraph& h, const PairDomains& domains,
                            const std::function<bool(const FiniteMetric&)>& visit) {
  for (const auto& domain : domains) {
    for (const auto& value : domain) {
      if (sgn(value) <= 0) throw std::invalid_argument("distance values must be positive");
    }
  }
  return DomainSearch(h, domains, visit).run();
}

std::optional<FiniteMetric> alphabet_search(const Hypergraph& h, std::span<const Rational> alphabet) {
  if (h.n() > kMaxAlphabetVertices) {
    throw SizeLimitError("alphabet search is capped at " + std::to_string(kMaxAlphabetVertices) + " vertices");
  }
  std::vector<Rational> values(alphabet.begin(), alphabet.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const PairDomains domains(std::size_t(h.n()) * (h.n() - 1) / 2, values);
  std::optional<FiniteMetric> first;
  for_each_domain_metric(h, domains, [&](const FiniteMetric& m) {
    first = m;
    return false;
  });
  return first;
}

}  // namespace metrichg
