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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are checked against wall-clock time.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "metrichg/enumerate.hpp"
#include "metrichg/generators.hpp"
#include "metrichg/io.hpp"
#include "metrichg/oracle.hpp"
#include "metrichg/realizer.hpp"
#include "support/oracles.hpp"

namespace {

namespace fs = std::filesystem;
using namespace metrichg;
using Clock = std::chrono::steady_clock;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(METRICHG_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  Run r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("metrichg_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string stage(const Hypergraph& h, const std::string& name) {
  const fs::path p = work_dir() / name;
  write_file(p, format_hg(h));
  return p.string();
}

// realize through the CLI, then check the metric independently.
bool cli_realizes(const Hypergraph& h, const std::string& mode, const std::string& name, int* fallbacks,
                  std::string* why) {
  std::string args = "--json realize --mode " + mode + " ";
  if (mode == "f0") args += "--catalog " + std::string(METRICHG_CATALOG) + " ";
  const Run r = run(args + stage(h, name));
  if (r.code != 0) {
    *why = name + ": exit " + std::to_string(r.code);
    return false;
  }
  const Json j = Json::parse(r.out);
  const FiniteMetric m = metric_from_json(j["result"]["metric"]);
  if (fallbacks) *fallbacks += j["result"]["oracle_fallbacks"].get<int>();
  if (!oracles::realizes(m, h) || betweenness_hypergraph(m) != h) {
    *why = name + ": roundtrip differs";
    return false;
  }
  return true;
}

Outcome sparse_suite() {
  int count = 0;
  std::string why;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& h : enumerate_up_to_isomorphism(n, 100, [](const Hypergraph& g) { return is_kl_sparse(g, {6, 2}); })) {
      if (!cli_realizes(h, "62", "c1.hg", nullptr, &why)) return {false, why};
      ++count;
    }
  }
  const int exhaustive = count;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 6 + int(seed % 7);
    const Hypergraph h = random_62_sparse(n, int(seed % (2 * n)) + 1, seed);
    if (!cli_realizes(h, "62", "c1.hg", nullptr, &why)) return {false, why + " (seed " + std::to_string(seed) + ")"};
    ++count;
  }
  return {true, std::to_string(exhaustive) + " classes with n <= 6 and 200 random graphs with n <= 12 roundtrip"};
}

Outcome f0_suite() {
  int count = 0, fallbacks = 0;
  std::string why;
  for (int n = 3; n <= 8; ++n) {
    for (const auto& h : enumerate_up_to_isomorphism(n, 100, [](const Hypergraph& g) { return is_f_sparse(g); })) {
      if (!is_covering(h)) continue;
      if (!cli_realizes(h, "f0", "c2.hg", &fallbacks, &why)) return {false, why};
      ++count;
    }
  }
  return {fallbacks == 0, std::to_string(count) + " covering classes with n <= 8 roundtrip; oracle fallbacks: " +
                              std::to_string(fallbacks)};
}

struct Decided {
  int code = -1;
  Json result;
  double seconds = 0;
};

Decided cli_decide(const Hypergraph& h, const std::string& name, const std::string& extra = "") {
  const auto start = Clock::now();
  const Run r = run("--json decide " + extra + " " + stage(h, name));
  Decided d;
  d.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  d.code = r.code;
  if (!r.out.empty()) d.result = Json::parse(r.out)["result"];
  return d;
}

Outcome steiner_anchors() {
  const Decided f = cli_decide(fano(), "fano.hg");
  const Decided s = cli_decide(steiner_triple_system(9), "sts9.hg");
  std::ostringstream detail;
  detail << "Fano " << f.result.value("verdict", "?") << " " << f.result["stats"].value("branches_covered", "?")
         << "/" << f.result["stats"].value("branch_space", "?") << " in " << f.seconds << " s; STS(9) "
         << s.result.value("verdict", "?") << " " << s.result["stats"].value("branches_covered", "?") << "/"
         << s.result["stats"].value("branch_space", "?") << " in " << s.seconds << " s";
  const bool pass = f.result.value("verdict", "") == "nonmetric" &&
                    f.result["stats"].value("branches_covered", "") == "2187" && f.seconds < 10 &&
                    s.result.value("verdict", "") == "nonmetric" &&
                    s.result["stats"].value("branch_space", "") == "531441" &&
                    s.result["stats"].value("branches_covered", "") == "531441" && s.seconds < 300;
  return {pass, detail.str()};
}

Outcome density_bound() {
  const std::vector<Triple> drop{Triple::of(3, 4, 5)};
  const Hypergraph h = complete_minus(6, drop);
  const Decided d = cli_decide(h, "k6minus.hg", "--max-seconds 900");
  std::ostringstream detail;
  detail << h.edge_count() << " edges: " << d.result.value("verdict", "?") << " after "
         << d.result["stats"].value("nodes", 0L) << " nodes in " << d.seconds << " s";
  return {d.result.value("verdict", "") == "nonmetric" && d.seconds < 900, detail.str()};
}

Outcome connected_linearity() {
  long connected = 0, overlapping = 0;
  for (int n = 6; n <= 8; ++n) {
    for (const auto& h : enumerate_up_to_isomorphism(n, 100, [](const Hypergraph& g) { return is_kl_sparse(g, {6, 2}); })) {
      if (!is_covering(h) || components(h).size() != 1) continue;
      ++connected;
      if (find_overlapping_pair(h) || !oracles::kl_sparse(h, 6, 2)) ++overlapping;
    }
  }
  return {connected > 0 && overlapping == 0, std::to_string(connected) + " connected classes with 6 <= n <= 8, " +
                                                 std::to_string(overlapping) + " with two edges sharing two vertices"};
}

Outcome union_property() {
  std::mt19937_64 rng(6);
  int bad = 0;
  for (int pair = 0; pair < 100; ++pair) {
    const Hypergraph a = random_62_sparse(3 + int(rng() % 8), int(rng() % 8), rng());
    const Hypergraph b = random_62_sparse(3 + int(rng() % 8), int(rng() % 8), rng());
    const FiniteMetric m = disjoint_union_metric(realize_62sparse(a), realize_62sparse(b));
    const Hypergraph u = disjoint_union(a, b);
    if (validate_metric(m) || !oracles::realizes(m, u) || betweenness_hypergraph(m) != u) ++bad;
  }
  return {bad == 0, "100 pairs, " + std::to_string(bad) + " failures"};
}

Outcome oracle_consistency() {
  int classes = 0, alphabet = 0, violations = 0, witnesses = 0;
  for (int n : {4, 5}) {
    for (const auto& h : oracles::all_classes(n)) {
      ++classes;
      const auto verdict = decide_metric(h);
      if (std::holds_alternative<BudgetExceededVerdict>(verdict)) ++violations;
      if (const auto* m = std::get_if<MetricVerdict>(&verdict)) {
        ++witnesses;
        if (!oracles::realizes(m->witness, h)) ++violations;
      }
      if (alphabet_search(h, default_alphabet())) {
        ++alphabet;
        if (!std::holds_alternative<MetricVerdict>(verdict)) ++violations;
      }
    }
  }
  std::ostringstream detail;
  detail << classes << " classes, " << alphabet << " realized over {1,3/2,2}, " << witnesses << " oracle witnesses, "
         << violations << " violations";
  return {violations == 0 && classes == 39, detail.str()};
}

Outcome catalog_shape() {
  const fs::path out = work_dir() / "catalog.json";
  const Run r = run("catalog --build 9 -o " + out.string());
  const Catalog c = catalog_from_json(Json::parse(read_file(out)));
  std::vector<int> counts;
  bool alphabet = true;
  for (const auto& e : c.entries()) {
    counts.push_back(e.core.n());
    for (const Rational& d : distance_values(e.metric)) {
      alphabet = alphabet && (d == 1 || d == Rational(3, 2) || d == 2);
    }
  }
  const bool matches = counts == expected_core_vertex_counts(9);
  std::ostringstream detail;
  detail << c.size() << " cores with vertex counts (";
  for (std::size_t i = 0; i < counts.size(); ++i) detail << (i ? "," : "") << counts[i];
  detail << "), exit " << r.code;
  if (matches) return {r.code == 0 && alphabet, detail.str()};
  // A mismatch has to come with the discrepancy report and its witnesses.
  const bool reported = r.code == 4 && r.out.find("DISCREPANCY") != std::string::npos &&
                        r.out.find("splits as") != std::string::npos;
  detail << (reported ? "; discrepancy reported with witness dump" : "; mismatch NOT reported");
  return {reported && alphabet, detail.str()};
}

Outcome scaling() {
  std::mt19937_64 rng(9);
  int witnesses = 0, bad = 0;
  for (std::uint64_t seed = 0; witnesses < 50; ++seed) {
    const Hypergraph h = random_f0_sparse(4 + int(seed % 5), rng(), 1 + int(seed % 4));
    const auto v = decide_metric(h);
    const auto* m = std::get_if<MetricVerdict>(&v);
    if (!m) continue;
    ++witnesses;
    for (const Rational& f : {Rational(2), Rational(1, 3)}) {
      const FiniteMetric s = scaled(m->witness, f);
      if (validate_metric(s) || betweenness_hypergraph(s) != h || !oracles::realizes(s, h)) ++bad;
    }
  }
  return {bad == 0, std::to_string(witnesses) + " witnesses scaled by 2 and 1/3, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"(6,2)-sparse realization roundtrip", sparse_suite},
      {"f0-sparse realization roundtrip", f0_suite},
      {"Steiner systems are nonmetric", steiner_anchors},
      {"complete minus one edge at n=6 is nonmetric", density_bound},
      {"connected (6,2)-sparse graphs are linear", connected_linearity},
      {"disjoint union of metrics", union_property},
      {"oracle agrees with alphabet search", oracle_consistency},
      {"catalog expected shape", catalog_shape},
      {"scaling invariance", scaling},
  };
  const std::array<double, 9> limits{120, 600, 300, 900, 120, 60, 300, 1800, 60};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds > limits[i]) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(int(limits[i])) + " s limit";
    }
    failed += o.pass ? 0 : 1;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " [" << criteria[i].first << "] "
              << o.detail << " (" << seconds << " s)" << std::endl;
  }
  fs::remove_all(work_dir());
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
