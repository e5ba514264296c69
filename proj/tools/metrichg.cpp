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

// metrichg: check sparsity, realize, decide and extract betweenness
// hypergraphs from the command line.
//
// Exit codes: 0 success/true, 1 negative verdict, 2 input error, 3 budget
// exceeded, 4 discrepancy.

#include <CLI11.hpp>

#include <chrono>
#include <span>
#include <iostream>
#include <sstream>

#include "metrichg/catalog.hpp"
#include "metrichg/generators.hpp"
#include "metrichg/io.hpp"
#include "metrichg/oracle.hpp"
#include "metrichg/realizer.hpp"

#ifndef METRICHG_VERSION
#define METRICHG_VERSION "0.0.0"
#endif
#ifndef METRICHG_CATALOG_PATH
#define METRICHG_CATALOG_PATH "data/catalog.json"
#endif

using namespace metrichg;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kBudget = 3, kDiscrepancy = 4 };

struct Outcome {
  int code = kOk;
  Json result = Json::object();
  std::string text;
};

std::string describe(std::span<const Vertex> vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) out += (i ? "," : "") + std::to_string(vertices[i]);
  return out + "}";
}

std::vector<Rational> parse_alphabet(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("empty alphabet");
  return out;
}

Catalog load_or_build_catalog(const std::string& path) {
  if (!path.empty()) return catalog_from_json(Json::parse(read_file(path)));
  return enumerate_f0_cores(9).catalog;
}

Json decomposition_to_json(const Decomposition& d) {
  Json cores = Json::array();
  for (const auto& c : d.cores) {
    Json edges = Json::array();
    for (const auto& e : c.edges) edges.push_back({e.a, e.b, e.c});
    cores.push_back({{"support", c.support}, {"edges", edges}, {"catalog_name", c.catalog_name}});
  }
  return {{"cores", cores}, {"remainder", hypergraph_to_json(d.remainder)}, {"discrepancies", d.discrepancies}};
}

Outcome cmd_check(const Hypergraph& h, const std::string& kl, bool use_f0) {
  Outcome out;
  std::optional<std::vector<Vertex>> witness;
  std::string params;
  if (use_f0) {
    params = "f0";
    witness = find_f_violation(h);
  } else {
    SparsityParams p;
    char comma = 0;
    std::istringstream in(kl);
    if (!(in >> p.k >> comma >> p.l) || comma != ',' || !in.eof() || p.k < 3 || p.l < 0) {
      throw ParseError("--kl expects 'k,l' with k >= 3 and l >= 0");
    }
    params = "(" + std::to_string(p.k) + "," + std::to_string(p.l) + ")";
    witness = find_kl_violation(h, p);
  }
  out.result = {{"params", params}, {"sparse", !witness}};
  if (witness) {
    const int count = induced_edge_count(h, to_mask(*witness));
    out.result["witness"] = *witness;
    out.result["induced_edges"] = count;
    out.code = kNegative;
    out.text = "false\nwitness " + describe(*witness) + " induces " + std::to_string(count) + " edges\n";
  } else {
    out.text = "true\n";
  }
  return out;
}

Outcome cmd_realize(const Hypergraph& h, std::string mode, const std::string& catalog_path, const std::string& output) {
  Outcome out;
  if (mode == "auto") mode = is_kl_sparse(h, {6, 2}) ? "62" : "f0";
  Realization r;
  try {
    if (mode == "62") {
      r.metric = realize_62sparse(h);
      r.method = "62sparse";
    } else {
      const Catalog catalog = load_or_build_catalog(catalog_path);
      r = realize_f0_report(h, {&catalog, {}});
    }
  } catch (const PreconditionError& e) {
    out.code = kNegative;
    out.result = {{"mode", mode}, {"error", e.what()}, {"witness", e.witness()}};
    out.text = std::string(e.what()) + "\n";
    return out;
  }
  // Roundtrip before anything is written.
  if (validate_metric(r.metric) || betweenness_hypergraph(r.metric) != h) {
    throw VerificationError("realized metric does not extract back to the input");
  }
  out.result = {{"mode", mode},
                {"method", r.method},
                {"oracle_fallbacks", r.oracle_fallbacks},
                {"log", r.log},
                {"roundtrip", true},
                {"metric", metric_to_json(r.metric)}};
  if (r.decomposition) out.result["decomposition"] = decomposition_to_json(*r.decomposition);
  if (!output.empty()) {
    write_file(output, format_fm(r.metric));
    out.result["output"] = output;
    out.text = "wrote " + output + " (" + r.method + ")\n";
  } else {
    out.text = format_fm(r.metric);
  }
  return out;
}

Outcome cmd_decide(const Hypergraph& h, const OracleBudget& budget, const std::string& alphabet,
                   const std::string& certificate) {
  Outcome out;
  std::optional<MetricityVerdict> verdict;
  std::string method = "oracle";
  if (!alphabet.empty()) {
    const auto values = parse_alphabet(alphabet);
    if (h.n() > budget.max_vertices) throw SizeLimitError("input exceeds the vertex cap");
    if (auto m = alphabet_search(h, values)) {
      MetricVerdict found;
      for (const auto& e : h.edges()) found.assignment[e] = *middle_of(*m, e);
      found.witness = std::move(*m);
      verdict = std::move(found);
      method = "alphabet";
    }
  }
  if (!verdict) verdict = decide_metric(h, budget);
  out.result = certificate_to_json(h, *verdict);
  out.result["method"] = method;
  if (!certificate.empty()) write_file(certificate, out.result.dump(2) + "\n");

  std::ostringstream text;
  if (const auto* m = std::get_if<MetricVerdict>(&*verdict)) {
    text << "metric (" << method << ")\n" << format_fm(m->witness);
  } else if (const auto* nm = std::get_if<NonmetricVerdict>(&*verdict)) {
    out.code = kNegative;
    text << "nonmetric: " << nm->stats.branches_covered.get_str() << " of " << nm->stats.branch_space.get_str()
         << " branches infeasible (" << nm->stats.nodes << " nodes, " << nm->stats.seconds << " s)\n";
  } else {
    const auto& over = std::get<BudgetExceededVerdict>(*verdict);
    out.code = kBudget;
    text << "budget exceeded: " << over.limit << " after " << over.stats.nodes << " nodes\n";
  }
  out.text = text.str();
  return out;
}

Outcome cmd_extract(const FiniteMetric& m, const std::string& output) {
  Outcome out;
  if (auto bad = validate_metric(m)) {
    out.code = kInputError;
    out.result = {{"error", bad->message}};
    out.text = "not a metric: " + bad->message + "\n";
    return out;
  }
  const Hypergraph h = betweenness_hypergraph(m);
  out.result = hypergraph_to_json(h);
  if (!output.empty()) {
    write_file(output, format_hg(h));
    out.text = "wrote " + output + "\n";
  } else {
    out.text = format_hg(h);
  }
  return out;
}

std::string listing(const Catalog& c) {
  std::ostringstream s;
  for (const auto& e : c.entries()) {
    s << e.name << "  n=" << e.core.n() << "  edges=";
    for (const auto& t : e.core.edges()) s << to_string(t);
    s << "  form=" << e.canonical_form << "\n";
    for (Vertex i = 0; i < e.metric.n(); ++i) {
      s << "   ";
      for (Vertex j = 0; j < e.metric.n(); ++j) s << " " << to_string(e.metric(i, j));
      s << "\n";
    }
  }
  return s.str();
}

Outcome cmd_catalog(int build_n, bool show, const std::string& catalog_path, const std::string& output) {
  Outcome out;
  if (show) {
    const Catalog c = catalog_from_json(Json::parse(read_file(catalog_path.empty() ? METRICHG_CATALOG_PATH : catalog_path)));
    out.result = {{"entries", catalog_to_json(c)}};
    out.text = listing(c);
    return out;
  }
  const auto build = enumerate_f0_cores(build_n);
  const Json entries = catalog_to_json(build.catalog);
  if (!output.empty()) write_file(output, entries.dump(2) + "\n");
  out.result = {{"max_n", build_n},
                {"entries", entries},
                {"examined", build.examined},
                {"expected_vertex_counts", expected_core_vertex_counts(build_n)},
                {"discrepancies", build.discrepancies},
                {"witnesses", build.witnesses}};
  std::ostringstream s;
  s << build.catalog.size() << " cores from " << build.examined << " f0-sparse covering hypergraphs\n";
  if (!build.discrepancies.empty()) {
    out.code = kDiscrepancy;
    s << "DISCREPANCY\n";
    for (const auto& d : build.discrepancies) s << "  " << d << "\n";
    for (const auto& w : build.witnesses) s << "  " << w << "\n";
    s << "derived cores:\n";
  }
  s << listing(build.catalog);
  if (!output.empty()) s << "wrote " << output << "\n";
  out.text = s.str();
  return out;
}

Outcome cmd_gen(const std::string& kind, int n, int m, const std::string& drop, std::uint64_t seed,
                const std::string& output) {
  Hypergraph h;
  if (kind == "fano") {
    h = fano();
  } else if (kind == "sts7" || kind == "sts9") {
    h = steiner_triple_system(kind == "sts7" ? 7 : 9);
  } else if (kind == "complete") {
    h = complete(n);
  } else if (kind == "complete-minus") {
    std::vector<Triple> dropped;
    std::stringstream in(drop);
    for (std::string item; std::getline(in, item, ';');) {
      std::istringstream t(item);
      int a, b, c;
      if (!(t >> a >> b >> c)) throw ParseError("--drop expects 'a b c;a b c;...'");
      dropped.push_back(Triple::of(a, b, c));
    }
    h = complete_minus(n, dropped);
  } else if (kind == "random62") {
    h = random_62_sparse(n, m, seed);
  } else if (kind == "randomf0") {
    h = random_f0_sparse(n, seed, m);
  } else {
    throw ParseError("unknown generator '" + kind + "'");
  }
  Outcome out;
  out.result = hypergraph_to_json(h);
  out.result["edge_count"] = h.edge_count();
  if (!output.empty()) {
    write_file(output, format_hg(h));
    out.text = "wrote " + output + " (" + std::to_string(h.edge_count()) + " edges)\n";
  } else {
    out.text = format_hg(h);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric realizations of 3-uniform hypergraphs"};
  app.set_version_flag("--version", METRICHG_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "Print a JSON run report instead of text");
  app.add_option("--seed", seed, "Seed for random generators")->capture_default_str();

  std::string input, output, kl, mode = "auto", catalog_path, alphabet, certificate, kind, drop;
  bool use_f0 = false, show = false;
  int build_n = 0, n = 0, m = -1;
  OracleBudget budget;

  auto* check = app.add_subcommand("check", "Test (k,l)- or f0-sparsity");
  check->add_option("input", input, ".hg or JSON hypergraph")->required();
  auto* kl_opt = check->add_option("--kl", kl, "k,l");
  auto* f0_opt = check->add_flag("--f0", use_f0, "f0-sparsity, f0(k) = ceil(k/2)");
  kl_opt->excludes(f0_opt);

  auto* realize = app.add_subcommand("realize", "Construct a metric realizing the input");
  realize->add_option("input", input, ".hg or JSON hypergraph")->required();
  realize->add_option("--mode", mode, "62, f0 or auto")->check(CLI::IsMember({"62", "f0", "auto"}))->capture_default_str();
  realize->add_option("-o,--output", output, "Write the metric as .fm here");
  realize->add_option("--catalog", catalog_path, "Catalog JSON (default: derived in memory)");

  auto* decide = app.add_subcommand("decide", "Decide metricity exactly");
  decide->add_option("input", input, ".hg or JSON hypergraph")->required();
  decide->add_option("--max-nodes", budget.max_nodes, "Node budget")->capture_default_str();
  decide->add_option("--max-seconds", budget.max_seconds, "Time budget, 0 for none")->capture_default_str();
  decide->add_option("--max-vertices", budget.max_vertices, "Vertex cap")->capture_default_str();
  decide->add_option("--alphabet", alphabet, "Try distances from this list first, e.g. 1,3/2,2");
  decide->add_option("--certificate", certificate, "Write the certificate JSON here");

  auto* extract = app.add_subcommand("extract", "Betweenness hypergraph of a metric");
  extract->add_option("input", input, ".fm file")->required();
  extract->add_option("-o,--output", output, "Write the hypergraph as .hg here");

  auto* catalog = app.add_subcommand("catalog", "Build or show the core catalog");
  auto* build_opt = catalog->add_option("--build", build_n, "Enumerate cores up to this many vertices");
  auto* show_opt = catalog->add_flag("--show", show, "List a stored catalog");
  build_opt->excludes(show_opt);
  catalog->add_option("--catalog", catalog_path, "Catalog JSON for --show");
  catalog->add_option("-o,--output", output, "Write the built catalog JSON here");

  auto* gen = app.add_subcommand("gen", "Generate a hypergraph");
  gen->add_option("kind", kind, "fano, sts7, sts9, complete, complete-minus, random62, randomf0")->required();
  gen->add_option("--n", n, "Vertex count");
  gen->add_option("--m", m, "Target edge count for random generators");
  gen->add_option("--drop", drop, "Triples removed by complete-minus, 'a b c;a b c'");
  gen->add_option("-o,--output", output, "Write .hg here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command = app.get_subcommands().front()->get_name();
  std::string digest;
  Outcome out;
  try {
    std::string bytes;
    if (!input.empty()) {
      bytes = read_file(input);
      digest = "fnv1a64:" + fnv1a_hex(bytes);
    }
    auto graph = [&] {
      Hypergraph h = parse_hypergraph(bytes);
      if (auto bad = validate(h)) throw ParseError(bad->message);
      return h;
    };
    if (*check) {
      if (kl.empty() && !use_f0) throw ParseError("check needs --kl k,l or --f0");
      out = cmd_check(graph(), kl, use_f0);
    } else if (*realize) {
      out = cmd_realize(graph(), mode, catalog_path, output);
    } else if (*decide) {
      out = cmd_decide(graph(), budget, alphabet, certificate);
    } else if (*extract) {
      out = cmd_extract(parse_fm(bytes), output);
    } else if (*catalog) {
      if (!show && build_opt->count() == 0) throw ParseError("catalog needs --build N or --show");
      out = cmd_catalog(build_n, show, catalog_path, output);
    } else {
      out = cmd_gen(kind, n, m, drop, seed, output);
    }
  } catch (const OracleBudgetError& e) {
    out = {kBudget, {{"error", e.what()}}, std::string(e.what()) + "\n"};
  } catch (const VerificationError& e) {
    out = {kDiscrepancy, {{"error", e.what()}}, std::string("discrepancy: ") + e.what() + "\n"};
  } catch (const DecompositionError& e) {
    out = {kDiscrepancy, {{"error", e.what()}, {"diagnostics", e.diagnostics()}},
           std::string("discrepancy: ") + e.what() + "\n"};
  } catch (const Json::exception& e) {
    out = {kInputError, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    // Parse, size-cap, metric and file errors.
    out = {kInputError, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
  }

  if (json) {
    Json report{{"command", command},
                {"exit_code", out.code},
                {"input_digest", digest},
                {"result", out.result},
                {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()},
                {"seed", seed},
                {"version", METRICHG_VERSION}};
    std::cout << report.dump(2) << "\n";
  } else {
    (out.code == kInputError ? std::cerr : std::cout) << out.text;
  }
  return out.code;
}
