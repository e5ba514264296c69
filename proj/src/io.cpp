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

#include "metrichg/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "metrichg/canonical.hpp"

namespace metrichg {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    Line l{number, {}};
    for (std::string tok; in >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    pos = end + 1;
  }
  return out;
}

long parse_int(const std::string& tok, int line) {
  if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("expected a non-negative integer, got '" + tok + "'", line);
  }
  return std::stol(tok);
}

// Adds {a, b, c} to `edges` after the range, repeat and duplicate checks.
void add_edge(long n, long a, long b, long c, std::set<Triple>& edges, int line) {
  for (long v : {a, b, c}) {
    if (v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n), line);
  }
  if (a == b || b == c || a == c) throw ParseError("edge repeats a vertex", line);
  const Triple t = Triple::of(int(a), int(b), int(c));
  if (!edges.insert(t).second) throw ParseError("duplicate edge " + to_string(t), line);
}

std::string pair_key(Vertex i, Vertex j) { return std::to_string(i) + "," + std::to_string(j); }

}  // namespace

Hypergraph parse_hg(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError("header must be 'n m'", header.number);
  const long n = parse_int(header.tokens[0], header.number);
  const long m = parse_int(header.tokens[1], header.number);
  if (long(lines.size()) - 1 != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1),
                     header.number);
  }
  std::set<Triple> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 3) throw ParseError("edge line must hold three vertex ids", l.number);
    add_edge(n, parse_int(l.tokens[0], l.number), parse_int(l.tokens[1], l.number), parse_int(l.tokens[2], l.number),
             edges, l.number);
  }
  return Hypergraph(int(n), {edges.begin(), edges.end()});
}

std::string format_hg(const Hypergraph& h) {
  std::string out = std::to_string(h.n()) + " " + std::to_string(h.edge_count()) + "\n";
  for (const auto& e : h.edges()) {
    out += std::to_string(e.a) + " " + std::to_string(e.b) + " " + std::to_string(e.c) + "\n";
  }
  return out;
}

Hypergraph parse_hypergraph_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw ParseError("expected {\"n\": ..., \"edges\": [...]}");
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 0) throw ParseError("\"n\" must be a non-negative integer");
  const long n = j["n"].get<long>();
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  std::set<Triple> edges;
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    auto bad = [&] { return ParseError("edge #" + std::to_string(i) + " must be three non-negative integers"); };
    if (!e.is_array() || e.size() != 3) throw bad();
    for (const auto& v : e) {
      if (!v.is_number_integer() || v.get<long>() < 0) throw bad();
    }
    try {
      add_edge(n, e[0].get<long>(), e[1].get<long>(), e[2].get<long>(), edges, 0);
    } catch (const ParseError& err) {
      throw ParseError("edge #" + std::to_string(i) + ": " + err.what());
    }
  }
  return Hypergraph(int(n), {edges.begin(), edges.end()});
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back({e.a, e.b, e.c});
  return {{"n", h.n()}, {"edges", edges}};
}

Hypergraph parse_hypergraph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_hypergraph_json(text);
  return parse_hg(text);
}

FiniteMetric parse_fm(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input");
  const auto& header = lines.front();
  if (header.tokens.size() != 1) throw ParseError("header must be 'n'", header.number);
  const long n = parse_int(header.tokens[0], header.number);
  const long pairs = n * (n - 1) / 2;
  if (long(lines.size()) - 1 != pairs) {
    throw ParseError("expected " + std::to_string(pairs) + " distance lines, found " + std::to_string(lines.size() - 1),
                     header.number);
  }
  FiniteMetric m{int(n)};
  std::set<std::pair<long, long>> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.tokens.size() != 3) throw ParseError("distance line must be 'i j value'", l.number);
    const long i = parse_int(l.tokens[0], l.number);
    const long j = parse_int(l.tokens[1], l.number);
    if (i >= j || j >= n) throw ParseError("pair must satisfy i < j < n", l.number);
    if (!seen.insert({i, j}).second) throw ParseError("pair listed twice", l.number);
    try {
      m.set(int(i), int(j), parse_rational(l.tokens[2]));
    } catch (const ParseError& err) {
      throw ParseError(err.what(), l.number);
    }
  }
  return m;
}

std::string format_fm(const FiniteMetric& m) {
  std::string out = std::to_string(m.n()) + "\n";
  for (Vertex i = 0; i < m.n(); ++i) {
    for (Vertex j = i + 1; j < m.n(); ++j) {
      out += std::to_string(i) + " " + std::to_string(j) + " " + to_string(m(i, j)) + "\n";
    }
  }
  return out;
}

Json metric_to_json(const FiniteMetric& m) {
  Json rows = Json::array();
  for (Vertex i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (Vertex j = 0; j < m.n(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FiniteMetric metric_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("metric must be an array of rows");
  FiniteMetric m{int(j.size())};
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size()) throw ParseError("metric must be square");
    for (std::size_t k = i + 1; k < j.size(); ++k) m.set(int(i), int(k), parse_rational(j[i][k].get<std::string>()));
  }
  return m;
}

Json stats_to_json(const SearchStats& s) {
  return {{"branch_space", s.branch_space.get_str()},
          {"branches_covered", s.branches_covered.get_str()},
          {"nodes", s.nodes},
          {"pruned_by_propagation", s.pruned_by_propagation},
          {"pruned_by_lp", s.pruned_by_lp},
          {"pruned_by_symmetry", s.pruned_by_symmetry},
          {"lp_pivots", s.lp_pivots},
          {"seconds", s.seconds}};
}

Json certificate_to_json(const Hypergraph& h, const MetricityVerdict& v) {
  Json out{{"hypergraph", hypergraph_to_json(h)}};
  if (const auto* metric = std::get_if<MetricVerdict>(&v)) {
    out["verdict"] = "metric";
    out["witness"] = metric_to_json(metric->witness);
    Json assignment = Json::array();
    for (const auto& [e, y] : metric->assignment) assignment.push_back({{"edge", {e.a, e.b, e.c}}, {"middle", y}});
    out["assignment"] = assignment;
    out["stats"] = stats_to_json(metric->stats);
  } else if (const auto* nonmetric = std::get_if<NonmetricVerdict>(&v)) {
    out["verdict"] = "nonmetric";
    out["stats"] = stats_to_json(nonmetric->stats);
    Json failures = Json::array();
    for (const auto& f : nonmetric->failures) {
      Json prefix = Json::array();
      for (const auto& [e, y] : f.prefix) prefix.push_back({{"edge", {e.a, e.b, e.c}}, {"middle", y}});
      const char* reason = f.reason == BranchFailure::Reason::EqualityPropagation ? "equality_propagation"
                           : f.reason == BranchFailure::Reason::LinearProgram     ? "linear_program"
                                                                                  : "symmetry";
      failures.push_back({{"prefix", prefix}, {"reason", reason}});
    }
    out["failures"] = failures;
  } else {
    const auto& over = std::get<BudgetExceededVerdict>(v);
    out["verdict"] = "budget_exceeded";
    out["limit"] = over.limit;
    out["stats"] = stats_to_json(over.stats);
  }
  return out;
}

Json catalog_to_json(const Catalog& c) {
  Json out = Json::array();
  for (const auto& e : c.entries()) {
    Json metric = Json::object();
    for (Vertex i = 0; i < e.metric.n(); ++i) {
      for (Vertex j = i + 1; j < e.metric.n(); ++j) metric[pair_key(i, j)] = to_string(e.metric(i, j));
    }
    Json edges = hypergraph_to_json(e.core)["edges"];
    out.push_back({{"name", e.name},
                   {"n", e.core.n()},
                   {"edges", edges},
                   {"metric", metric},
                   {"canonical_form", e.canonical_form}});
  }
  return out;
}

Catalog catalog_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("catalog must be an array");
  std::vector<CatalogEntry> entries;
  for (const auto& item : j) {
    CatalogEntry e;
    try {
      e.name = item.at("name").get<std::string>();
      e.core = parse_hypergraph_json(Json{{"n", item.at("n")}, {"edges", item.at("edges")}}.dump());
      e.metric = FiniteMetric(e.core.n());
      for (Vertex a = 0; a < e.core.n(); ++a) {
        for (Vertex b = a + 1; b < e.core.n(); ++b) {
          e.metric.set(a, b, parse_rational(item.at("metric").at(pair_key(a, b)).get<std::string>()));
        }
      }
      e.canonical_form = item.at("canonical_form").get<std::string>();
    } catch (const Json::exception& err) {
      throw ParseError(std::string("malformed catalog entry: ") + err.what());
    }
    if (validate_metric(e.metric) || !realizes(e.metric, e.core)) {
      throw ParseError("catalog entry " + e.name + ": metric does not realize its core");
    }
    if (canonical_form(e.core) != e.canonical_form) throw ParseError("catalog entry " + e.name + ": stale canonical form");
    entries.push_back(std::move(e));
  }
  return Catalog(std::move(entries));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace metrichg
