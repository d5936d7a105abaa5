// Copyright 2026 The brkmin Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

// File formats. All text is UTF-8 with LF line endings; team and slot ids are
// 1-based, variable and qubit ids are 0-based.
//
// Timetable JSON
//   {"kind": "MDRRT", "num_teams": 4, "opponents": [[2,3,4,2,3,4], ...],
//    "home_bits": [[1,0,1,0,1,0], ...]}            home_bits is optional
// Timetable / assignment CSV (one row per team, one column per slot)
//   team,1,2,3,...
//   1,2,3,4,...
// Qubo JSON
//   {"num_vars": 6, "offset": 12, "linear": [[0, -2], ...],
//    "quadratic": [[0, 1, 2], ...]}
// Qubo coordinate text
//   # offset 12
//   # num_vars 6
//   0 0 -2          i == j: linear term
//   0 1 2           i < j: quadratic term
// Numbers are written in the shortest form that reads back exactly.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "brkmin/embedding.hpp"
#include "brkmin/penalty.hpp"
#include "brkmin/qubo.hpp"
#include "brkmin/schedule.hpp"
#include "brkmin/solver.hpp"
#include "json.hpp"

namespace brkmin::io {

using json = nlohmann::json;

inline std::string format_number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return std::string(buf) == "-0" ? "0" : buf;
  }
  char buf[40];
  for (int precision = 6; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

/// Wall-clock seconds, to the tenth of a millisecond.
inline std::string format_seconds(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// -- timetables ---------------------------------------------------------------

inline json timetable_json(const Timetable& tt) {
  json rows = json::array();
  for (std::size_t t = 0; t < tt.num_teams(); ++t) {
    json row = json::array();
    for (std::size_t s = 0; s < tt.num_slots(); ++s) row.push_back(tt.opponent(t, s) + 1);
    rows.push_back(std::move(row));
  }
  return {{"kind", to_string(tt.kind())}, {"num_teams", tt.num_teams()}, {"opponents", std::move(rows)}};
}

inline json assignment_json(const HAAssignment& ha) {
  json j = timetable_json(ha.timetable());
  json rows = json::array();
  const auto& tt = ha.timetable();
  for (std::size_t t = 0; t < tt.num_teams(); ++t) {
    json row = json::array();
    for (std::size_t s = 0; s < tt.num_slots(); ++s) row.push_back(ha.home(t, s) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  j["home_bits"] = std::move(rows);
  return j;
}

inline Timetable timetable_from_json(const json& j) {
  const auto kind = parse_kind(j.at("kind").get<std::string>());
  const auto teams = j.at("num_teams").get<std::size_t>();
  const auto& rows = j.at("opponents");
  if (rows.size() != teams) throw std::invalid_argument("opponents must have one row per team");
  const std::size_t slots = teams == 0 ? 0 : rows.at(0).size();
  std::vector<int> opp;
  opp.reserve(teams * slots);
  for (const auto& row : rows) {
    if (row.size() != slots) throw std::invalid_argument("opponent rows must have equal length");
    for (const auto& v : row) opp.push_back(v.get<int>() - 1);
  }
  return Timetable(kind, teams, slots, std::move(opp));
}

/// Requires home_bits.
inline HAAssignment assignment_from_json(const json& j) {
  Timetable tt = timetable_from_json(j);
  const auto& rows = j.at("home_bits");
  if (rows.size() != tt.num_teams()) throw std::invalid_argument("home_bits must have one row per team");
  std::vector<std::uint8_t> bits;
  for (const auto& row : rows) {
    if (row.size() != tt.num_slots()) throw std::invalid_argument("home_bits rows must match the slot count");
    for (const auto& v : row) bits.push_back(v.get<int>() != 0 ? 1 : 0);
  }
  return HAAssignment(std::move(tt), std::move(bits));
}

namespace detail {

template <typename Cell>
std::string grid_csv(std::size_t teams, std::size_t slots, Cell cell) {
  std::ostringstream os;
  os << "team";
  for (std::size_t s = 0; s < slots; ++s) os << ',' << s + 1;
  os << '\n';
  for (std::size_t t = 0; t < teams; ++t) {
    os << t + 1;
    for (std::size_t s = 0; s < slots; ++s) os << ',' << cell(t, s);
    os << '\n';
  }
  return os.str();
}

inline std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace detail

inline std::string timetable_csv(const Timetable& tt) {
  return detail::grid_csv(tt.num_teams(), tt.num_slots(), [&](std::size_t t, std::size_t s) { return tt.opponent(t, s) + 1; });
}

inline std::string assignment_csv(const HAAssignment& ha) {
  const auto& tt = ha.timetable();
  return detail::grid_csv(tt.num_teams(), tt.num_slots(), [&](std::size_t t, std::size_t s) { return ha.home(t, s) ? 1 : 0; });
}

inline Timetable timetable_from_csv(const std::string& text, TournamentKind kind) {
  auto rows = detail::split_csv(text);
  if (rows.size() < 2) throw std::invalid_argument("timetable CSV needs a header and at least one team row");
  const std::size_t slots = rows[0].size() - 1;
  const std::size_t teams = rows.size() - 1;
  std::vector<int> opp;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != slots + 1) throw std::invalid_argument("timetable CSV row " + std::to_string(r) + " has wrong width");
    for (std::size_t c = 1; c < rows[r].size(); ++c) opp.push_back(std::stoi(rows[r][c]) - 1);
  }
  return Timetable(kind, teams, slots, std::move(opp));
}

// -- qubo ---------------------------------------------------------------------

inline json qubo_json(const Qubo& q) {
  json lin = json::array();
  for (std::size_t i = 0; i < q.num_vars; ++i)
    if (q.linear[i] != 0.0) lin.push_back({i, q.linear[i]});
  json quad = json::array();
  for (const auto& [key, v] : q.quadratic) quad.push_back({key.first, key.second, v});
  return {{"num_vars", q.num_vars}, {"offset", q.offset}, {"linear", std::move(lin)}, {"quadratic", std::move(quad)}};
}

inline Qubo qubo_from_json(const json& j) {
  Qubo q(j.at("num_vars").get<std::size_t>());
  q.offset = j.value("offset", 0.0);
  for (const auto& t : j.at("linear")) q.add_linear(t.at(0).get<std::size_t>(), t.at(1).get<double>());
  for (const auto& t : j.at("quadratic"))
    q.add_quadratic(t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(), t.at(2).get<double>());
  return q;
}

inline std::string qubo_text(const Qubo& q) {
  std::ostringstream os;
  os << "# offset " << format_number(q.offset) << '\n';
  os << "# num_vars " << q.num_vars << '\n';
  for (std::size_t i = 0; i < q.num_vars; ++i)
    if (q.linear[i] != 0.0) os << i << ' ' << i << ' ' << format_number(q.linear[i]) << '\n';
  for (const auto& [key, v] : q.quadratic) os << key.first << ' ' << key.second << ' ' << format_number(v) << '\n';
  return os.str();
}

/// Without a "# num_vars" line the count is one past the largest index seen.
inline Qubo qubo_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  double offset = 0.0;
  std::size_t declared = 0;
  bool has_declared = false;
  struct Entry {
    std::size_t i, j;
    double v;
  };
  std::vector<Entry> entries;
  std::size_t max_index = 0;
  bool any = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string key;
      ls >> key;
      if (key == "offset") ls >> offset;
      if (key == "num_vars") {
        ls >> declared;
        has_declared = true;
      }
      continue;
    }
    std::istringstream ls(line);
    Entry e{};
    if (!(ls >> e.i >> e.j >> e.v)) throw std::invalid_argument("malformed qubo line " + std::to_string(line_no));
    max_index = std::max({max_index, e.i, e.j});
    any = true;
    entries.push_back(e);
  }
  Qubo q(has_declared ? declared : (any ? max_index + 1 : 0));
  q.offset = offset;
  for (const auto& e : entries) {
    if (e.i == e.j)
      q.add_linear(e.i, e.v);
    else
      q.add_quadratic(e.i, e.j, e.v);
  }
  return q;
}

/// Picks the format from the extension: .json, anything else is coordinate text.
inline Qubo load_qubo(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return qubo_from_json(json::parse(text));
  return qubo_from_text(text);
}

// -- samples ------------------------------------------------------------------

inline std::string bits_string(const Bits& b) {
  std::string s(b.size(), '0');
  for (std::size_t i = 0; i < b.size(); ++i) s[i] = b[i] ? '1' : '0';
  return s;
}

inline Bits bits_from_string(const std::string& s) {
  Bits b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("state strings contain only 0 and 1");
    b[i] = s[i] == '1';
  }
  return b;
}

inline json sampleset_json(const SampleSet& s) {
  json recs = json::array();
  for (const auto& r : s.records)
    recs.push_back({{"state", bits_string(r.state)}, {"energy", r.energy}, {"occurrences", r.occurrences}});
  return {{"solver", s.solver},
          {"seed", s.seed},
          {"parameters", s.parameters},
          {"wall_seconds", s.wall_seconds},
          {"records", std::move(recs)}};
}

inline SampleSet sampleset_from_json(const json& j) {
  SampleSet s;
  s.solver = j.value("solver", "");
  s.seed = j.value("seed", std::uint64_t{0});
  s.parameters = j.value("parameters", "");
  s.wall_seconds = j.value("wall_seconds", 0.0);
  for (const auto& r : j.at("records"))
    s.records.push_back({bits_from_string(r.at("state").get<std::string>()), r.at("energy").get<double>(),
                         r.at("occurrences").get<std::size_t>()});
  return s;
}

inline std::string sampleset_csv(const SampleSet& s) {
  std::ostringstream os;
  os << "state,energy,occurrences\n";
  for (const auto& r : s.records) os << bits_string(r.state) << ',' << format_number(r.energy) << ',' << r.occurrences << '\n';
  return os.str();
}

inline std::string trace_csv(const std::vector<TracePoint>& trace) {
  std::ostringstream os;
  os << "elapsed_seconds,best_energy\n";
  for (const auto& p : trace) os << format_seconds(p.elapsed_seconds) << ',' << format_number(p.best_energy) << '\n';
  return os.str();
}

// -- embeddings ---------------------------------------------------------------

inline json embedding_json(const Embedding& e) {
  json j = json::object();
  for (std::size_t v = 0; v < e.chains.size(); ++v) j[std::to_string(v)] = e.chains[v];
  return j;
}

inline Embedding embedding_from_json(const json& j) {
  Embedding e;
  e.chains.resize(j.size());
  for (const auto& [key, chain] : j.items()) {
    const auto v = std::stoul(key);
    if (v >= e.chains.size()) throw std::invalid_argument("embedding keys must be 0..n-1");
    e.chains[v] = chain.get<std::vector<std::size_t>>();
  }
  return e;
}

inline std::string embedding_stats_header() { return "Teams,Nodes,Edges,Qubits,Qubits/Nodes\n"; }

inline std::string embedding_stats_row(std::size_t teams, double nodes, double edges, double qubits, double per_node) {
  std::ostringstream os;
  os << teams << ',' << format_number(nodes) << ',' << format_number(edges) << ',' << format_number(qubits) << ','
     << std::fixed << std::setprecision(6) << per_node << '\n';
  return os.str();
}

// -- penalty study ------------------------------------------------------------

inline std::string feasibility_csv(const std::vector<FeasibilityStats>& rows) {
  std::ostringstream os;
  os << "n,per_feasible,ev_break,ev_energy\n" << std::fixed << std::setprecision(6);
  for (const auto& r : rows) os << r.n << ',' << r.per_feasible << ',' << r.ev_break << ',' << r.ev_energy << '\n';
  return os.str();
}

}  // namespace brkmin::io
