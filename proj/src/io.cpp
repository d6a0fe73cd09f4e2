#include "bramsey/io.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace bramsey {

namespace {

int require_int(const nlohmann::json& j, const char* field, int lo, int hi) {
  if (!j.contains(field)) throw ParseError(std::string(field) + ": missing");
  const auto& v = j.at(field);
  if (!v.is_number_integer()) throw ParseError(std::string(field) + ": expected an integer");
  const long long n = v.get<long long>();
  if (n < lo || n > hi)
    throw ParseError(std::string(field) + ": " + std::to_string(n) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(n);
}

std::string hex_row(std::uint64_t mask) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(mask));
  return buf;
}

std::uint64_t parse_hex_row(const std::string& s, const std::string& field) {
  if (s.empty() || s.size() > 16) throw ParseError(field + ": expected 1..16 hex digits");
  std::uint64_t v = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = c - 'a' + 10;
    else
      throw ParseError(field + ": invalid lowercase hex digit '" + std::string(1, c) + "'");
    v = v << 4 | static_cast<unsigned>(d);
  }
  return v;
}

}  // namespace

nlohmann::json graph_to_json(const BipartiteGraph& g, bool compact) {
  nlohmann::json j;
  j["left"] = g.left_size();
  j["right"] = g.right_size();
  if (compact) {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < g.left_size(); ++i) rows.push_back(hex_row(g.row(i)));
    j["rows_hex"] = std::move(rows);
  } else {
    auto edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) edges.push_back(nlohmann::json::array({a, b}));
    j["edges"] = std::move(edges);
  }
  return j;
}

BipartiteGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("graph: expected a JSON object");
  const int left = require_int(j, "left", 0, kMaxSide);
  const int right = require_int(j, "right", 0, kMaxSide);
  const bool has_edges = j.contains("edges");
  const bool has_rows = j.contains("rows_hex");
  if (!has_edges && !has_rows)
    throw ParseError("graph: needs an \"edges\" or \"rows_hex\" field");

  BipartiteGraph from_edges(left, right);
  if (has_edges) {
    const auto& edges = j.at("edges");
    if (!edges.is_array()) throw ParseError("edges: expected an array");
    std::pair<int, int> prev{-1, -1};
    for (std::size_t t = 0; t < edges.size(); ++t) {
      const std::string field = "edges[" + std::to_string(t) + "]";
      const auto& e = edges[t];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw ParseError(field + ": expected an [i, j] pair");
      const int a = e[0].get<int>();
      const int b = e[1].get<int>();
      if (a < 0 || a >= left)
        throw ParseError(field + ": left index " + std::to_string(a) + " outside [0, " +
                         std::to_string(left) + ")");
      if (b < 0 || b >= right)
        throw ParseError(field + ": right index " + std::to_string(b) + " outside [0, " +
                         std::to_string(right) + ")");
      if (std::pair{a, b} <= prev)
        throw ParseError(field + ": edges must be sorted and duplicate-free");
      prev = {a, b};
      from_edges.add_edge(a, b);
    }
  }

  BipartiteGraph from_rows(left, right);
  if (has_rows) {
    const auto& rows = j.at("rows_hex");
    if (!rows.is_array() || static_cast<int>(rows.size()) != left)
      throw ParseError("rows_hex: expected one entry per left vertex");
    for (int i = 0; i < left; ++i) {
      const std::string field = "rows_hex[" + std::to_string(i) + "]";
      const auto& r = rows[static_cast<std::size_t>(i)];
      if (!r.is_string()) throw ParseError(field + ": expected a hex string");
      const std::uint64_t mask = parse_hex_row(r.get<std::string>(), field);
      if (right < 64 && (mask >> right) != 0)
        throw ParseError(field + ": bit " + std::to_string(63 - std::countl_zero(mask)) +
                         " exceeds right size " + std::to_string(right));
      for (std::uint64_t m = mask; m != 0; m &= m - 1)
        from_rows.add_edge(i, std::countr_zero(m));
    }
  }

  if (has_edges && has_rows && !(from_edges == from_rows))
    throw ParseError("graph: \"edges\" and \"rows_hex\" disagree");
  return has_edges ? from_edges : from_rows;
}

nlohmann::json witness_to_json(const CycleWitness& w) {
  return nlohmann::json{{"k", w.half_length}, {"left", w.left_seq}, {"right", w.right_seq}};
}

CycleWitness witness_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("witness: expected a JSON object");
  CycleWitness w;
  w.half_length = require_int(j, "k", 2, kMaxSide);
  for (const char* field : {"left", "right"}) {
    if (!j.contains(field)) throw ParseError(std::string(field) + ": missing");
    const auto& seq = j.at(field);
    if (!seq.is_array() || static_cast<int>(seq.size()) != w.half_length)
      throw ParseError(std::string(field) + ": expected an array of k vertices");
    auto& out = field[0] == 'l' ? w.left_seq : w.right_seq;
    for (std::size_t t = 0; t < seq.size(); ++t) {
      if (!seq[t].is_number_integer() || seq[t].get<int>() < 0 ||
          seq[t].get<int>() >= kMaxSide)
        throw ParseError(std::string(field) + "[" + std::to_string(t) +
                         "]: expected a vertex index");
      out.push_back(seq[t].get<int>());
    }
  }
  return w;
}

nlohmann::json report_to_json(const ConstructionReport& r, bool compact) {
  return nlohmann::json{{"id", r.construction_id},
                        {"board", r.coloring.board_left()},
                        {"red_k", r.checked_red_k},
                        {"blue_k", r.checked_blue_k},
                        {"coloring", graph_to_json(r.coloring.red, compact)},
                        {"red_absent", r.red_cycle_absent},
                        {"blue_absent", r.blue_cycle_absent}};
}

ConstructionReport report_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("report: expected a JSON object");
  ConstructionReport r;
  if (!j.contains("id") || !j.at("id").is_string()) throw ParseError("id: missing");
  r.construction_id = j.at("id").get<std::string>();
  const int board = require_int(j, "board", 0, kMaxSide);
  r.checked_red_k = require_int(j, "red_k", 2, kMaxSide);
  r.checked_blue_k = require_int(j, "blue_k", 2, kMaxSide);
  if (!j.contains("coloring")) throw ParseError("coloring: missing");
  r.coloring = TwoColoring{graph_from_json(j.at("coloring"))};
  if (r.coloring.board_left() != board || r.coloring.board_right() != board)
    throw ParseError("board: does not match the coloring dimensions");
  for (const char* field : {"red_absent", "blue_absent"}) {
    if (!j.contains(field) || !j.at(field).is_boolean())
      throw ParseError(std::string(field) + ": expected a boolean");
  }
  r.red_cycle_absent = j.at("red_absent").get<bool>();
  r.blue_cycle_absent = j.at("blue_absent").get<bool>();
  return r;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::counterexample: return "counterexample";
    case Verdict::timeout: return "timeout";
  }
  return "timeout";
}

nlohmann::json outcome_to_json(const RamseyQuery& q, const SearchOutcome& o, bool compact) {
  nlohmann::json j;
  j["query"] = {{"b", q.board}, {"m", q.red_k}, {"n", q.blue_k}};
  j["verdict"] = verdict_name(o.verdict);
  j["witness"] = o.witness ? graph_to_json(o.witness->red, compact) : nlohmann::json{};
  j["stats"] = {{"nodes", o.stats.nodes},
                {"prunes_red", o.stats.prunes_red},
                {"prunes_blue", o.stats.prunes_blue},
                {"prunes_sym", o.stats.prunes_sym},
                {"elapsed_ms", o.stats.elapsed_ms},
                {"workers", o.stats.workers},
                {"deterministic", o.stats.deterministic}};
  return j;
}

}  // namespace bramsey
