#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "agx/automaton.hpp"
#include "agx/classify.hpp"
#include "agx/nucleus.hpp"
#include "agx/probe.hpp"
#include "agx/schreier.hpp"

namespace agx {

using nlohmann::json;

// ---- automaton documents ----

inline json automaton_to_json(const Automaton& a) {
  json doc;
  doc["alphabet_size"] = a.alphabet;
  doc["states"] = a.names;
  doc["identity"] = a.identity ? json(a.names[static_cast<std::size_t>(*a.identity)]) : json();
  json trans = json::object();
  for (int s = 0; s < a.size(); ++s) {
    json row;
    std::vector<int> out_row;
    std::vector<std::string> next_row;
    for (int x = 0; x < a.alphabet; ++x) {
      out_row.push_back(a.out(s, x));
      next_row.push_back(a.names[static_cast<std::size_t>(a.next(s, x))]);
    }
    row["out"] = out_row;
    row["next"] = next_row;
    trans[a.names[static_cast<std::size_t>(s)]] = row;
  }
  doc["transitions"] = trans;
  return doc;
}

namespace detail {

inline void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* name : allowed)
      if (it.key() == name) ok = true;
    if (!ok) fail("BadDocument", "unknown field '" + it.key() + "' in " + where);
  }
}

}  // namespace detail

// Strict parse of the document produced by automaton_to_json. Shape errors
// are rejected here; behavioral validity is a separate check.
inline Automaton automaton_from_json(const json& doc) {
  if (!doc.is_object()) fail("BadDocument", "automaton document must be an object");
  detail::reject_unknown_fields(doc, {"alphabet_size", "states", "identity", "transitions"},
                                "automaton document");
  if (!doc.contains("alphabet_size") || !doc["alphabet_size"].is_number_integer())
    fail("BadDocument", "alphabet_size must be an integer");
  if (!doc.contains("states") || !doc["states"].is_array())
    fail("BadDocument", "states must be an array of names");
  if (!doc.contains("transitions") || !doc["transitions"].is_object())
    fail("BadDocument", "transitions must be an object");

  const int q = doc["alphabet_size"].get<int>();
  if (q < 2) fail("BadDocument", "alphabet_size must be at least 2");
  std::vector<std::string> names;
  for (const auto& s : doc["states"]) {
    if (!s.is_string() || s.get<std::string>().empty())
      fail("BadDocument", "state names must be nonempty strings");
    names.push_back(s.get<std::string>());
  }
  if (names.empty()) fail("BadDocument", "at least one state is required");
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (index.count(names[static_cast<std::size_t>(i)]))
      fail("BadDocument", "duplicate state name '" + names[static_cast<std::size_t>(i)] + "'");
    index[names[static_cast<std::size_t>(i)]] = i;
  }

  Automaton a = Automaton::with_states(q, names);
  const json& trans = doc["transitions"];
  for (const auto& name : names)
    if (!trans.contains(name)) fail("BadDocument", "missing transitions for state '" + name + "'");
  for (auto it = trans.begin(); it != trans.end(); ++it) {
    auto at = index.find(it.key());
    if (at == index.end()) fail("BadDocument", "transitions for unknown state '" + it.key() + "'");
    const json& row = it.value();
    if (!row.is_object()) fail("BadDocument", "transition row must be an object");
    detail::reject_unknown_fields(row, {"out", "next"}, "transitions of '" + it.key() + "'");
    if (!row.contains("out") || !row["out"].is_array() ||
        static_cast<int>(row["out"].size()) != q)
      fail("BadDocument", "out of '" + it.key() + "' must list one letter per input letter");
    if (!row.contains("next") || !row["next"].is_array() ||
        static_cast<int>(row["next"].size()) != q)
      fail("BadDocument", "next of '" + it.key() + "' must list one state per input letter");
    for (int x = 0; x < q; ++x) {
      const json& y = row["out"][static_cast<std::size_t>(x)];
      const json& t = row["next"][static_cast<std::size_t>(x)];
      if (!y.is_number_integer()) fail("BadDocument", "out entries must be integer letters");
      if (!t.is_string()) fail("BadDocument", "next entries must be state names");
      auto target = index.find(t.get<std::string>());
      if (target == index.end())
        fail("BadDocument", "next of '" + it.key() + "' references unknown state '" +
                                t.get<std::string>() + "'");
      a.set(at->second, x, y.get<int>(), target->second);
    }
  }
  if (doc.contains("identity") && !doc["identity"].is_null()) {
    if (!doc["identity"].is_string()) fail("BadDocument", "identity must be a state name or null");
    auto at = index.find(doc["identity"].get<std::string>());
    if (at == index.end()) fail("BadDocument", "identity references an unknown state");
    a.identity = at->second;
  }
  return a;
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("BadDocument", e.what());
  }
}

// ---- reports ----

inline json validation_report_to_json(const ValidationReport& rep) {
  json doc;
  doc["valid"] = rep.valid;
  json issues = json::array();
  for (const auto& issue : rep.issues) {
    json entry;
    entry["kind"] = issue.kind;
    entry["state"] = issue.state.empty() ? json() : json(issue.state);
    entry["letter"] = issue.letter >= 0 ? json(issue.letter) : json();
    issues.push_back(entry);
  }
  doc["issues"] = issues;
  doc["trivial_state"] = rep.trivial_state ? json(*rep.trivial_state) : json();
  doc["identity_claim_ok"] = rep.identity_claim_ok;
  doc["source_only_states"] = rep.source_only_states;
  return doc;
}

inline json classification_to_json(const ClassificationReport& rep) {
  json doc;
  doc["scc_list"] = rep.scc_list;
  doc["cycle_sccs"] = rep.cycle_sccs;
  doc["is_polynomial"] = rep.is_polynomial;
  doc["degree"] = rep.degree ? json(*rep.degree) : json("not polynomial");
  json deg = json::object();
  for (std::size_t s = 0; s < rep.states.size(); ++s) {
    auto d = rep.state_degree[s];
    deg[rep.states[s]] = d ? json(*d) : json("not polynomial");
  }
  doc["state_degree"] = deg;
  doc["circuit_states"] = rep.circuit_states;
  doc["finitary_states"] = rep.finitary_states;
  return doc;
}

inline json nucleus_result_to_json(const NucleusResult& res) {
  json doc;
  doc["outcome"] = res.contracting ? "contracting" : "inconclusive";
  doc["depth_cap"] = res.depth_cap;
  doc["size_cap"] = res.size_cap;
  if (res.contracting) {
    doc["size"] = res.nucleus.size();
    doc["nucleus"] = automaton_to_json(res.nucleus);
  } else {
    doc["reason"] = res.reason;
    doc["partial_size"] = res.partial_size;
  }
  return doc;
}

inline json probe_table_to_json(const ProbeTable& table) {
  json doc;
  doc["degree"] = table.degree;
  doc["depth_max"] = table.depth_max;
  doc["samples"] = table.samples;
  doc["seed"] = table.seed;
  json rows = json::array();
  for (const auto& row : table.rows) {
    json one;
    one["n"] = row.length;
    one["sample_index"] = row.sample_index;
    one["word"] = row.word_text;
    one["minimal_depth"] = row.minimal_depth >= 0 ? json(row.minimal_depth) : json();
    one["outcome"] = row.outcome;
    rows.push_back(one);
  }
  doc["rows"] = rows;
  return doc;
}

inline std::string probe_table_to_csv(const ProbeTable& table) {
  std::string out = "n,sample_index,minimal_depth,outcome\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.length) + "," + std::to_string(row.sample_index) + ",";
    if (row.minimal_depth >= 0) out += std::to_string(row.minimal_depth);
    out += "," + row.outcome + "\n";
  }
  return out;
}

// ---- graphs ----

inline std::string vertex_name(const Word& w, int alphabet) { return word_to_string(w, alphabet); }
inline std::string vertex_name(const EpWord& w, int) { return ep_to_string(w); }

template <typename V>
json graph_to_json(const SchreierGraph<V>& g, int alphabet) {
  json doc;
  json verts = json::array();
  for (const auto& v : g.vertices) verts.push_back(vertex_name(v, alphabet));
  doc["vertices"] = verts;
  json edges = json::array();
  for (const auto& e : g.edges) {
    json one;
    one["u"] = vertex_name(g.vertices[static_cast<std::size_t>(e.u)], alphabet);
    one["v"] = vertex_name(g.vertices[static_cast<std::size_t>(e.v)], alphabet);
    json labels = json::array();
    for (int s : e.labels) labels.push_back(g.generator_names[static_cast<std::size_t>(s)]);
    one["labels"] = labels;
    edges.push_back(one);
  }
  doc["edges"] = edges;
  doc["basepoint"] = g.basepoint
                         ? json(vertex_name(g.vertices[static_cast<std::size_t>(*g.basepoint)], alphabet))
                         : json();
  return doc;
}

inline json metrics_to_json(const GraphMetrics& m) {
  json doc;
  doc["components"] = m.components;
  doc["component_sizes"] = m.component_sizes;
  doc["diameter_per_component"] = m.diameter_per_component;
  doc["diameters_exact"] = m.diameters_exact;
  doc["ball_sizes_from_basepoint"] = m.ball_sizes_from_basepoint;
  return doc;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

template <typename V>
std::string graph_to_dot(const SchreierGraph<V>& g, int alphabet) {
  std::string out = "graph schreier {\n";
  for (const auto& v : g.vertices)
    out += "  " + detail::dot_quote(vertex_name(v, alphabet)) + ";\n";
  for (const auto& e : g.edges) {
    std::string label;
    for (std::size_t i = 0; i < e.labels.size(); ++i) {
      if (i) label += ",";
      label += g.generator_names[static_cast<std::size_t>(e.labels[i])];
    }
    out += "  " + detail::dot_quote(vertex_name(g.vertices[static_cast<std::size_t>(e.u)], alphabet)) +
           " -- " +
           detail::dot_quote(vertex_name(g.vertices[static_cast<std::size_t>(e.v)], alphabet)) +
           " [label=" + detail::dot_quote(label) + "];\n";
  }
  out += "}\n";
  return out;
}

// ---- growth ----

inline json growth_to_json(const GrowthSeries& g) {
  json doc;
  doc["basepoint"] = ep_to_string(g.basepoint);
  doc["generating_set"] = g.generating_set;
  doc["truncated"] = g.truncated;
  json rows = json::array();
  for (const auto& row : g.rows) {
    json one;
    one["r"] = row.radius;
    one["gamma"] = row.ball_size;
    rows.push_back(one);
  }
  doc["rows"] = rows;
  return doc;
}

inline std::string growth_to_csv(const GrowthSeries& g) {
  std::string out = "r,gamma\n";
  for (const auto& row : g.rows)
    out += std::to_string(row.radius) + "," + std::to_string(row.ball_size) + "\n";
  return out;
}

}  // namespace agx
