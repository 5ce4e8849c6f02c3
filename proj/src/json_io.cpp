#include "bisetcover/json_io.hpp"

#include <fstream>

#include "bisetcover/errors.hpp"

namespace bisetcover {

namespace {

Json rational(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw UsageError("rational must be a \"p/q\" string or an integer");
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("field \"") + key + "\": " + e.what());
  }
}

Json edges(const EdgeSet& s) { return Json(s); }

}  // namespace

Json to_json(const NodeSet& s) { return Json(s.to_vector()); }

Json to_json(const Biset& b) { return Json{{"inner", to_json(b.inner())}, {"outer", to_json(b.outer())}}; }

Json to_json(const Digraph& g) {
  Json list = Json::array();
  for (const Edge& e : g.edges()) list.push_back({{"tail", e.tail}, {"head", e.head}, {"cost", rational(e.cost)}});
  return Json{{"n", g.n()}, {"edges", std::move(list)}};
}

Json to_json(const ExplicitFamily& f) {
  Json list = Json::array();
  for (const Biset& b : f.members()) list.push_back(to_json(b));
  return Json{{"n", f.ground_size()}, {"bisets", std::move(list)}};
}

Json to_json(const DualSolution& y) {
  Json list = Json::array();
  for (const DualEntry& d : y.entries) list.push_back({{"biset", to_json(d.biset)}, {"value", rational(d.value)}});
  return list;
}

Json to_json(const PdResult& r) {
  Json maintained = Json::array();
  for (const Biset& b : r.maintained) maintained.push_back(to_json(b));
  Json residual = Json::array();
  for (const Biset& b : r.residual_cores) residual.push_back(to_json(b));
  return Json{{"algorithm", "pd"},
              {"edges", edges(r.edges)},
              {"cost", rational(r.cost)},
              {"dual", to_json(r.dual)},
              {"dual_value", rational(r.dual.value())},
              {"maintained", std::move(maintained)},
              {"phase1_edges", Json(r.phase1_edges)},
              {"residual_cores", std::move(residual)}};
}

Json to_json(const CoverResult& r) {
  Json trace = Json::array();
  for (const TraceEntry& t : r.trace) {
    Json entry{{"step", t.step}};
    entry["core"] = t.core ? to_json(*t.core) : Json(nullptr);
    entry["cost"] = rational(t.cost);
    entry["cores_before"] = t.cores_before;
    entry["cores_after"] = t.cores_after;
    trace.push_back(std::move(entry));
  }
  return Json{{"algorithm", r.algorithm},
              {"edges", edges(r.edges)},
              {"cost", rational(r.cost)},
              {"ratio_bound", rational(r.ratio_bound)},
              {"trace", std::move(trace)}};
}

Json to_json(const ExactReport& r) {
  Json support = Json::array();
  for (const auto& [e, x] : r.lp_support) support.push_back({{"edge", e}, {"x", rational(x)}});
  return Json{{"opt_integral", rational(r.opt_integral)},
              {"optimal_edges", edges(r.optimal_edges)},
              {"tau_fractional", rational(r.tau_fractional)},
              {"lp_support", std::move(support)},
              {"lp_dual", to_json(r.lp_dual)},
              {"verified", {{"tau_le_opt", r.tau_le_opt}, {"dual_matches_tau", r.dual_matches_tau}}}};
}

Json to_json(const LadderResult& r) {
  Json levels = Json::array();
  for (const LadderLevel& l : r.levels) {
    levels.push_back({{"ell", l.ell},
                      {"edges", edges(l.edges)},
                      {"cost", rational(l.cost)},
                      {"ratio_bound", rational(l.ratio_bound)}});
  }
  Json j{{"k", r.k},
         {"edges", edges(r.edges)},
         {"cost", rational(r.cost)},
         {"levels", std::move(levels)},
         {"sum_bound", rational(r.sum_bound)},
         {"harmonic_bound", rational(r.harmonic_bound)}};
  j["opt_k"] = r.opt_k ? Json(rational(*r.opt_k)) : Json(nullptr);
  return j;
}

Json to_json(const Audit& a) {
  Json j{{"ok", a.ok()}, {"violations", Json(a.violations)}};
  j["witness"] = a.witness ? to_json(*a.witness) : Json(nullptr);
  return j;
}

NodeSet node_set_from_json(const Json& j, int n) {
  if (!j.is_array()) throw UsageError("node set must be an array");
  NodeSet s;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw UsageError("node ids must be integers");
    const int node = v.get<int>();
    if (node < 0 || node >= n) throw UsageError("node " + std::to_string(node) + " out of range");
    s.insert(node);
  }
  return s;
}

Biset biset_from_json(const Json& j, int n) {
  if (!j.is_object() || !j.contains("inner") || !j.contains("outer")) {
    throw UsageError("biset needs \"inner\" and \"outer\"");
  }
  return Biset(n, node_set_from_json(j["inner"], n), node_set_from_json(j["outer"], n));
}

Digraph graph_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  GroundSet ground(n);
  Digraph g(n);
  if (!j.contains("edges")) return g;
  if (!j["edges"].is_array()) throw UsageError("\"edges\" must be an array");
  for (const Json& e : j["edges"]) {
    const Rational cost = e.contains("cost") ? rational_from_json(e["cost"]) : Rational(0);
    g.add_edge(field<int>(e, "tail"), field<int>(e, "head"), cost);
  }
  return g;
}

ExplicitFamily family_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  GroundSet ground(n);
  if (!j.contains("bisets") || !j["bisets"].is_array()) throw UsageError("family needs a \"bisets\" array");
  std::vector<Biset> members;
  for (const Json& b : j["bisets"]) members.push_back(biset_from_json(b, n));
  return ExplicitFamily(n, std::move(members));
}

EdgeSet edges_from_json(const Json& j, const Digraph& g) {
  const auto list = field<std::vector<long long>>(j, "edges");
  EdgeSet out;
  for (long long e : list) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.size()) throw UsageError("edge index " + std::to_string(e) + " out of range");
    out.push_back(static_cast<std::size_t>(e));
  }
  return normalized(out);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

}  // namespace bisetcover
