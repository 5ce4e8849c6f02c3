#include <CLI11.hpp>
#include <iostream>
#include <memory>
#include <optional>

#include "bisetcover/connectivity.hpp"
#include "bisetcover/crossing_cover.hpp"
#include "bisetcover/errors.hpp"
#include "bisetcover/exact.hpp"
#include "bisetcover/generators.hpp"
#include "bisetcover/json_io.hpp"
#include "bisetcover/primal_dual.hpp"

using namespace bisetcover;

namespace {

enum Exit { kOk = 0, kInfeasible = 2, kUsage = 3, kInvariant = 4 };

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

// Exact tau is attempted only when the dense simplex stays small.
std::optional<Rational> small_tau(const ExplicitFamily& family, const Digraph& graph) {
  if (family.size() > 800 || graph.size() > 90) return std::nullopt;
  return tau_lp(family, graph);
}

struct SolveArgs {
  std::string family;
  std::string graph;
  std::string algo = "log";
  std::optional<int> k;
  std::optional<int> q;
  int s = 0;
};

int solve_family(const SolveArgs& a) {
  const ExplicitFamily family = family_from_json(read_json_file(a.family));
  const Digraph graph = graph_from_json(read_json_file(a.graph));
  const auto oracle = std::make_shared<ExplicitFamily>(family);
  Json out;
  EdgeSet chosen;
  const std::optional<Rational> tau = small_tau(family, graph);
  if (a.algo == "pd") {
    const PdResult r = semi_intersecting_cover(*oracle, graph, a.q);
    out = to_json(r);
    chosen = r.edges;
    out["dual_audit"] = to_json(verify_dual(family, graph, r.dual, r.edges, r.maintained, tau));
  } else {
    CoverResult r;
    if (a.algo == "log") {
      r = cover_crossing_log(oracle, graph);
    } else if (a.algo == "regular" || a.algo == "gamma") {
      if (!a.k) throw UsageError("--k is required for --algo " + a.algo);
      r = a.algo == "regular" ? cover_crossing_regular(oracle, graph, *a.k) : cover_crossing_gamma(oracle, graph, *a.k);
    } else if (a.algo == "baseline") {
      r = decompose_baseline(oracle, graph, a.s);
    } else {
      throw UsageError("unknown algorithm " + a.algo);
    }
    out = to_json(r);
    chosen = r.edges;
    if (tau) out["within_bound"] = r.cost <= r.ratio_bound * *tau;
  }
  out["tau"] = tau ? Json(to_string(*tau)) : Json(nullptr);
  if (a.algo != "pd") out["cover_audit"] = to_json(verify_cover(family, graph, chosen));
  emit(out);
  return kOk;
}

int run_augment(const std::string& graph_path, const std::string& candidates_path, int ell) {
  Digraph base = graph_from_json(read_json_file(graph_path));
  const Digraph candidates = graph_from_json(read_json_file(candidates_path));
  const CoverResult r = augment({base, candidates, ell});
  Json out = to_json(r);
  std::vector<Arc> arcs = base.arcs();
  for (const Arc& x : candidates.arcs(r.edges)) arcs.push_back(x);
  out["connected"] = is_k_connected(base.n(), arcs, ell + 1);
  out["connectivity_target"] = ell + 1;
  if (base.n() <= 7) {
    const std::optional<Rational> tau = small_tau(tight_biset_family(base, ell), candidates);
    out["tau"] = tau ? Json(to_string(*tau)) : Json(nullptr);
  } else {
    out["tau"] = nullptr;
  }
  emit(out);
  return kOk;
}

int run_kcss(const std::string& graph_path, int k, bool opt_k) {
  const Digraph graph = graph_from_json(read_json_file(graph_path));
  const LadderResult r = k_connected_subgraph(graph, k, opt_k);
  Json out = to_json(r);
  out["connected"] = is_k_connected(graph.n(), graph.arcs(r.edges), k);
  emit(out);
  return kOk;
}

int run_verify(const std::string& result_path, const std::string& family_path, const std::string& graph_path) {
  const ExplicitFamily family = family_from_json(read_json_file(family_path));
  const Digraph graph = graph_from_json(read_json_file(graph_path));
  const EdgeSet chosen = edges_from_json(read_json_file(result_path), graph);
  const Audit a = verify_cover(family, graph, chosen);
  Json out{{"cover_audit", to_json(a)}, {"cost", to_string(graph.cost(chosen))}};
  emit(out);
  return a.ok() ? kOk : kInfeasible;
}

int run_exact(const std::string& family_path, const std::string& graph_path) {
  const ExplicitFamily family = family_from_json(read_json_file(family_path));
  const Digraph graph = graph_from_json(read_json_file(graph_path));
  emit(to_json(exact_report(family, graph)));
  return kOk;
}

struct GenArgs {
  std::string kind;
  int n = 4;
  std::uint64_t seed = 1;
  int k = 1;
  int q = 1;
  int ell = 1;
  int size = 4;
};

int run_gen(const GenArgs& a) {
  if (a.kind == "crossing") {
    emit(to_json(gen_crossing_family(a.n, a.seed, a.size)));
  } else if (a.kind == "intersecting") {
    emit(to_json(gen_intersecting_family(a.n, a.seed, a.size)));
  } else if (a.kind == "semi") {
    emit(to_json(gen_semi_intersecting_family(a.n, a.q, a.seed, a.size)));
  } else if (a.kind == "regular") {
    emit(to_json(gen_regular_family(a.n, a.k, a.seed, a.size)));
  } else if (a.kind == "digraph") {
    emit(to_json(gen_ell_connected_digraph(a.n, a.ell, a.seed)));
  } else if (a.kind == "candidates") {
    emit(to_json(gen_candidate_edges(a.n, a.seed)));
  } else {
    throw UsageError("unknown kind " + a.kind);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biset-family edge-cover solvers and verifiers"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve-family", "Cover an explicit biset family");
  solve_cmd->add_option("--family", solve.family)->required();
  solve_cmd->add_option("--graph", solve.graph)->required();
  solve_cmd->add_option("--algo", solve.algo)->check(CLI::IsMember({"log", "regular", "gamma", "baseline", "pd"}));
  solve_cmd->add_option("--k", solve.k);
  solve_cmd->add_option("--q", solve.q);
  solve_cmd->add_option("--s", solve.s, "baseline start node");

  std::string graph_path;
  std::string candidates_path;
  int ell = 0;
  auto* augment_cmd = app.add_subcommand("augment", "Raise connectivity of G0 by one");
  augment_cmd->add_option("--graph", graph_path)->required();
  augment_cmd->add_option("--candidates", candidates_path)->required();
  augment_cmd->add_option("--ell", ell)->required();

  int k = 0;
  bool opt_k = false;
  auto* kcss_cmd = app.add_subcommand("kcss", "k-connected spanning subgraph by levels");
  kcss_cmd->add_option("--graph", graph_path)->required();
  kcss_cmd->add_option("--k", k)->required();
  kcss_cmd->add_flag("--opt-k", opt_k, "solve the biset LP lower bound (n <= 7)");

  std::string result_path;
  std::string family_path;
  auto* verify_cmd = app.add_subcommand("verify", "Audit that a result covers a family");
  verify_cmd->add_option("--result", result_path)->required();
  verify_cmd->add_option("--family", family_path)->required();
  verify_cmd->add_option("--graph", graph_path)->required();

  auto* exact_cmd = app.add_subcommand("exact", "Exact optimum and LP value");
  exact_cmd->add_option("--family", family_path)->required();
  exact_cmd->add_option("--graph", graph_path)->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"crossing", "intersecting", "semi", "regular", "digraph", "candidates"}));
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--q", gen.q);
  gen_cmd->add_option("--ell", gen.ell);
  gen_cmd->add_option("--size", gen.size);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return solve_family(solve);
    if (*augment_cmd) return run_augment(graph_path, candidates_path, ell);
    if (*kcss_cmd) return run_kcss(graph_path, k, opt_k);
    if (*verify_cmd) return run_verify(result_path, family_path, graph_path);
    if (*exact_cmd) return run_exact(family_path, graph_path);
    if (*gen_cmd) return run_gen(gen);
  } catch (const InfeasibleError& e) {
    Json out = error_json("infeasible", e.what());
    out["witness"] = e.witness() ? to_json(*e.witness()) : Json(nullptr);
    emit(out);
    return kInfeasible;
  } catch (const UsageError& e) {
    emit(error_json("usage", e.what()));
    return kUsage;
  } catch (const InvariantViolation& e) {
    emit(error_json("invariant", e.what()));
    return kInvariant;
  }
  return kUsage;
}
