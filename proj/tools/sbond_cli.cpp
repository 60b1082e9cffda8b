// sbond: domination, bondage and k-synchronous bondage numbers from the
// command line. Results are JSON lines on stdout; diagnostics go to stderr.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbond/bondage.hpp"
#include "sbond/bounds.hpp"
#include "sbond/domination.hpp"
#include "sbond/enumerate.hpp"
#include "sbond/error.hpp"
#include "sbond/family.hpp"
#include "sbond/io.hpp"
#include "sbond/verify.hpp"

using json = nlohmann::ordered_json;
using namespace sbond;

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailures = 1,
  kBadInput = 2,
  kInfeasible = 3,
  kBudget = 4,
};

struct GraphSource {
  std::string input_file;
  std::string gen;
  std::string graph6;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("--input", input_file, "Graph file (.g6 graph6, otherwise edge list)");
    auto* g = cmd->add_option("--gen", gen, "Generated family, e.g. path:7, cycle:5, complete:4, star:3, spider:2");
    auto* s = cmd->add_option("--graph6", graph6, "Inline graph6 string");
    file->excludes(g)->excludes(s);
    g->excludes(s);
  }

  std::string label() const {
    if (!input_file.empty()) return input_file;
    if (!gen.empty()) return gen;
    return graph6;
  }

  Graph load() const {
    if (!input_file.empty()) return read_graph_file(input_file);
    if (!gen.empty()) return generate(parse_family_spec(gen));
    if (!graph6.empty()) return parse_graph6(graph6);
    throw Error(ErrorKind::InvalidParam, "one of --input, --gen or --graph6 is required");
  }
};

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool enabled = true;

  double elapsed_ms() const {
    if (!enabled) return 0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

json edge_list_json(const Graph& g, const EdgeSet& es) {
  json out = json::array();
  for (std::size_t index : es) out.push_back({g.edge(index).u, g.edge(index).v});
  return out;
}

void emit(const json& record) { std::cout << record.dump() << '\n' << std::flush; }

json report_json(const SuiteReport& r, bool timing) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"graph", f.graph}, {"expected", f.expected}, {"actual", f.actual}});
  return {{"command", "verify"},  {"suite", r.suite},        {"cases_run", r.cases_run},
          {"cases_passed", r.cases_passed}, {"failures", failures}, {"notes", r.notes},
          {"wall_ms", timing ? r.wall_ms : 0.0}};
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InfeasibleIncrease: return kInfeasible;
    case ErrorKind::SearchBudgetExceeded:
    case ErrorKind::EnumerationCapExceeded: return kBudget;
    case ErrorKind::InvariantViolation: return kFailures;
    default: return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination, bondage and k-synchronous bondage numbers"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Report zero timings so output is byte-reproducible");

  GraphSource source;
  int k = 1;

  auto* gamma_cmd = app.add_subcommand("gamma", "Domination number with canonical minimum dominating set");
  source.attach(gamma_cmd);
  auto* bondage_cmd = app.add_subcommand("bondage", "Bondage number with canonical minimum bondage set");
  source.attach(bondage_cmd);
  auto* sbk_cmd = app.add_subcommand("sbk", "k-synchronous bondage number");
  source.attach(sbk_cmd);
  sbk_cmd->add_option("--k", k, "Required increase of the domination number")->required()->check(CLI::PositiveNumber);

  auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed form");
  std::string formula_name;
  int formula_n = 0;
  int formula_k = 1;
  int formula_d = 2;
  formula_cmd->add_option("family", formula_name, "path | path-bondage | path-sb2 | cycle | complete | vizing | tree")
      ->required()
      ->check(CLI::IsMember({"path", "path-bondage", "path-sb2", "cycle", "complete", "vizing", "tree"}));
  formula_cmd->add_option("--n", formula_n, "Order");
  formula_cmd->add_option("--k", formula_k, "Increase");
  formula_cmd->add_option("--d", formula_d, "Domination number (vizing)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite against exhaustive search");
  std::string suite;
  SuiteParams params;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required()->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--max-n", params.max_n, "Largest order searched exhaustively");
  verify_cmd->add_option("--max-k", params.max_k, "Largest increase k");
  verify_cmd->add_option("--samples", params.samples, "Random cases");
  verify_cmd->add_option("--sample-n", params.sample_n, "Order of sampled graphs (stepwise)");
  verify_cmd->add_option("--family-k", params.family_k, "Largest k for star/spider checks (trees)");
  verify_cmd->add_option("--seed", params.seed, "Random seed");
  verify_cmd->add_option("--threads", params.threads, "Worker threads (0 = all cores)");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive searches over labeled graphs");
  std::string property;
  int search_max_n = 5;
  int search_n = 0;
  std::size_t search_m = 0;
  int search_k = 1;
  int cap = kDefaultEnumerationCap;
  bool all_graphs = false;
  search_cmd->add_option("property", property, "sync-advantage | max-sbk")
      ->required()
      ->check(CLI::IsMember({"sync-advantage", "max-sbk"}));
  search_cmd->add_option("--max-n", search_max_n, "sync-advantage: largest order");
  search_cmd->add_flag("--all-graphs", all_graphs, "sync-advantage: include disconnected graphs");
  search_cmd->add_option("--n", search_n, "max-sbk: order");
  search_cmd->add_option("--m", search_m, "max-sbk: edge count");
  search_cmd->add_option("--k", search_k, "max-sbk: increase")->check(CLI::PositiveNumber);
  search_cmd->add_option("--cap", cap, "Enumeration cap on the order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  Clock clock;
  clock.enabled = !no_timing;
  const SearchLimits limits = SearchLimits::from_environment();
  params.limits = limits;

  try {
    if (*gamma_cmd) {
      const Graph g = source.load();
      const auto r = domination_number(g, limits);
      emit({{"command", "gamma"},
            {"input", source.label()},
            {"gamma", r.gamma},
            {"result", {{"gamma", r.gamma}, {"order", g.order()}, {"edges", g.size()}}},
            {"witness", r.witness.members()},
            {"elapsed_ms", clock.elapsed_ms()},
            {"budget_used", r.nodes}});
      return kOk;
    }
    if (*bondage_cmd || *sbk_cmd) {
      const Graph g = source.load();
      const bool bondage = bondage_cmd->parsed();
      const auto r = sb_k(g, bondage ? 1 : k, limits);
      const char* key = bondage ? "bondage" : "sbk";
      emit({{"command", key},
            {"input", source.label()},
            {key, r.size},
            {"result",
             {{"k", r.k}, {"size", r.size}, {"gamma_before", r.gamma_before}, {"gamma_after", r.gamma_after}}},
            {"witness", edge_list_json(g, r.witness)},
            {"elapsed_ms", clock.elapsed_ms()},
            {"budget_used", r.subsets_examined}});
      return kOk;
    }
    if (*formula_cmd) {
      std::size_t value = 0;
      json args = {{"n", formula_n}, {"k", formula_k}};
      if (formula_name == "path") value = sbk_path_formula(formula_n, formula_k);
      else if (formula_name == "path-bondage") value = bondage_path_formula(formula_n);
      else if (formula_name == "path-sb2") value = sb2_path_formula(formula_n);
      else if (formula_name == "cycle") value = sbk_cycle_formula(formula_n, formula_k);
      else if (formula_name == "complete") value = sbk_complete_formula(formula_n, formula_k);
      else if (formula_name == "vizing") {
        value = vizing_max_edges(formula_n, formula_d);
        args = {{"n", formula_n}, {"d", formula_d}};
      } else {
        const auto b = tree_bounds(formula_k);
        emit({{"command", "formula"},
              {"input", formula_name},
              {"result", {{"k", formula_k}, {"lower", b.lower}, {"upper", b.upper}}},
              {"witness", nullptr},
              {"elapsed_ms", clock.elapsed_ms()},
              {"budget_used", 0}});
        return kOk;
      }
      emit({{"command", "formula"},
            {"input", formula_name},
            {"result", {{"args", args}, {"value", value}}},
            {"witness", nullptr},
            {"elapsed_ms", clock.elapsed_ms()},
            {"budget_used", 0}});
      return kOk;
    }
    if (*verify_cmd) {
      std::vector<std::string> todo = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool all_ok = true;
      for (const auto& name : todo) {
        std::cerr << "verify " << name << " ...\n";
        const auto r = run_suite(name, params);
        all_ok = all_ok && r.ok();
        emit(report_json(r, !no_timing));
        std::cerr << "verify " << name << ": " << r.cases_passed << "/" << r.cases_run << " passed\n";
      }
      return all_ok ? kOk : kFailures;
    }
    if (*search_cmd) {
      if (property == "max-sbk") {
        const auto r = max_sbk_over_nm(search_n, search_m, search_k, limits, cap);
        json witnesses = json::array();
        for (const auto& g : r.witnesses) witnesses.push_back(to_graph6(g));
        emit({{"command", "search"},
              {"input", "max-sbk n=" + std::to_string(search_n) + " m=" + std::to_string(search_m) +
                            " k=" + std::to_string(search_k)},
              {"result",
               {{"max_value", r.max_value ? json(*r.max_value) : json(nullptr)},
                {"maximizer_count", r.maximizer_count},
                {"graphs_examined", r.graphs_examined},
                {"feasible_graphs", r.feasible_graphs}}},
              {"witness", witnesses},
              {"elapsed_ms", clock.elapsed_ms()},
              {"budget_used", r.graphs_examined}});
        return kOk;
      }
      SyncAdvantageScanner scanner(limits, [](const std::string& msg) { std::cerr << "skip: " << msg << '\n'; });
      std::size_t reported = 0;
      for (int n = 1; n <= search_max_n; ++n) {
        for (const auto& g : enumerate_labeled_graphs(n, !all_graphs, cap)) {
          scanner.consider(g);
          const auto& findings = scanner.report().findings;
          for (; reported < findings.size(); ++reported) {
            const auto& f = findings[reported];
            emit({{"command", "search"},
                  {"input", "sync-advantage"},
                  {"result", {{"sb2", f.sb2}, {"b", f.b}, {"b_mbg", f.b_mbg}, {"b_plus_bmbg", f.b_plus_bmbg}}},
                  {"witness", to_graph6(f.graph)},
                  {"elapsed_ms", clock.elapsed_ms()},
                  {"budget_used", scanner.report().examined}});
          }
        }
      }
      const auto& r = scanner.report();
      emit({{"command", "search"},
            {"input", "sync-advantage max_n=" + std::to_string(search_max_n)},
            {"result",
             {{"summary", true},
              {"examined", r.examined},
              {"skipped_infeasible", r.skipped_infeasible},
              {"budget_errors", r.budget_errors},
              {"findings", r.findings.size()}}},
            {"witness", nullptr},
            {"elapsed_ms", clock.elapsed_ms()},
            {"budget_used", r.examined}});
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}
