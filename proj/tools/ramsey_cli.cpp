// Command-line front end: densities, ratio certificates, W_eps scans, the ratio
// optimizer, the apex bound chain and the full verification checklist.
//
// Exit codes: 0 success, 1 internal error, 2 input error, 3 a certificate or
// check reports "violated", 4 term budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ramsey/commonness.hpp"
#include "ramsey/density.hpp"
#include "ramsey/error.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/neighborhood.hpp"
#include "ramsey/optimize.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/stepgraphon.hpp"
#include "ramsey/verify.hpp"

namespace {

using namespace ramsey;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitViolated = 3;
constexpr int kExitBudget = 4;

template <class S>
json scalar_json(const S& x) {
  if constexpr (ScalarTraits<S>::exact)
    return render(x);
  else
    return x;
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "brute") return Method::Brute;
  if (name == "forest") return Method::Forest;
  if (name == "closed") return Method::Closed;
  throw std::invalid_argument("unknown method '" + name + "'");
}

template <class S>
int run_density(const std::string& graph_path, const std::string& graphon_path, const DensityOptions& opts) {
  const Graph g = read_edge_list_file(graph_path);
  const auto w = read_graphon_file<S>(graphon_path);
  const auto report = mono_density(g, w, opts);
  json out{{"vertices", g.vertex_count()},
           {"edges", g.edge_count()},
           {"t_w", scalar_json(report.t_w)},
           {"t_comp", scalar_json(report.t_comp)},
           {"mono", scalar_json(report.mono)},
           {"backend", backend_name(report.backend)}};
  if constexpr (ScalarTraits<S>::exact) out["mono_approx"] = to_double(report.mono);
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

template <class S>
int run_ratio(const std::string& graphon_path, unsigned k) {
  const auto w = read_graphon_file<S>(graphon_path);
  const auto cert = ratio(w, k);
  std::cout << certificate_to_json(cert).dump(2) << '\n';
  return cert.verdict == Verdict::Holds ? kExitOk : kExitViolated;
}

template <class S>
int run_bounds(const std::string& tree_path, unsigned k, const std::string& graphon_path, std::uint64_t budget) {
  const Graph g = read_edge_list_file(tree_path);
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1)
    throw std::invalid_argument("bounds: graph must have n >= 2 vertices and n-1 edges");
  const auto w = read_graphon_file<S>(graphon_path);
  const unsigned nn = static_cast<unsigned>(n);
  const S bound = theorem_bound(nn, k, w);
  const S sidorenko = sidorenko_apex_lower_bound(nn, k, w);
  DensityOptions opts;
  opts.term_budget = budget;
  const S mono = mono_density(apex(g, k), w, opts).mono;
  const S target = S(1) / ipow(S(2), static_cast<unsigned>((k + 1) * n - 2));
  bool holds = false;
  if constexpr (ScalarTraits<S>::exact) {
    holds = bound <= sidorenko && sidorenko <= mono && mono >= target;
  } else {
    auto leq = [](double a, double b) { return a <= b + 1e-12 * std::max(std::fabs(a), std::fabs(b)); };
    holds = leq(bound, sidorenko) && leq(sidorenko, mono) && leq(target, mono);
  }
  json out{{"n", n},
           {"k", k},
           {"theorem_bound", scalar_json(bound)},
           {"sidorenko_bound", scalar_json(sidorenko)},
           {"apex_mono", scalar_json(mono)},
           {"target", scalar_json(target)},
           {"chain", holds ? "holds" : "violated"},
           {"backend", backend_name(ScalarTraits<S>::backend)}};
  std::cout << out.dump(2) << '\n';
  return holds ? kExitOk : kExitViolated;
}

std::vector<Rational> parse_eps_list(const std::string& text) {
  std::vector<Rational> grid;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) grid.push_back(parse_rational(item));
  if (grid.empty()) throw std::invalid_argument("empty --eps-list");
  return grid;
}

int run_scan(const std::string& eps_list, unsigned k_max, const std::string& out_path) {
  const ScanResult scan = eps_scan(parse_eps_list(eps_list), k_max);
  if (out_path.empty()) {
    write_scan_csv(std::cout, scan);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    write_scan_csv(out, scan);
  }
  json summary = json::array();
  for (const auto& s : scan.summary)
    summary.push_back({{"eps", render(s.eps)},
                       {"first_violation", s.first_violation ? json(*s.first_violation) : json(nullptr)}});
  std::cerr << summary.dump() << '\n';
  return kExitOk;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Step-graphon densities, star/book ratio certificates and apex bounds"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (default: $RAMSEY_THREADS or 1)");

  std::string backend = "f64";
  auto add_backend = [&](CLI::App* sub) {
    sub->add_option("--backend", backend, "scalar backend")->check(CLI::IsMember({"f64", "exact"}));
  };

  // density
  auto* density = app.add_subcommand("density", "t(G,W), t(G,1-W) and m(G,W)");
  std::string graph_path, graphon_path, method = "auto";
  std::uint64_t budget = 100'000'000;
  density->add_option("--graph", graph_path, "edge-list file")->required();
  density->add_option("--graphon", graphon_path, "graphon JSON file")->required();
  density->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "forest", "closed"}));
  density->add_option("--budget", budget, "maximum m^v(G) for enumeration");
  add_backend(density);

  // ratio
  auto* ratio_cmd = app.add_subcommand("ratio", "m(T_k,W)/m(S_k,W) against 2^-(k+1); exit 3 if violated");
  unsigned k = 1;
  ratio_cmd->add_option("--graphon", graphon_path)->required();
  ratio_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  add_backend(ratio_cmd);

  // scan
  auto* scan = app.add_subcommand("scan", "exact certificates on W_eps over an eps grid");
  std::string eps_list, out_path;
  unsigned k_max = 12;
  scan->add_option("--eps-list", eps_list, "comma-separated rationals, e.g. 0,1/20,1/8")->required();
  scan->add_option("--kmax", k_max)->check(CLI::PositiveNumber);
  scan->add_option("--out", out_path, "CSV output path (default: stdout)");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "search for graphons with a small star/book ratio");
  std::string config_path, trajectory_path;
  OptimizerConfig flag_cfg;
  std::string gradient_mode;
  optimize->add_option("--config", config_path, "optimizer config JSON");
  auto* opt_k = optimize->add_option("--k", flag_cfg.k);
  auto* opt_blocks = optimize->add_option("--blocks", flag_cfg.blocks);
  auto* opt_restarts = optimize->add_option("--restarts", flag_cfg.restarts);
  auto* opt_iters = optimize->add_option("--max-iters", flag_cfg.max_iters);
  auto* opt_step = optimize->add_option("--step", flag_cfg.step);
  auto* opt_fd = optimize->add_option("--fd-step", flag_cfg.fd_step);
  auto* opt_seed = optimize->add_option("--seed", flag_cfg.seed);
  auto* opt_grad = optimize->add_option("--gradient", gradient_mode)->check(CLI::IsMember({"forward", "central"}));
  optimize->add_option("--out", out_path, "result JSON path (default: stdout)");
  optimize->add_option("--trajectory", trajectory_path, "trajectory CSV path");

  // probe
  auto* probe = app.add_subcommand("probe", "best ratios found for k = 5..12");
  std::size_t probe_blocks = 4;
  unsigned probe_restarts = 8;
  std::uint64_t probe_seed = 1;
  probe->add_option("--blocks", probe_blocks);
  probe->add_option("--restarts", probe_restarts);
  probe->add_option("--seed", probe_seed);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "apex bound chain for an n-vertex graph with n-1 edges");
  std::string tree_path;
  bounds->add_option("--tree", tree_path, "edge-list file")->required();
  bounds->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--graphon", graphon_path)->required();
  bounds->add_option("--budget", budget);
  add_backend(bounds);

  // generate
  auto* generate = app.add_subcommand("generate", "write standard graphs and graphons");
  std::string kind;
  std::size_t size = 1;
  std::string param = "1/2";
  std::uint64_t seed = 1;
  generate->add_option("kind", kind, "star|book|path|complete|tree|apex-path|weps|constant|random|two-cliques")
      ->required();
  generate->add_option("--size", size, "k for star/book/apex-path, n for path/complete/tree, m for random");
  generate->add_option("--apex", k, "apex count for apex-path");
  generate->add_option("--param", param, "eps for weps, p for constant");
  generate->add_option("--seed", seed);
  add_backend(generate);

  auto* verify = app.add_subcommand("verify", "run the full verification checklist");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (threads > 0) set_thread_count(threads);
  const bool exact = backend == "exact";

  try {
    if (density->parsed()) {
      DensityOptions opts;
      opts.term_budget = budget;
      opts.method = parse_method(method);
      return exact ? run_density<Rational>(graph_path, graphon_path, opts)
                   : run_density<double>(graph_path, graphon_path, opts);
    }
    if (ratio_cmd->parsed()) return exact ? run_ratio<Rational>(graphon_path, k) : run_ratio<double>(graphon_path, k);
    if (scan->parsed()) return run_scan(eps_list, k_max, out_path);
    if (bounds->parsed())
      return exact ? run_bounds<Rational>(tree_path, k, graphon_path, budget)
                   : run_bounds<double>(tree_path, k, graphon_path, budget);
    if (optimize->parsed()) {
      OptimizerConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config '" + config_path + "'");
        json j;
        try {
          in >> j;
        } catch (const json::parse_error& e) {
          throw std::invalid_argument(std::string("config: ") + e.what());
        }
        cfg = config_from_json(j);
      }
      if (opt_k->count()) cfg.k = flag_cfg.k;
      if (opt_blocks->count()) cfg.blocks = flag_cfg.blocks;
      if (opt_restarts->count()) cfg.restarts = flag_cfg.restarts;
      if (opt_iters->count()) cfg.max_iters = flag_cfg.max_iters;
      if (opt_step->count()) cfg.step = flag_cfg.step;
      if (opt_fd->count()) cfg.fd_step = flag_cfg.fd_step;
      if (opt_seed->count()) cfg.seed = flag_cfg.seed;
      if (opt_grad->count()) cfg.gradient = gradient_mode == "central" ? GradientMode::Central : GradientMode::Forward;
      const OptResult result = minimize_ratio(cfg);
      json out = result_to_json(result);
      out["config"] = config_to_json(cfg);
      if (out_path.empty())
        std::cout << out.dump(2) << '\n';
      else
        write_text(out_path, out.dump(2) + "\n");
      if (!trajectory_path.empty()) {
        std::ostringstream csv;
        write_trajectory_csv(csv, result);
        write_text(trajectory_path, csv.str());
      }
      return kExitOk;
    }
    if (probe->parsed()) {
      json rows = json::array();
      for (const auto& row : probe_open_range(probe_blocks, probe_restarts, probe_seed))
        rows.push_back({{"k", row.k},
                        {"restart", row.result.restart},
                        {"certificate", certificate_to_json(row.result.certificate)},
                        {"exact_certificate", certificate_to_json(row.result.exact_certificate)}});
      std::cout << rows.dump(2) << '\n';
      return kExitOk;
    }
    if (generate->parsed()) {
      if (kind == "star" || kind == "book" || kind == "path" || kind == "complete" || kind == "tree" ||
          kind == "apex-path") {
        Graph g;
        if (kind == "star") g = star(size);
        if (kind == "book") g = book(size);
        if (kind == "path") g = path(size);
        if (kind == "complete") g = complete(size);
        if (kind == "tree") g = random_tree(size, seed);
        if (kind == "apex-path") g = apex(path(size), k);
        write_edge_list(std::cout, g);
        return kExitOk;
      }
      auto emit = [&](auto w) { std::cout << graphon_to_json(w).dump() << '\n'; };
      if (kind == "weps") {
        const Rational eps = parse_rational(param);
        exact ? emit(w_epsilon(eps)) : emit(w_epsilon(eps.get_d()));
      } else if (kind == "constant") {
        const Rational p = parse_rational(param);
        exact ? emit(constant(p)) : emit(constant(p.get_d()));
      } else if (kind == "random") {
        exact ? emit(random_step_graphon<Rational>(size, seed)) : emit(random_step_graphon<double>(size, seed));
      } else if (kind == "two-cliques") {
        exact ? emit(two_cliques<Rational>()) : emit(two_cliques<double>());
      } else {
        throw std::invalid_argument("unknown kind '" + kind + "'");
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      const VerifyReport report = run_verification();
      print_report(std::cout, report);
      return report.passed() ? kExitOk : kExitViolated;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InconsistentWithLemma& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
