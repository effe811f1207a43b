#include "ramsey/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>

#include "ramsey/error.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

constexpr double kWeightFloor = 1e-9;
constexpr double kStepFloor = 1e-12;

std::size_t param_count(std::size_t m) { return m + m * (m + 1) / 2; }

// Index of value (i, j), i <= j, in the parameter vector.
std::size_t value_index(std::size_t m, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return m + i * (2 * m - i + 1) / 2 + (j - i);
}

// Euclidean projection of v onto {x : x_i >= floor, sum x = 1}.
void project_weights(std::vector<double>& v) {
  const std::size_t m = v.size();
  const double budget = 1.0 - static_cast<double>(m) * kWeightFloor;
  std::vector<double> shifted(m);
  for (std::size_t i = 0; i < m; ++i) shifted[i] = v[i] - kWeightFloor;
  std::vector<double> sorted = shifted;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    cumulative += sorted[i];
    const double candidate = (cumulative - budget) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0.0) theta = candidate;
  }
  for (std::size_t i = 0; i < m; ++i) v[i] = std::max(shifted[i] - theta, 0.0) + kWeightFloor;
  // Absorb the rounding residue into the heaviest block.
  const std::size_t heaviest = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  double rest = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (i != heaviest) rest += v[i];
  v[heaviest] = 1.0 - rest;
}

// Symmetry is structural (upper triangle only); then clamp, then simplex.
std::vector<double> project(std::size_t m, std::vector<double> params) {
  for (std::size_t i = m; i < params.size(); ++i) params[i] = std::clamp(params[i], 0.0, 1.0);
  std::vector<double> weights(params.begin(), params.begin() + static_cast<long>(m));
  project_weights(weights);
  std::copy(weights.begin(), weights.end(), params.begin());
  return params;
}

StepGraphon<double> to_graphon(std::size_t m, const std::vector<double>& params) {
  std::vector<double> weights(params.begin(), params.begin() + static_cast<long>(m));
  std::vector<std::vector<double>> values(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) values[i][j] = params[value_index(m, i, j)];
  return StepGraphon<double>(std::move(weights), std::move(values));
}

std::vector<double> gradient(std::size_t m, const std::vector<double>& x, unsigned k, GradientMode mode,
                             double h) {
  std::vector<double> g(x.size());
  const double base = mode == GradientMode::Forward ? ratio_at(m, x, k) : 0.0;
  std::vector<double> probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = ratio_at(m, probe, k);
    if (mode == GradientMode::Forward) {
      g[i] = (up - base) / h;
    } else {
      probe[i] = x[i] - h;
      g[i] = (up - ratio_at(m, probe, k)) / (2.0 * h);
    }
    probe[i] = x[i];
  }
  return g;
}

StepGraphon<double> reshape(const StepGraphon<double>& w, std::size_t m) {
  StepGraphon<double> out = w;
  // Refine by splitting the last block, or truncate and renormalize.
  while (out.blocks() < m) out = split_block(out, out.blocks() - 1);
  if (out.blocks() > m) {
    std::vector<double> weights(out.weights().begin(), out.weights().begin() + static_cast<long>(m));
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (auto& a : weights) a /= total;
    std::vector<std::vector<double>> values(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) values[i][j] = out.value(i, j);
    std::vector<double> params(param_count(m));
    std::copy(weights.begin(), weights.end(), params.begin());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) params[value_index(m, i, j)] = values[i][j];
    return to_graphon(m, project(m, params));
  }
  return out;
}

StepGraphon<double> initial_graphon(const OptimizerConfig& cfg, unsigned restart) {
  const std::size_t m = cfg.blocks;
  if (restart == 0) {
    std::vector<double> params(param_count(m), 0.5);
    for (std::size_t i = 0; i < m; ++i) params[i] = 1.0 / static_cast<double>(m);
    return to_graphon(m, project(m, params));
  }
  if (restart == 1) return reshape(w_epsilon(1.0 / 20.0), m);
  return random_step_graphon<double>(m, cfg.seed * 1'000'003ULL + restart);
}

struct RestartRun {
  StepGraphon<double> graphon;
  RatioCertificate<double> certificate;
  std::vector<std::pair<unsigned, double>> trajectory;
};

RestartRun run_restart(const OptimizerConfig& cfg, unsigned restart) {
  const std::size_t m = cfg.blocks;
  std::vector<double> x = graphon_params(initial_graphon(cfg, restart));
  x = project(m, x);
  StepGraphon<double> current = to_graphon(m, x);
  RatioCertificate<double> cert = ratio(current, cfg.k);
  std::vector<std::pair<unsigned, double>> trajectory{{0U, cert.ratio}};
  double step = cfg.step;
  for (unsigned iter = 1; iter <= cfg.max_iters; ++iter) {
    const std::vector<double> g = gradient(m, x, cfg.k, cfg.gradient, cfg.fd_step);
    double scale = 0.0;
    for (double gi : g) scale = std::max(scale, std::fabs(gi));
    if (!(scale > 0.0) || !std::isfinite(scale)) break;
    bool accepted = false;
    while (step >= kStepFloor) {
      std::vector<double> trial(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - step * g[i] / scale;
      trial = project(m, std::move(trial));
      StepGraphon<double> candidate = to_graphon(m, trial);  // validates every iterate
      RatioCertificate<double> trial_cert = ratio(candidate, cfg.k);
      if (trial_cert.ratio < cert.ratio) {
        x = std::move(trial);
        current = std::move(candidate);
        cert = trial_cert;
        step = std::min(2.0 * step, cfg.step);
        accepted = true;
        break;
      }
      step /= 2.0;
    }
    if (!accepted) break;
    trajectory.emplace_back(iter, cert.ratio);
  }
  if (cfg.k <= 5) lemma_check(current, cfg.k);
  return {std::move(current), cert, std::move(trajectory)};
}

}  // namespace

void OptimizerConfig::validate() const {
  if (k < 1) throw ConfigInvalid("k must be >= 1");
  if (blocks < 1) throw ConfigInvalid("blocks must be >= 1");
  if (restarts < 1) throw ConfigInvalid("restarts must be >= 1");
  if (max_iters < 1) throw ConfigInvalid("max_iters must be >= 1");
  if (!(step > 0.0) || !std::isfinite(step)) throw ConfigInvalid("step must be > 0");
  if (!(fd_step > 0.0) || !std::isfinite(fd_step)) throw ConfigInvalid("fd_step must be > 0");
  if (rational_denominator < 1) throw ConfigInvalid("rational_denominator must be >= 1");
  if (static_cast<double>(blocks) * kWeightFloor >= 1.0) throw ConfigInvalid("too many blocks");
}

nlohmann::json config_to_json(const OptimizerConfig& cfg) {
  return {{"k", cfg.k},
          {"blocks", cfg.blocks},
          {"restarts", cfg.restarts},
          {"max_iters", cfg.max_iters},
          {"step", cfg.step},
          {"gradient", cfg.gradient == GradientMode::Forward ? "forward" : "central"},
          {"fd_step", cfg.fd_step},
          {"seed", cfg.seed},
          {"rational_denominator", cfg.rational_denominator}};
}

OptimizerConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigInvalid("optimizer config must be a JSON object");
  OptimizerConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "k")
        cfg.k = value.get<unsigned>();
      else if (key == "blocks")
        cfg.blocks = value.get<std::size_t>();
      else if (key == "restarts")
        cfg.restarts = value.get<unsigned>();
      else if (key == "max_iters")
        cfg.max_iters = value.get<unsigned>();
      else if (key == "step")
        cfg.step = value.get<double>();
      else if (key == "fd_step")
        cfg.fd_step = value.get<double>();
      else if (key == "seed")
        cfg.seed = value.get<std::uint64_t>();
      else if (key == "rational_denominator")
        cfg.rational_denominator = value.get<long>();
      else if (key == "gradient") {
        const auto mode = value.get<std::string>();
        if (mode == "forward")
          cfg.gradient = GradientMode::Forward;
        else if (mode == "central")
          cfg.gradient = GradientMode::Central;
        else
          throw ConfigInvalid("gradient must be \"forward\" or \"central\"");
      } else {
        throw ConfigInvalid("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigInvalid(e.what());
  }
  cfg.validate();
  return cfg;
}

double ratio_at(std::size_t m, const std::vector<double>& params, unsigned k) {
  // Same closed forms as density.cpp, written on raw parameters so finite
  // differences may leave the simplex and the unit box.
  auto a = [&](std::size_t i) { return params[i]; };
  auto value = [&](std::size_t i, std::size_t j) { return params[value_index(m, i, j)]; };
  double total_weight = 0.0;
  for (std::size_t i = 0; i < m; ++i) total_weight += a(i);
  double star = 0.0, book = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double degree = 0.0;
    for (std::size_t j = 0; j < m; ++j) degree += a(j) * value(i, j);
    star += a(i) * (std::pow(degree, k) + std::pow(total_weight - degree, k));
    for (std::size_t j = 0; j < m; ++j) {
      double codegree = 0.0, co_codegree = 0.0;
      for (std::size_t l = 0; l < m; ++l) {
        codegree += a(l) * value(i, l) * value(j, l);
        co_codegree += a(l) * (1.0 - value(i, l)) * (1.0 - value(j, l));
      }
      book += a(i) * a(j) * (value(i, j) * std::pow(codegree, k) + (1.0 - value(i, j)) * std::pow(co_codegree, k));
    }
  }
  return book / star;
}

std::vector<double> graphon_params(const StepGraphon<double>& w) {
  const std::size_t m = w.blocks();
  std::vector<double> params(param_count(m));
  for (std::size_t i = 0; i < m; ++i) params[i] = w.weight(i);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) params[value_index(m, i, j)] = w.value(i, j);
  return params;
}

double gradient_check(const StepGraphon<double>& w, unsigned k, double fd_step) {
  const std::vector<double> x = graphon_params(w);
  const auto forward = gradient(w.blocks(), x, k, GradientMode::Forward, fd_step);
  const auto central = gradient(w.blocks(), x, k, GradientMode::Central, fd_step);
  double deviation = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) deviation = std::max(deviation, std::fabs(forward[i] - central[i]));
  return deviation;
}

OptResult minimize_ratio(const OptimizerConfig& cfg) {
  cfg.validate();
  std::vector<std::optional<RestartRun>> runs(cfg.restarts);
  parallel_for(cfg.restarts, [&](std::size_t r) { runs[r] = run_restart(cfg, static_cast<unsigned>(r)); });
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r]->certificate.ratio < runs[best]->certificate.ratio) best = r;
  RestartRun& winner = *runs[best];
  StepGraphon<Rational> rational = rationalize(winner.graphon, cfg.rational_denominator);
  RatioCertificate<Rational> exact = ratio(rational, cfg.k);
  return OptResult{std::move(winner.graphon), winner.certificate, std::move(winner.trajectory),
                   static_cast<unsigned>(best), std::move(rational), std::move(exact)};
}

std::vector<ProbeRow> probe_open_range(std::size_t blocks, unsigned restarts, std::uint64_t seed, unsigned max_iters) {
  std::vector<ProbeRow> rows;
  for (unsigned k = 5; k <= 12; ++k) {
    OptimizerConfig cfg;
    cfg.k = k;
    cfg.blocks = blocks;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.max_iters = max_iters;
    rows.push_back({k, minimize_ratio(cfg)});
  }
  return rows;
}

nlohmann::json result_to_json(const OptResult& result) {
  return {{"graphon", graphon_to_json(result.graphon)},
          {"certificate", certificate_to_json(result.certificate)},
          {"restart", result.restart},
          {"iterations", result.trajectory.empty() ? 0U : result.trajectory.back().first},
          {"rational_graphon", graphon_to_json(result.rational_graphon)},
          {"exact_certificate", certificate_to_json(result.exact_certificate)}};
}

void write_trajectory_csv(std::ostream& out, const OptResult& result) {
  out << "iteration,ratio\n";
  for (const auto& [iter, value] : result.trajectory) out << iter << ',' << shortest_decimal(value) << '\n';
}

}  // namespace ramsey
