#pragma once

// Projected-gradient search for step graphons with a small book/star ratio
// m(T_k, W) / m(S_k, W).

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ramsey/commonness.hpp"
#include "ramsey/stepgraphon.hpp"

namespace ramsey {

enum class GradientMode { Forward, Central };

struct OptimizerConfig {
  unsigned k = 12;
  std::size_t blocks = 4;
  unsigned restarts = 8;
  unsigned max_iters = 300;
  double step = 0.05;  // initial and maximal step along the sup-normalized gradient
  GradientMode gradient = GradientMode::Forward;
  double fd_step = 1e-7;
  std::uint64_t seed = 1;
  long rational_denominator = 10'000;  // for exact re-verification of the winner

  // Throws ConfigInvalid.
  void validate() const;
};

nlohmann::json config_to_json(const OptimizerConfig& cfg);
// Missing keys keep their defaults. Throws ConfigInvalid.
OptimizerConfig config_from_json(const nlohmann::json& j);

struct OptResult {
  StepGraphon<double> graphon;
  RatioCertificate<double> certificate;
  std::vector<std::pair<unsigned, double>> trajectory;  // accepted iterates of the winning restart
  unsigned restart = 0;
  // Winner rounded to a rational graphon and certified exactly.
  StepGraphon<Rational> rational_graphon;
  RatioCertificate<Rational> exact_certificate;
};

/// Restart 0 starts from the constant 1/2 graphon, restart 1 from W_{1/20}
/// reshaped to `blocks` blocks, the rest from seeded random graphons. Each step
/// moves against the finite-difference gradient, projects (clamp values to
/// [0,1], weights onto the simplex with a 1e-9 floor) and halves the step until
/// the ratio decreases; a step below 1e-12 ends the restart. Restarts may run in
/// parallel; the winner is the smallest ratio, ties to the lower index. For
/// k <= 5 a violated final certificate throws InconsistentWithLemma.
OptResult minimize_ratio(const OptimizerConfig& cfg);

/// Max componentwise difference between forward and central difference
/// gradients of the ratio at w (parameters: weights, then upper-triangle values).
double gradient_check(const StepGraphon<double>& w, unsigned k, double fd_step = 1e-5);

/// Raw ratio as a polynomial function of unconstrained parameters; exposed for
/// derivative tests. Parameters as in gradient_check.
double ratio_at(std::size_t blocks, const std::vector<double>& params, unsigned k);
std::vector<double> graphon_params(const StepGraphon<double>& w);

struct ProbeRow {
  unsigned k;
  OptResult result;
};

/// minimize_ratio for k = 5 (control) and 6..12.
std::vector<ProbeRow> probe_open_range(std::size_t blocks, unsigned restarts, std::uint64_t seed,
                                       unsigned max_iters = 300);

nlohmann::json result_to_json(const OptResult& result);
void write_trajectory_csv(std::ostream& out, const OptResult& result);

}  // namespace ramsey
