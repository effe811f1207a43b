#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ramsey/commonness.hpp"
#include "ramsey/error.hpp"
#include "ramsey/optimize.hpp"

using namespace ramsey;

namespace {

OptimizerConfig small_config(unsigned k, std::size_t blocks, unsigned restarts, std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.k = k;
  cfg.blocks = blocks;
  cfg.restarts = restarts;
  cfg.seed = seed;
  cfg.max_iters = 60;
  return cfg;
}

StepGraphon<double> jittered_half(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  std::vector<double> weights(m, 1.0 / static_cast<double>(m));
  std::vector<std::vector<double>> values(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) values[i][j] = values[j][i] = 0.5 + noise(rng);
  return StepGraphon<double>(weights, values);
}

}  // namespace

TEST_SUITE("optimize") {

TEST_CASE("parameters round trip through ratio_at") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = random_step_graphon<double>(1 + seed % 5, seed);
    const auto x = graphon_params(w);
    const std::size_t m = w.blocks();
    CHECK(x.size() == m + m * (m + 1) / 2);
    for (unsigned k = 1; k <= 8; ++k)
      CHECK(ratio_at(m, x, k) == doctest::Approx(ratio(w, k).ratio).epsilon(1e-12));
  }
}

TEST_CASE("gradient hygiene") {
  CHECK(gradient_check(jittered_half(3, 1), 2) <= 1e-4);
  CHECK(gradient_check(jittered_half(4, 2), 2) <= 1e-4);

  const auto weps = w_epsilon<double>(0.125);
  auto values = weps.value_matrix();
  for (auto& row : values)
    for (double& v : row) v = std::clamp(v, 0.01, 0.99);
  CHECK(gradient_check(StepGraphon<double>(weps.weights(), values), 3) <= 1e-4);

  // derivative along one value entry against an exact secant
  const auto w = random_step_graphon<Rational>(3, 7);
  const Rational h(1, 1000);
  auto shifted = [&](const Rational& delta) {
    auto vals = w.value_matrix();
    vals[0][1] = vals[1][0] = Rational(1, 2) + delta;
    return StepGraphon<Rational>(w.weights(), vals);
  };
  for (unsigned k : {2U, 4U, 6U}) {
    const Rational secant = (ratio(shifted(h), k).ratio - ratio(shifted(-h), k).ratio) / (2 * h);
    auto x = graphon_params(to_double(shifted(0)));
    const std::size_t idx = 3 + 1;  // weights, then (0,0), (0,1)
    const double eps = 1e-6;
    x[idx] += eps;
    const double up = ratio_at(3, x, k);
    x[idx] -= 2 * eps;
    const double down = ratio_at(3, x, k);
    const double fd = (up - down) / (2 * eps);
    CHECK(std::abs(fd - secant.get_d()) <= 1e-3 * std::max(1.0, std::abs(secant.get_d())));
  }
}

TEST_CASE("iterates are valid and the trajectory never increases") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto r = minimize_ratio(small_config(4 + static_cast<unsigned>(seed), 3, 3, seed));
    REQUIRE_FALSE(r.trajectory.empty());
    for (std::size_t i = 1; i < r.trajectory.size(); ++i) {
      CHECK(r.trajectory[i].first > r.trajectory[i - 1].first);
      CHECK(r.trajectory[i].second <= r.trajectory[i - 1].second);
    }
    CHECK(r.certificate.ratio <= r.trajectory.back().second);
    CHECK(r.certificate.ratio == doctest::Approx(ratio(r.graphon, r.certificate.k).ratio).epsilon(1e-15));
    double sum = 0.0;
    for (double a : r.graphon.weights()) {
      CHECK(a >= 1e-9);
      sum += a;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("determinism and restart independence") {
  const auto a = minimize_ratio(small_config(7, 3, 4, 11));
  const auto b = minimize_ratio(small_config(7, 3, 4, 11));
  CHECK(a.graphon == b.graphon);
  CHECK(a.trajectory == b.trajectory);
  CHECK(a.restart == b.restart);

  const auto s1 = minimize_ratio(small_config(7, 3, 1, 1));
  const auto s2 = minimize_ratio(small_config(7, 3, 1, 2));
  CHECK(minimize_ratio(small_config(7, 3, 1, 1)).graphon == s1.graphon);
  CHECK(minimize_ratio(small_config(7, 3, 1, 2)).graphon == s2.graphon);

  std::ostringstream csv;
  write_trajectory_csv(csv, a);
  CHECK(csv.str().rfind("iteration,ratio\n", 0) == 0);
  const auto j = result_to_json(a);
  CHECK(graphon_from_json<double>(j.at("graphon")) == a.graphon);
}

TEST_CASE("lemma range stays above the threshold") {
  for (unsigned k = 1; k <= 3; ++k) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto r = minimize_ratio(small_config(k, m, 3, k * 10 + m));
      CHECK(r.certificate.ratio >= std::ldexp(1.0, -static_cast<int>(k) - 1) - 1e-9);
      CHECK(r.exact_certificate.verdict == Verdict::Holds);
    }
  }
  // one block: constant graphons, minimized at p = 1/2
  const auto one = minimize_ratio(small_config(6, 1, 2, 3));
  CHECK(one.certificate.ratio == doctest::Approx(std::ldexp(1.0, -7)).epsilon(1e-9));
}

TEST_CASE("k = 12 search finds a certified violation") {
  OptimizerConfig cfg;
  cfg.k = 12;
  cfg.blocks = 4;
  cfg.restarts = 8;
  const auto r = minimize_ratio(cfg);
  CHECK(r.certificate.verdict == Verdict::Violated);
  CHECK(r.exact_certificate.verdict == Verdict::Violated);
  CHECK(r.exact_certificate.ratio < Rational(1, 8192));
  CHECK(r.exact_certificate.ratio == ratio(r.rational_graphon, 12).ratio);
}

TEST_CASE("probe rows") {
  const auto rows = probe_open_range(3, 2, 5, 40);
  REQUIRE(rows.size() == 8);
  CHECK(rows.front().k == 5);
  CHECK(rows.front().result.exact_certificate.verdict == Verdict::Holds);
  CHECK(rows.back().k == 12);
  const auto again = probe_open_range(3, 2, 5, 40);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].result.graphon == again[i].result.graphon);
}

TEST_CASE("configuration") {
  OptimizerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(config_from_json(config_to_json(cfg)).k == cfg.k);
  const auto parsed = config_from_json(nlohmann::json::parse(R"({"k": 7, "blocks": 3, "gradient": "central"})"));
  CHECK(parsed.k == 7);
  CHECK(parsed.blocks == 3);
  CHECK(parsed.gradient == GradientMode::Central);
  CHECK(parsed.restarts == cfg.restarts);

  for (const char* bad : {R"({"k": 0})", R"({"blocks": 0})", R"({"restarts": 0})", R"({"step": -1})",
                          R"({"fd_step": 0})", R"({"gradient": "backward"})", R"({"colour": 1})", R"({"k": "x"})",
                          R"([1, 2])", R"({"max_iters": 0})"})
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(bad)), ConfigInvalid);
}

}
