#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ramsey/density.hpp"
#include "ramsey/error.hpp"
#include "ramsey/neighborhood.hpp"

using namespace ramsey;

namespace {

Rational pow2(int e) {
  return e >= 0 ? ipow(Rational(2), static_cast<unsigned>(e)) : Rational(1 / ipow(Rational(2), static_cast<unsigned>(-e)));
}

BlockProfile<Rational> profile(unsigned color, std::vector<std::size_t> blocks) {
  BlockProfile<Rational> p;
  p.color = color;
  p.blocks = std::move(blocks);
  return p;
}

}  // namespace

TEST_SUITE("neighborhood") {

TEST_CASE("profiles cover D_k") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto w = random_step_graphon<Rational>(1 + seed % 4, seed);
    for (unsigned k = 1; k <= 5; ++k) {
      const auto profiles = enumerate_profiles(w, k);
      Rational by_color[2] = {0, 0};
      for (const auto& p : profiles) {
        CHECK(p.mass > 0);
        CHECK(p.blocks.size() == k);
        CHECK(std::is_sorted(p.blocks.begin(), p.blocks.end()));
        by_color[p.color] += p.mass;
      }
      CHECK(by_color[0] == 1);
      CHECK(by_color[1] == 1);
    }
  }
  const auto w = random_step_graphon<double>(4, 3);
  for (unsigned k = 1; k <= 12; ++k) {
    const auto profiles = enumerate_profiles(w, k);
    double total = 0.0;
    for (const auto& p : profiles) total += p.mass;
    CHECK(std::abs(total - 2.0) <= 1e-12);
  }
  CHECK(enumerate_profiles(w, 12).size() == 2 * 455);
  CHECK_THROWS_AS(enumerate_profiles(w, 12, 100), BudgetExceeded);
}

TEST_CASE("common degree examples") {
  const auto c = constant<Rational>(Rational(1, 3));
  CHECK(common_degree(c, profile(0, {0, 0, 0})) == Rational(1, 27));
  CHECK(common_degree(c, profile(1, {0, 0})) == Rational(4, 9));
  CHECK(common_edge_density(c, profile(0, {0, 0, 0})) == Rational(1, 3));
  CHECK(common_edge_density(c, profile(1, {0, 0})) == Rational(2, 3));

  const auto tc = two_cliques<Rational>();
  CHECK(common_degree(tc, profile(0, {0, 1})) == 0);
  CHECK(common_edge_density(tc, profile(0, {0, 1})) == 0);

  for (const Rational eps : {Rational(1, 20), Rational(1, 8)}) {
    const auto w = w_epsilon<Rational>(eps);
    for (unsigned k = 1; k <= 6; ++k) CHECK(common_degree(w, profile(0, std::vector<std::size_t>(k, 0))) == 1 - eps);
  }
}

TEST_CASE("d and delta agree with the tuple oracle in every order") {
  std::mt19937_64 rng(42);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto w = random_step_graphon<Rational>(3, seed);
    for (unsigned k = 1; k <= 4; ++k) {
      for (const auto& p : enumerate_profiles(w, k)) {
        std::vector<std::size_t> tuple = p.blocks;
        std::shuffle(tuple.begin(), tuple.end(), rng);
        CHECK(common_degree(w, p) == oracle::tuple_degree(w, p.color, tuple));
        CHECK(common_edge_density(w, p) == oracle::tuple_edge_density(w, p.color, tuple));
        auto shuffled = p;
        shuffled.blocks = tuple;
        CHECK(common_degree(w, shuffled) == common_degree(w, p));
        CHECK(common_edge_density(w, shuffled) == common_edge_density(w, p));
      }
    }
  }
}

TEST_CASE("delta matches a Monte Carlo estimate") {
  const auto w = random_step_graphon<double>(3, 11);
  const auto profiles = enumerate_profiles(w, 2);
  for (std::size_t i = 0; i < profiles.size(); i += 2) {
    const auto& p = profiles[i];
    const auto est = oracle::mc_edge_density(w, p.color, p.blocks, 400'000, 100 + i);
    if (est.accepted < 1000) continue;
    CHECK(std::abs(est.mean - common_edge_density(w, p)) <= 5 * est.std_error + 1e-9);
  }
}

TEST_CASE("integrals over D_k") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto w = random_step_graphon<Rational>(1 + seed % 3, seed);
    for (unsigned k = 1; k <= 3; ++k) {
      CHECK(dk_integral(w, k, 1, 0) == star_mono_closed(w, k));
      CHECK(dk_integral(w, k, 2, 1) == book_mono_closed(w, k));
      CHECK(dk_integral(w, k, 3, 2) == oracle::dk_integral(w, k, 3, 2));
      CHECK(dk_integral(w, k, 2, 0) == oracle::dk_integral(w, k, 2, 0));
    }
  }
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned n = 2; n <= 5; ++n)
      CHECK(dk_integral(constant<Rational>(Rational(1, 2)), k, n, n - 1) == pow2(2 - static_cast<int>(n * (k + 1))));
}

TEST_CASE("apex bound chain") {
  const Graph p3 = path(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = random_step_graphon<Rational>(1 + seed % 3, seed);
    CHECK(sidorenko_apex_lower_bound(3, 2, w) <= oracle::mono_density(apex(p3, 2), w));
    for (unsigned k = 1; k <= 3; ++k) {
      const Rational book = book_mono_closed(w, k);
      CHECK(sidorenko_apex_lower_bound(2, k, w) == book);
      CHECK(theorem_bound(2, k, w) == book);
      CHECK(theorem_bound(3, k, w) <= sidorenko_apex_lower_bound(3, k, w));
    }
  }
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = 2; n <= 5; ++n) {
      const auto half = constant<Rational>(Rational(1, 2));
      CHECK(theorem_bound(n, k, half) == pow2(2 - static_cast<int>(n * (k + 1))));
      CHECK(sidorenko_apex_lower_bound(n, k, half) == pow2(2 - static_cast<int>(n * (k + 1))));
    }
}

TEST_CASE("Hoelder step") {
  const auto w = random_step_graphon<double>(4, 8);
  for (unsigned k = 1; k <= 4; ++k) {
    const auto two = holder_check(w, k, 2);
    CHECK(two.holds);
    CHECK(two.lhs == doctest::Approx(two.rhs).epsilon(1e-12));
  }
  for (unsigned n = 2; n <= 6; ++n) {
    const auto eq = holder_check(constant<Rational>(Rational(1, 2)), 3, n);
    CHECK(eq.holds);
    CHECK(eq.lhs == doctest::Approx(eq.rhs).epsilon(1e-12));
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto wi = random_step_graphon<double>(1 + rng() % 4, rng());
    const unsigned k = 1 + rng() % 4;
    const unsigned n = 2 + rng() % 5;
    const auto c = holder_check(wi, k, n);
    CHECK(c.rhs - c.lhs >= -1e-12);
    CHECK(c.holds);
  }
}

}
