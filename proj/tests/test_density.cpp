#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ramsey/density.hpp"
#include "ramsey/error.hpp"
#include "ramsey/parallel.hpp"

using namespace ramsey;

namespace {

Rational pow2(int e) {
  Rational r = 1;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned>(-e));
  }
  return r;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::vector<Graph> small_graphs() {
  std::vector<Graph> gs{star(0), star(3), book(2), complete(4), path(5), apex(path(3), 2)};
  gs.push_back(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}));
  return gs;
}

}  // namespace

TEST_SUITE("density") {

TEST_CASE("constant graphons give p^e") {
  for (const Rational p : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)}) {
    const auto w = constant<Rational>(p);
    for (const Graph& g : small_graphs()) CHECK(hom_density(g, w) == ipow(p, static_cast<unsigned>(g.edge_count())));
  }
  CHECK(hom_density(star(2), constant<Rational>(Rational(1, 2))) == Rational(1, 4));
  CHECK(hom_density_forest(star(3), constant<Rational>(Rational(1, 2))) == Rational(1, 8));
  for (const Graph& g : small_graphs()) {
    const auto r = mono_density(g, constant<Rational>(Rational(1, 2)));
    CHECK(r.mono == pow2(1 - static_cast<int>(g.edge_count())));
    CHECK(r.mono == r.t_w + r.t_comp);
  }
}

TEST_CASE("brute force agrees with the odometer oracle") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto w = random_step_graphon<Rational>(1 + seed % 4, seed);
    for (const Graph& g : small_graphs()) CHECK(hom_density(g, w) == oracle::hom_density(g, w));
  }
  // the two clique example: 2 * (1/2) * (1/2)^2
  CHECK(hom_density(star(2), two_cliques<Rational>()) == Rational(1, 4));
  CHECK(oracle::hom_density(star(2), two_cliques<Rational>()) == Rational(1, 4));
}

TEST_CASE("forest recursion") {
  const auto w = random_step_graphon<Rational>(3, 2);
  Rational edge = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) edge += w.weight(i) * w.weight(j) * w.value(i, j);
  CHECK(hom_density_forest(path(2), w) == edge);

  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Graph t = random_tree(8, seed);
    const auto wr = random_step_graphon<Rational>(5, seed + 100);
    CHECK(hom_density_forest(t, wr) == hom_density(t, wr));
    const auto wd = random_step_graphon<double>(5, seed + 100);
    CHECK(close(hom_density_forest(t, wd), hom_density(t, wd), 1e-12));
  }
  const Graph forest(7, {{0, 1}, {1, 2}, {3, 4}, {5, 3}});
  const auto wr = random_step_graphon<Rational>(4, 8);
  CHECK(hom_density_forest(forest, wr) == hom_density(forest, wr));
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& t : nonisomorphic_trees(n)) CHECK(hom_density_forest(t, wr) == oracle::hom_density(t, wr));

  CHECK_THROWS_AS(hom_density_forest(book(2), wr), NotAForest);
}

TEST_CASE("permutation and refinement invariance") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto w = random_step_graphon<Rational>(3, seed);
    const std::vector<std::size_t> order{1, 2, 0};
    const auto permuted = permute_blocks(w, order);
    const auto refined = split_block(w, seed % 3);
    for (const Graph& g : {book(2), path(4), complete(4)}) {
      const Rational t = hom_density(g, w);
      CHECK(hom_density(g, permuted) == t);
      CHECK(hom_density(g, refined) == t);
    }
  }
}

TEST_CASE("methods agree") {
  const auto w = random_step_graphon<Rational>(3, 17);
  for (const Graph& g : {star(4), book(3), path(4), complete(4)}) {
    const Rational expected = oracle::mono_density(g, w);
    for (Method m : {Method::Auto, Method::Brute}) {
      DensityOptions o;
      o.method = m;
      CHECK(mono_density(g, w, o).mono == expected);
    }
  }
  DensityOptions closed;
  closed.method = Method::Closed;
  CHECK(mono_density(book(5), w, closed).mono == book_mono_closed(w, 5));
  CHECK_THROWS_AS(mono_density(complete(4), w, closed), std::invalid_argument);
  DensityOptions forest;
  forest.method = Method::Forest;
  CHECK(mono_density(path(6), w, forest).mono == oracle::mono_density(path(6), w));
  CHECK_THROWS_AS(mono_density(book(2), w, forest), NotAForest);
}

TEST_CASE("term budget") {
  const auto w = random_step_graphon<double>(4, 1);
  DensityOptions small;
  small.term_budget = 1000;
  try {
    hom_density(complete(6), w, small);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == doctest::Approx(4096));
    CHECK(e.allowed() == 1000);
  }
  small.term_budget = 4096;
  CHECK_NOTHROW(hom_density(complete(6), w, small));
}

TEST_CASE("degree profile") {
  for (double h : degree_profile(constant<double>(0.5)).h) CHECK(h == 0.0);
  CHECK(degree_profile(two_cliques<Rational>()).h == std::vector<Rational>{0, 0});
  const auto w = w_epsilon<Rational>(Rational(1, 20));
  const auto h = degree_profile(w).h;
  Rational row_a = 0;
  for (std::size_t j = 1; j < 4; ++j) row_a += w.weight(j);
  CHECK(row_a == Rational(19, 20));
  CHECK(h[0] == row_a - Rational(1, 2));
  CHECK(h[0] == Rational(9, 20));
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    for (double x : degree_profile(random_step_graphon<double>(5, seed)).h) {
      CHECK(x >= -0.5);
      CHECK(x <= 0.5);
    }
}

TEST_CASE("star and book closed forms") {
  for (unsigned k = 1; k <= 8; ++k) {
    CHECK(star_mono_closed(constant<Rational>(Rational(1, 2)), k) == pow2(1 - static_cast<int>(k)));
    CHECK(book_mono_closed(constant<Rational>(Rational(1, 2)), k) == pow2(-2 * static_cast<int>(k)));
  }
  for (unsigned k = 1; k <= 4; ++k) {
    CHECK(oracle::mono_density(book(k), two_cliques<Rational>()) == pow2(-static_cast<int>(k) - 1));
    CHECK(book_mono_closed(two_cliques<Rational>(), k) == pow2(-static_cast<int>(k) - 1));
  }
  // exact corpus against the oracle
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto w = random_step_graphon<Rational>(1 + seed % 4, seed);
    for (unsigned k = 1; k <= 4; ++k) {
      CHECK(star_mono_closed(w, k) == oracle::mono_density(star(k), w));
      CHECK(star_density_closed(w, k) == oracle::hom_density(star(k), w));
      CHECK(book_density_closed(w, k) == oracle::hom_density(book(k), w));
      CHECK(book_mono_closed(w, k) == oracle::mono_density(book(k), w));
    }
    CHECK(goodman_T1(w) == oracle::mono_density(complete(3), w));
  }
  // float corpus against brute force
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto w = random_step_graphon<double>(1 + seed % 4, seed);
    for (unsigned k = 1; k <= 5; ++k) {
      CHECK(close(star_mono_closed(w, k), mono_density(star(k), w).mono, 1e-12));
      CHECK(close(book_mono_closed(w, k), mono_density(book(k), w).mono, 1e-12));
    }
    CHECK(close(goodman_T1(w), mono_density(book(1), w).mono, 1e-12));
  }
  CHECK(goodman_T1(constant<Rational>(Rational(1, 2))) == Rational(1, 4));
  CHECK(goodman_T1(constant<Rational>(Rational(1))) == 1);
}

TEST_CASE("star lower bound and the book chain") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto w = random_step_graphon<double>(1 + seed % 5, seed);
    const auto h = degree_profile(w).h;
    double h2 = 0.0, h4 = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      h2 += w.weight(i) * h[i] * h[i];
      h4 += w.weight(i) * std::pow(h[i], 4);
    }
    CHECK(h4 <= 0.25 * h2 + 1e-15);
    const double g = goodman_T1(w);
    for (unsigned k = 1; k <= 12; ++k) {
      CHECK(star_mono_closed(w, k) >= std::ldexp(1.0, 1 - static_cast<int>(k)) * (1 - 1e-12));
      const double book = book_mono_closed(w, k);
      CHECK(book >= std::pow(g, k) * (1 - 1e-12));
      CHECK(std::pow(g, k) >= std::pow(0.25 + 3 * h2, k) * (1 - 1e-12));
      CHECK(std::pow(0.25 + 3 * h2, k) >= std::ldexp(1.0, -2 * static_cast<int>(k)) * (1 - 1e-12));
    }
  }
}

TEST_CASE("W_eps closed forms") {
  for (const Rational eps : {Rational(1, 20), Rational(1, 8), Rational(1, 4), Rational(1, 7)}) {
    const auto w = w_epsilon<Rational>(eps);
    const auto wc = complement(w);
    for (unsigned k = 1; k <= 5; ++k) {
      const auto f = closed_form_weps<Rational>(k, eps);
      CHECK(f.star_w == hom_density_forest(star(k), w));
      CHECK(f.star_comp == hom_density_forest(star(k), wc));
      CHECK(f.book_w == hom_density(book(k), w));
      CHECK(f.book_comp == hom_density(book(k), wc));
    }
    for (unsigned k = 1; k <= 12; ++k) {
      const auto f = closed_form_weps<Rational>(k, eps);
      CHECK(f.book_mono() == book_mono_closed(w, k));
      CHECK(f.star_mono() == star_mono_closed(w, k));
    }
  }
  const auto f = closed_form_weps<Rational>(12, Rational(1, 20));
  CHECK(f.book_mono().get_d() == doctest::Approx(2.4849e-6).epsilon(5e-5));
  CHECK(f.star_mono().get_d() == doctest::Approx(0.030980).epsilon(5e-5));

  // eps = 0: t(S_k) = 3^-k and t(T_k) = 3^(-k-1)
  for (unsigned k = 1; k <= 6; ++k) {
    const auto z = closed_form_weps<Rational>(k, Rational(0));
    CHECK(z.star_w == 1 / ipow(Rational(3), k));
    CHECK(z.book_w == 1 / ipow(Rational(3), k + 1));
  }
}

TEST_CASE("Monte Carlo oracle") {
  const auto one = mc_estimate(star(3), constant<double>(1.0), 1000, 1);
  CHECK(one.estimate == 1.0);
  CHECK(one.std_error == 0.0);

  const auto half = mc_estimate(star(1), constant<double>(0.5), 100'000, 2);
  CHECK(std::abs(half.estimate - 0.5) <= 4 * half.std_error);

  const auto w = random_step_graphon<double>(3, 5);
  const double exact = hom_density(book(3), w);
  const auto big = mc_estimate(book(3), w, 1'000'000, 6);
  CHECK(std::abs(big.estimate - exact) <= 4 * big.std_error);

  int within = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto e = mc_estimate(book(2), w, 20'000, seed);
    if (std::abs(e.estimate - hom_density(book(2), w)) <= 4 * e.std_error) ++within;
  }
  CHECK(within >= 99);
}

TEST_CASE("results do not depend on the thread count") {
  const auto w = random_step_graphon<double>(5, 3);
  const Graph g = apex(path(4), 2);
  set_thread_count(1);
  const double one = hom_density(g, w);
  for (unsigned t : {2U, 3U, 8U}) {
    set_thread_count(t);
    CHECK(hom_density(g, w) == one);
  }
  set_thread_count(1);
}

}
