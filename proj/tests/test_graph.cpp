#include <doctest.h>

#include <sstream>

#include "ramsey/error.hpp"
#include "ramsey/graph.hpp"

using namespace ramsey;

TEST_SUITE("graph") {

TEST_CASE("stars and books have the expected shape") {
  CHECK(star(0).vertex_count() == 1);
  CHECK(star(0).edge_count() == 0);
  CHECK(star(1) == Graph(2, {{0, 1}}));
  const Graph s4 = star(4);
  CHECK(s4.vertex_count() == 5);
  CHECK(s4.edge_count() == 4);
  CHECK(s4.degree(0) == 4);

  CHECK(book(0).vertex_count() == 2);
  CHECK(book(0).edge_count() == 1);
  CHECK(are_isomorphic(book(1), complete(3)));
  const Graph t4 = book(4);
  CHECK(t4.vertex_count() == 6);
  CHECK(t4.edge_count() == 9);
  for (Graph::Vertex a = 2; a < 6; ++a)
    for (Graph::Vertex b = a + 1; b < 6; ++b) CHECK_FALSE(t4.adjacent(a, b));

  for (std::size_t k = 0; k <= 20; ++k) {
    CHECK(star(k).edge_count() == k);
    CHECK(book(k).edge_count() == 2 * k + 1);
  }
}

TEST_CASE("apices of K1 and K2 are stars and books") {
  for (std::size_t k = 0; k <= 5; ++k) {
    CHECK(are_isomorphic(apex(complete(1), k), star(k)));
    CHECK(are_isomorphic(apex(complete(2), k), book(k)));
    CHECK(star_order(apex(complete(1), k)) == (k == 0 ? -1 : static_cast<long>(k)));
  }
  const Graph p = path(4);
  CHECK(apex(p, 0) == p);
  const Graph a = apex(p, 2);
  CHECK(a.degree(4) == 4);
  CHECK(a.degree(5) == 4);
  CHECK_FALSE(a.adjacent(4, 5));
}

TEST_CASE("nested apex counts") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Graph g = path(n);
    for (std::size_t a = 0; a <= 2; ++a) {
      for (std::size_t b = 0; b <= 2; ++b) {
        const Graph nested = apex(apex(g, a), b);
        CHECK(nested.vertex_count() == n + a + b);
        CHECK(nested.edge_count() == g.edge_count() + a * n + b * (n + a));
      }
    }
  }
}

TEST_CASE("random trees are trees") {
  CHECK(random_tree(1, 3) == Graph(1, {}));
  const Graph t = random_tree(5, 7);
  CHECK(t.vertex_count() == 5);
  CHECK(t.edge_count() == 4);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Graph g = random_tree(n, seed);
      REQUIRE(g.edge_count() == n - 1);
      CHECK(is_forest(g));
      CHECK(is_connected(g));
    }
  }
  CHECK(random_tree(9, 11) == random_tree(9, 11));
}

TEST_CASE("tree classes") {
  // OEIS A000055
  const std::size_t counts[] = {1, 1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(nonisomorphic_trees(n).size() == counts[n]);
  for (const Graph& g : nonisomorphic_trees(6)) CHECK(is_forest(g));
}

TEST_CASE("structural recognizers") {
  CHECK(book_order(book(3)) == 3);
  CHECK(book_order(complete(3)) == 1);
  CHECK(book_order(path(4)) == -1);
  CHECK(star_order(path(3)) == 2);
  CHECK(star_order(path(4)) == -1);
  Graph relabeled(4, {{3, 0}, {3, 1}, {2, 3}});
  CHECK(star_order(relabeled) == 3);
  CHECK_FALSE(is_forest(complete(3)));
  CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
}

TEST_CASE("invalid graphs are rejected") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidGraph);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidGraph);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidGraph);
}

TEST_CASE("edge list round trip is byte exact") {
  const std::string text = "5 4\n3 0\n0 1\n4 2\n2 0\n";
  std::istringstream in(text);
  const Graph g = read_edge_list(in);
  std::ostringstream out;
  write_edge_list(out, g);
  CHECK(out.str() == text);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph t = apex(random_tree(6, seed), 2);
    std::ostringstream o;
    write_edge_list(o, t);
    std::istringstream i(o.str());
    CHECK(read_edge_list(i) == t);
  }
}

TEST_CASE("edge list parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("3 x\n") == 1);
  CHECK(line_of("3 2\n0 1\n1\n") == 3);
  CHECK(line_of("3 2\n0 1\n") == 3);
  CHECK(line_of("3 1\n0 7\n") == 2);
  CHECK(line_of("3 1\n1 1\n") == 2);
}

}
