#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

/// Finite simple labeled graph on vertices 0..n-1.
///
/// Edges are kept in the order and orientation they were given so that the
/// edge-list file format round-trips byte for byte; adjacency queries ignore
/// orientation.
class Graph {
 public:
  using Vertex = std::size_t;
  using Edge = std::pair<Vertex, Vertex>;

  Graph() = default;
  // Throws InvalidGraph on self-loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// S_k: center 0 joined to leaves 1..k.
Graph star(std::size_t k);
/// T_k = K_{1,1,k}: spine 0-1, pages 2..k+1 each joined to both spine vertices.
Graph book(std::size_t k);
/// G^{+k}: new vertices v(g)..v(g)+k-1, each joined to every original vertex.
Graph apex(const Graph& g, std::size_t k);
Graph complete(std::size_t n);
Graph path(std::size_t n);
/// Uniform labeled tree on n vertices from a random Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// Decodes a Pruefer sequence of length n-2 over 0..n-1.
Graph tree_from_pruefer(std::size_t n, const std::vector<std::size_t>& sequence);
/// One representative per isomorphism class of trees on n vertices (n <= 8).
std::vector<Graph> nonisomorphic_trees(std::size_t n);

bool is_forest(const Graph& g);
bool is_connected(const Graph& g);

/// Permutation-search isomorphism test; limited to graphs with at most 8 vertices.
bool are_isomorphic(const Graph& a, const Graph& b);

/// If g is isomorphic to a star S_k (k >= 1), returns k; otherwise -1.
long star_order(const Graph& g);
/// If g is isomorphic to a book T_k (k >= 1), returns k; otherwise -1.
long book_order(const Graph& g);

// Edge-list format: "n m" then m lines "u v", 0-based. Parse errors carry line numbers.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list_file(const std::string& path);

}  // namespace ramsey
