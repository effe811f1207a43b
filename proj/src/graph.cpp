#include "ramsey/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ramsey/error.hpp"

namespace ramsey {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count) {
  std::set<Edge> seen;
  for (const auto& [u, v] : edges_) {
    if (u >= vertex_count_ || v >= vertex_count_)
      throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint >= " +
                         std::to_string(vertex_count_));
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw InvalidGraph("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_.at(u);
  return std::find(row.begin(), row.end(), v) != row.end();
}

Graph star(std::size_t k) {
  std::vector<Graph::Edge> edges;
  for (std::size_t leaf = 1; leaf <= k; ++leaf) edges.emplace_back(0, leaf);
  return Graph(k + 1, std::move(edges));
}

Graph book(std::size_t k) {
  std::vector<Graph::Edge> edges{{0, 1}};
  for (std::size_t page = 2; page < k + 2; ++page) {
    edges.emplace_back(0, page);
    edges.emplace_back(1, page);
  }
  return Graph(k + 2, std::move(edges));
}

Graph apex(const Graph& g, std::size_t k) {
  std::vector<Graph::Edge> edges = g.edges();
  const std::size_t n = g.vertex_count();
  for (std::size_t extra = 0; extra < k; ++extra)
    for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, n + extra);
  return Graph(n + k, std::move(edges));
}

Graph complete(std::size_t n) {
  std::vector<Graph::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path: n must be >= 1");
  std::vector<Graph::Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph tree_from_pruefer(std::size_t n, const std::vector<std::size_t>& sequence) {
  if (n == 0) throw std::invalid_argument("tree_from_pruefer: n must be >= 1");
  if (n == 1) return Graph(1, {});
  if (sequence.size() != n - 2) throw std::invalid_argument("tree_from_pruefer: sequence length must be n-2");
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t v : sequence) {
    if (v >= n) throw std::invalid_argument("tree_from_pruefer: label out of range");
    ++degree[v];
  }
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Graph::Edge> edges;
  for (std::size_t v : sequence) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.insert(v);
  }
  const std::size_t u = *leaves.begin();
  const std::size_t w = *std::next(leaves.begin());
  edges.emplace_back(u, w);
  return Graph(n, std::move(edges));
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tree: n must be >= 1");
  if (n <= 2) return path(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> label(0, n - 1);
  std::vector<std::size_t> sequence(n - 2);
  for (auto& v : sequence) v = label(rng);
  return tree_from_pruefer(n, sequence);
}

bool is_forest(const Graph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& [u, v] : g.edges()) {
    const std::size_t ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == n;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.vertex_count();
  if (n > 8 || b.vertex_count() > 8) throw std::invalid_argument("are_isomorphic: limited to 8 vertices");
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> deg_a(n), deg_b(n);
  for (std::size_t v = 0; v < n; ++v) {
    deg_a[v] = a.degree(v);
    deg_b[v] = b.degree(v);
  }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Backtracking: map vertex v of a to an unused vertex of b with equal degree,
  // keeping adjacency with all previously mapped vertices consistent.
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t target = 0; target < n; ++target) {
      if (used[target] || deg_b[target] != deg_a[v]) continue;
      bool consistent = true;
      for (std::size_t u = 0; u < v && consistent; ++u)
        consistent = a.adjacent(u, v) == b.adjacent(image[u], target);
      if (!consistent) continue;
      used[target] = true;
      image[v] = target;
      if (extend(v + 1)) return true;
      used[target] = false;
    }
    return false;
  };
  return extend(0);
}

long star_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1) return -1;
  std::size_t centers = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1)
      ++centers;
    else if (g.degree(v) != 1)
      return -1;
  }
  // K_2 has two vertices of degree 1 = n-1.
  return centers >= 1 ? static_cast<long>(n - 1) : -1;
}

long book_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != 2 * (n - 2) + 1) return -1;
  std::vector<std::size_t> hubs;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) hubs.push_back(v);
  if (hubs.size() < 2) return -1;
  // With two universal vertices the edge count forces the rest to be independent.
  return static_cast<long>(n - 2);
}

namespace {

// AHU canonical string of the tree rooted at v.
std::string rooted_code(const Graph& g, std::size_t v, std::size_t parent) {
  std::vector<std::string> children;
  for (std::size_t u : g.neighbors(v))
    if (u != parent) children.push_back(rooted_code(g, u, v));
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  return code + ")";
}

std::string tree_code(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return "()";
  // Centers: strip leaves layer by layer.
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t leaf : layer)
      for (std::size_t u : g.neighbors(leaf))
        if (--degree[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::string best;
  for (std::size_t center : layer) {
    std::string code = rooted_code(g, center, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> nonisomorphic_trees(std::size_t n) {
  if (n == 0 || n > 8) throw std::invalid_argument("nonisomorphic_trees: n must be in 1..8");
  if (n <= 2) return {path(n)};
  std::set<std::string> seen;
  std::vector<Graph> trees;
  std::vector<std::size_t> sequence(n - 2, 0);
  while (true) {
    Graph tree = tree_from_pruefer(n, sequence);
    if (seen.insert(tree_code(tree)).second) trees.push_back(std::move(tree));
    std::size_t pos = 0;
    while (pos < sequence.size() && ++sequence[pos] == n) sequence[pos++] = 0;
    if (pos == sequence.size()) break;
  }
  return trees;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto parse_pair = [&](const std::string& text, long long& a, long long& b) {
    std::istringstream fields(text);
    std::string rest;
    if (!(fields >> a >> b) || (fields >> rest)) throw ParseError(line_no, "expected two integers, got '" + text + "'");
    if (a < 0 || b < 0) throw ParseError(line_no, "negative value in '" + text + "'");
  };
  if (!next_content_line(line)) throw ParseError(line_no + 1, "missing header 'n m'");
  long long n = 0, m = 0;
  parse_pair(line, n, m);
  std::vector<Graph::Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(line))
      throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    long long u = 0, v = 0;
    parse_pair(line, u, v);
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    try {
      Graph(static_cast<std::size_t>(n), edges);
    } catch (const InvalidGraph& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (next_content_line(line)) throw ParseError(line_no, "trailing content after " + std::to_string(m) + " edges");
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

}  // namespace ramsey
