#include "ramsey/density.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "ramsey/error.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

// Vertex order in which every vertex except the first of each component has an
// earlier neighbor, so partial products can vanish early.
std::vector<std::size_t> connected_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::size_t head = order.size();
    order.push_back(start);
    while (head < order.size()) {
      const std::size_t v = order[head++];
      for (std::size_t u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = true;
          order.push_back(u);
        }
    }
  }
  return order;
}

template <class S>
struct Accumulator;

template <>
struct Accumulator<double> {
  CompensatedSum sum;
  void add(double x) { sum.add(x); }
  double value() const { return sum.value(); }
  static double reduce(const std::vector<double>& parts) { return pairwise_sum(parts); }
};

template <>
struct Accumulator<Rational> {
  Rational sum = 0;
  void add(const Rational& x) { sum += x; }
  Rational value() const { return sum; }
  static Rational reduce(const std::vector<Rational>& parts) {
    Rational total = 0;
    for (const auto& p : parts) total += p;
    return total;
  }
};

template <class S>
S half() {
  return ScalarTraits<S>::ratio(1, 2);
}

void require_positive_k(unsigned k, const char* what) {
  if (k == 0) throw std::invalid_argument(std::string(what) + ": k must be >= 1");
}

}  // namespace

template <class S>
S hom_density(const Graph& g, const StepGraphon<S>& w, const DensityOptions& opts) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = w.blocks();
  const double required = std::pow(static_cast<double>(m), static_cast<double>(n));
  if (required > static_cast<double>(opts.term_budget)) throw BudgetExceeded(required, opts.term_budget);
  if (n == 0) return S(1);

  const std::vector<std::size_t> order = connected_order(g);
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
  // back_edges[p]: positions q < p adjacent to the vertex at position p.
  std::vector<std::vector<std::size_t>> back_edges(n);
  for (const auto& [u, v] : g.edges()) {
    const std::size_t pu = position[u], pv = position[v];
    if (pu < pv)
      back_edges[pv].push_back(pu);
    else
      back_edges[pu].push_back(pv);
  }

  const std::size_t prefix = std::min<std::size_t>(n, 2);
  std::size_t chunks = 1;
  for (std::size_t i = 0; i < prefix; ++i) chunks *= m;
  std::vector<S> partial(chunks, S(0));

  parallel_for(chunks, [&](std::size_t chunk) {
    std::vector<std::size_t> assign(n);
    std::vector<S> product(n + 1);
    product[0] = 1;
    // Decode the chunk index into the fixed prefix assignment.
    std::size_t code = chunk;
    for (std::size_t p = prefix; p-- > 0;) {
      assign[p] = code % m;
      code /= m;
    }
    for (std::size_t p = 0; p < prefix; ++p) {
      S factor = w.weight(assign[p]);
      for (std::size_t q : back_edges[p]) factor *= w.value(assign[p], assign[q]);
      product[p + 1] = product[p] * factor;
      if (product[p + 1] == 0) return;
    }
    Accumulator<S> acc;
    std::function<void(std::size_t)> descend = [&](std::size_t p) {
      if (p == n) {
        acc.add(product[n]);
        return;
      }
      for (std::size_t b = 0; b < m; ++b) {
        S factor = w.weight(b);
        for (std::size_t q : back_edges[p]) {
          factor *= w.value(b, assign[q]);
          if (factor == 0) break;
        }
        if (factor == 0) continue;
        assign[p] = b;
        product[p + 1] = product[p] * factor;
        descend(p + 1);
      }
    };
    descend(prefix);
    partial[chunk] = acc.value();
  });
  return Accumulator<S>::reduce(partial);
}

template <class S>
S hom_density_forest(const Graph& g, const StepGraphon<S>& w) {
  if (!is_forest(g)) throw NotAForest();
  const std::size_t n = g.vertex_count();
  const std::size_t m = w.blocks();
  std::vector<bool> visited(n, false);
  S result = 1;
  // message(v)[i]: density of v's subtree given v sits in block i, weights of
  // descendants included, v's own weight excluded.
  std::function<std::vector<S>(std::size_t, std::size_t)> message = [&](std::size_t v, std::size_t parent) {
    visited[v] = true;
    std::vector<S> out(m, S(1));
    for (std::size_t child : g.neighbors(v)) {
      if (child == parent) continue;
      const std::vector<S> sub = message(child, v);
      for (std::size_t i = 0; i < m; ++i) {
        S sum = 0;
        for (std::size_t j = 0; j < m; ++j) sum += w.value(i, j) * w.weight(j) * sub[j];
        out[i] *= sum;
      }
    }
    return out;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    const std::vector<S> top = message(root, n);
    S component = 0;
    for (std::size_t i = 0; i < m; ++i) component += w.weight(i) * top[i];
    result *= component;
  }
  return result;
}

template <class S>
DensityReport<S> mono_density(const Graph& g, const StepGraphon<S>& w, const DensityOptions& opts) {
  const StepGraphon<S> comp = complement(w);
  Method method = opts.method;
  const long star_k = star_order(g);
  const long book_k = book_order(g);
  if (method == Method::Auto) {
    if (star_k >= 1 || book_k >= 1)
      method = Method::Closed;
    else if (is_forest(g))
      method = Method::Forest;
    else
      method = Method::Brute;
  }
  DensityReport<S> report;
  switch (method) {
    case Method::Brute:
      report.t_w = hom_density(g, w, opts);
      report.t_comp = hom_density(g, comp, opts);
      break;
    case Method::Forest:
      report.t_w = hom_density_forest(g, w);
      report.t_comp = hom_density_forest(g, comp);
      break;
    case Method::Closed:
      if (star_k >= 1) {
        report.t_w = star_density_closed(w, static_cast<unsigned>(star_k));
        report.t_comp = star_density_closed(comp, static_cast<unsigned>(star_k));
      } else if (book_k >= 1) {
        report.t_w = book_density_closed(w, static_cast<unsigned>(book_k));
        report.t_comp = book_density_closed(comp, static_cast<unsigned>(book_k));
      } else {
        throw std::invalid_argument("closed method applies only to stars and books");
      }
      break;
    case Method::Auto:
      break;
  }
  report.mono = report.t_w + report.t_comp;
  return report;
}

template <class S>
DegreeProfile<S> degree_profile(const StepGraphon<S>& w) {
  DegreeProfile<S> profile;
  for (std::size_t i = 0; i < w.blocks(); ++i) {
    S degree = 0;
    for (std::size_t j = 0; j < w.blocks(); ++j) degree += w.weight(j) * w.value(i, j);
    profile.h.push_back(degree - half<S>());
  }
  return profile;
}

template <class S>
S star_density_closed(const StepGraphon<S>& w, unsigned k) {
  S total = 0;
  for (std::size_t i = 0; i < w.blocks(); ++i) {
    S degree = 0;
    for (std::size_t j = 0; j < w.blocks(); ++j) degree += w.weight(j) * w.value(i, j);
    total += w.weight(i) * ipow(degree, k);
  }
  return total;
}

template <class S>
S book_density_closed(const StepGraphon<S>& w, unsigned k) {
  const std::size_t m = w.blocks();
  S total = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (w.value(i, j) == 0) continue;
      S codegree = 0;
      for (std::size_t l = 0; l < m; ++l) codegree += w.weight(l) * w.value(i, l) * w.value(j, l);
      total += w.weight(i) * w.weight(j) * w.value(i, j) * ipow(codegree, k);
    }
  return total;
}

template <class S>
S star_mono_closed(const StepGraphon<S>& w, unsigned k) {
  require_positive_k(k, "star_mono_closed");
  const DegreeProfile<S> profile = degree_profile(w);
  S total = 0;
  for (std::size_t i = 0; i < w.blocks(); ++i) {
    const S up = half<S>() + profile.h[i];
    const S down = half<S>() - profile.h[i];
    total += w.weight(i) * (ipow(up, k) + ipow(down, k));
  }
  return total;
}

template <class S>
S book_mono_closed(const StepGraphon<S>& w, unsigned k) {
  require_positive_k(k, "book_mono_closed");
  return book_density_closed(w, k) + book_density_closed(complement(w), k);
}

template <class S>
S goodman_T1(const StepGraphon<S>& w) {
  return S(3) / 2 * star_mono_closed(w, 2) - half<S>();
}

template <class S>
WEpsilonDensities<S> closed_form_weps(unsigned k, const S& eps) {
  require_positive_k(k, "closed_form_weps");
  if (!(eps >= 0 && eps < 1)) throw EpsOutOfRange("eps = " + render(eps) + " outside [0,1)");
  const S one = 1;
  const S third = S(one - eps) / 3;           // (1-eps)/3
  const S big = S(one + 2 * eps) / 3;          // (1+2eps)/3
  const S two_thirds = S(2 - 2 * eps) / 3;     // (2-2eps)/3
  WEpsilonDensities<S> out;
  out.book_w = 2 * eps * S(one - eps) * ipow(third, k) + 3 * ipow(third, 2) * ipow(big, k);
  out.book_comp = ipow(eps, k + 2) + 6 * ipow(third, k + 2);
  out.star_w = eps * ipow(S(one - eps), k) + S(one - eps) * ipow(big, k);
  out.star_comp = ipow(eps, k + 1) + S(one - eps) * ipow(two_thirds, k);
  return out;
}

McEstimate mc_estimate(const Graph& g, const StepGraphon<double>& w, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("mc_estimate: samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(w.weights().begin(), w.weights().end());
  std::vector<std::size_t> assign(g.vertex_count());
  CompensatedSum sum, sum_sq;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& b : assign) b = pick(rng);
    double product = 1.0;
    for (const auto& [u, v] : g.edges()) product *= w.value(assign[u], assign[v]);
    sum.add(product);
    sum_sq.add(product * product);
  }
  const double count = static_cast<double>(samples);
  McEstimate out;
  out.estimate = sum.value() / count;
  if (samples > 1) {
    const double variance = std::max(0.0, (sum_sq.value() - count * out.estimate * out.estimate) / (count - 1.0));
    out.std_error = std::sqrt(variance / count);
  }
  return out;
}

#define RAMSEY_INSTANTIATE(S)                                                             \
  template S hom_density(const Graph&, const StepGraphon<S>&, const DensityOptions&);     \
  template S hom_density_forest(const Graph&, const StepGraphon<S>&);                     \
  template DensityReport<S> mono_density(const Graph&, const StepGraphon<S>&,             \
                                         const DensityOptions&);                          \
  template DegreeProfile<S> degree_profile(const StepGraphon<S>&);                        \
  template S star_density_closed(const StepGraphon<S>&, unsigned);                        \
  template S book_density_closed(const StepGraphon<S>&, unsigned);                        \
  template S star_mono_closed(const StepGraphon<S>&, unsigned);                           \
  template S book_mono_closed(const StepGraphon<S>&, unsigned);                           \
  template S goodman_T1(const StepGraphon<S>&);                                           \
  template WEpsilonDensities<S> closed_form_weps(unsigned, const S&);

RAMSEY_INSTANTIATE(double)
RAMSEY_INSTANTIATE(Rational)

#undef RAMSEY_INSTANTIATE

}  // namespace ramsey
