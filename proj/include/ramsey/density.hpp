#pragma once

// Homomorphism and monochromatic densities of finite graphs in step graphons.

#include <cstdint>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/scalar.hpp"
#include "ramsey/stepgraphon.hpp"

namespace ramsey {

enum class Method { Auto, Brute, Forest, Closed };

struct DensityOptions {
  // Upper bound on m^v(G) for brute-force enumeration.
  std::uint64_t term_budget = 100'000'000;
  // Auto picks the closed form for stars and books, the forest recursion for
  // other forests, and enumeration otherwise.
  Method method = Method::Brute;
};

template <class S>
struct DensityReport {
  S t_w;     // t(G, W)
  S t_comp;  // t(G, 1 - W)
  S mono;    // t_w + t_comp
  Backend backend = ScalarTraits<S>::backend;
};

template <class S>
struct DegreeProfile {
  // h[i] = (sum_j a_j W_ij) - 1/2, the deviation of block i's degree from 1/2.
  std::vector<S> h;
};

/// t(g, w) by summing over all maps V(g) -> blocks. Maps are enumerated in a
/// fixed order, pruned as soon as a partial product vanishes, and split into
/// m^min(2, v) chunks whose compensated sums are reduced pairwise, so the double
/// result does not depend on the thread count. Throws BudgetExceeded when
/// m^v(g) > opts.term_budget.
template <class S>
S hom_density(const Graph& g, const StepGraphon<S>& w, const DensityOptions& opts = {});

/// t(g, w) for a forest by leaf-to-root message passing, O(v(g) m^2).
/// Throws NotAForest.
template <class S>
S hom_density_forest(const Graph& g, const StepGraphon<S>& w);

template <class S>
DensityReport<S> mono_density(const Graph& g, const StepGraphon<S>& w, const DensityOptions& opts = {});

template <class S>
DegreeProfile<S> degree_profile(const StepGraphon<S>& w);

/// t(S_k, w) = sum_i a_i deg_i^k.
template <class S>
S star_density_closed(const StepGraphon<S>& w, unsigned k);

/// t(T_k, w) = sum_ij a_i a_j W_ij c_ij^k with codegree c_ij = sum_l a_l W_il W_jl.
template <class S>
S book_density_closed(const StepGraphon<S>& w, unsigned k);

/// m(S_k, w) = sum_i a_i [(1/2 + h_i)^k + (1/2 - h_i)^k]. Requires k >= 1.
template <class S>
S star_mono_closed(const StepGraphon<S>& w, unsigned k);

/// m(T_k, w) via codegrees in both colors. Requires k >= 1.
template <class S>
S book_mono_closed(const StepGraphon<S>& w, unsigned k);

/// (3/2) m(S_2, w) - 1/2, which equals m(K_3, w).
template <class S>
S goodman_T1(const StepGraphon<S>& w);

template <class S>
struct WEpsilonDensities {
  S book_w;     // t(T_k, W_eps)
  S book_comp;  // t(T_k, 1 - W_eps)
  S star_w;     // t(S_k, W_eps)
  S star_comp;  // t(S_k, 1 - W_eps)

  S book_mono() const { return book_w + book_comp; }
  S star_mono() const { return star_w + star_comp; }
};

/// Closed-form book and star densities of the W_eps family. Requires k >= 1 and
/// 0 <= eps < 1.
template <class S>
WEpsilonDensities<S> closed_form_weps(unsigned k, const S& eps);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Unbiased Monte Carlo estimate of t(g, w): each sample draws a block for every
/// vertex independently with probabilities given by the weights.
McEstimate mc_estimate(const Graph& g, const StepGraphon<double>& w, std::uint64_t samples, std::uint64_t seed);

}  // namespace ramsey
