#pragma once

// Monochromatic common neighborhoods of k-tuples in a step graphon.
//
// A point of D_k = {0,1} x [0,1]^k is a color bit plus k vertices. In a step
// graphon d and delta only depend on the color and the multiset of blocks the k
// vertices fall in, so integrals over D_k become sums over multisets weighted by
// multinomial(k; multiplicities) * prod a_i.

#include <cstdint>
#include <vector>

#include "ramsey/scalar.hpp"
#include "ramsey/stepgraphon.hpp"

namespace ramsey {

template <class S>
struct BlockProfile {
  unsigned color = 0;               // 0: W, 1: 1 - W
  std::vector<std::size_t> blocks;  // nondecreasing, length k
  S mass = 0;                       // measure of the cell in D_k
};

/// All 2 * C(m+k-1, k) profiles, color-major then lexicographic. Throws
/// BudgetExceeded when the count exceeds `budget`.
template <class S>
std::vector<BlockProfile<S>> enumerate_profiles(const StepGraphon<S>& w, unsigned k,
                                                std::uint64_t budget = 100'000'000);

/// d^W_k on the cell of `profile`.
template <class S>
S common_degree(const StepGraphon<S>& w, const BlockProfile<S>& profile);

/// delta^W_k on the cell of `profile`; 0 when the common degree is 0.
template <class S>
S common_edge_density(const StepGraphon<S>& w, const BlockProfile<S>& profile);

/// Integral over D_k of d^p * delta^q. Requires k >= 1 and p >= 1 whenever q >= 1.
template <class S>
S dk_integral(const StepGraphon<S>& w, unsigned k, unsigned p, unsigned q, std::uint64_t budget = 100'000'000);

/// Integral of d^n delta^(n-1): lower bound on m(G^{+k}, w) for an n-vertex
/// Sidorenko graph G with n-1 edges.
template <class S>
S sidorenko_apex_lower_bound(unsigned n, unsigned k, const StepGraphon<S>& w);

struct HolderCheck {
  double lhs = 0.0;  // int d^2 delta
  double rhs = 0.0;  // (int d)^((n-2)/(n-1)) * (int d^n delta^(n-1))^(1/(n-1))
  bool holds = false;
};

/// Fractional exponents are evaluated in double for both backends; the verdict
/// allows 1e-12 slack.
template <class S>
HolderCheck holder_check(const StepGraphon<S>& w, unsigned k, unsigned n);

/// m(T_k, w)^(n-1) / m(S_k, w)^(n-2).
template <class S>
S theorem_bound(unsigned n, unsigned k, const StepGraphon<S>& w);

}  // namespace ramsey
