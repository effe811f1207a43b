#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/scalar.hpp"

namespace ramsey {

/// A graphon constant on the blocks of a finite partition of [0,1].
///
/// Block i has measure weights()[i] > 0 and the graphon takes value(i, j) on
/// block i x block j. The value matrix is symmetric with entries in [0,1] and the
/// weights sum to 1 (exactly for Rational, within 1e-12 for double).
template <class S>
class StepGraphon {
 public:
  using Scalar = S;

  // Throws InvalidGraphon naming the offending index.
  StepGraphon(std::vector<S> weights, std::vector<std::vector<S>> values);

  std::size_t blocks() const noexcept { return weights_.size(); }
  const std::vector<S>& weights() const noexcept { return weights_; }
  const S& weight(std::size_t i) const { return weights_[i]; }
  const S& value(std::size_t i, std::size_t j) const { return values_[i * blocks() + j]; }
  std::span<const S> row(std::size_t i) const { return {values_.data() + i * blocks(), blocks()}; }
  std::vector<std::vector<S>> value_matrix() const;

  friend bool operator==(const StepGraphon& a, const StepGraphon& b) {
    return a.weights_ == b.weights_ && a.values_ == b.values_;
  }

 private:
  std::vector<S> weights_;
  std::vector<S> values_;  // row-major blocks() x blocks()
};

/// Same weights, every value x replaced by 1 - x.
template <class S>
StepGraphon<S> complement(const StepGraphon<S>& w);

/// Builds a step graphon after removing zero-weight blocks.
template <class S>
StepGraphon<S> drop_empty_blocks(std::vector<S> weights, std::vector<std::vector<S>> values);

/// The four-block family A, B, C, D with |A| = eps and |B| = |C| = |D| = (1-eps)/3.
/// Value 1 between A and every other block and inside B, C, D; 0 elsewhere.
/// eps = 0 yields the three-block graphon (A is dropped). Throws EpsOutOfRange.
template <class S>
StepGraphon<S> w_epsilon(const S& eps);

template <class S>
StepGraphon<S> constant(const S& p);

/// Equal weights 1/2 and the identity value matrix: two disjoint cliques.
template <class S>
StepGraphon<S> two_cliques();

/// Random instance. The double version draws weights uniformly from the simplex
/// and values i.i.d. uniform on [0,1]. The Rational version draws integer
/// weights in 1..1000 (normalized) and values in {0, 1/1000, ..., 1}.
template <class S>
StepGraphon<S> random_step_graphon(std::size_t m, std::uint64_t seed);
template <>
StepGraphon<double> random_step_graphon<double>(std::size_t m, std::uint64_t seed);
template <>
StepGraphon<Rational> random_step_graphon<Rational>(std::size_t m, std::uint64_t seed);

/// Permutes blocks: new block i is old block order[i].
template <class S>
StepGraphon<S> permute_blocks(const StepGraphon<S>& w, std::span<const std::size_t> order);

/// Splits `block` into two halves with identical rows; the graphon is unchanged.
template <class S>
StepGraphon<S> split_block(const StepGraphon<S>& w, std::size_t block);

StepGraphon<double> to_double(const StepGraphon<Rational>& w);
StepGraphon<Rational> to_exact(const StepGraphon<double>& w);

/// Rounds to a nearby rational graphon: weights to multiples of 1/max_den (sum
/// fixed up on the heaviest block, zero blocks dropped), values to the closest
/// fraction with denominator <= max_den.
StepGraphon<Rational> rationalize(const StepGraphon<double>& w, long max_den);

// JSON: {"weights":[...], "values":[[...],...]}. Doubles are written as numbers;
// rationals as "p/q" strings. The rational reader also accepts integers and
// decimal literals (read exactly).
template <class S>
nlohmann::json graphon_to_json(const StepGraphon<S>& w);
template <class S>
StepGraphon<S> graphon_from_json(const nlohmann::json& j);
template <class S>
StepGraphon<S> read_graphon_file(const std::string& path);

}  // namespace ramsey
