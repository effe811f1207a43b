#include "ramsey/stepgraphon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

template <class S>
bool weights_sum_to_one(const S& total) {
  if constexpr (ScalarTraits<S>::exact)
    return total == 1;
  else
    return std::fabs(total - 1.0) <= 1e-12;
}

std::string index_str(std::size_t i) { return std::to_string(i); }

}  // namespace

template <class S>
StepGraphon<S>::StepGraphon(std::vector<S> weights, std::vector<std::vector<S>> values) : weights_(std::move(weights)) {
  const std::size_t m = weights_.size();
  using Kind = InvalidGraphon::Kind;
  if (m == 0) throw InvalidGraphon(Kind::BadShape, 0, 0, "graphon needs at least one block");
  if (values.size() != m)
    throw InvalidGraphon(Kind::BadShape, values.size(), 0,
                         "value matrix has " + index_str(values.size()) + " rows, expected " + index_str(m));
  S total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(weights_[i] > 0))
      throw InvalidGraphon(Kind::BadWeights, i, i, "weight " + index_str(i) + " is not positive");
    total += weights_[i];
  }
  if (!weights_sum_to_one(total))
    throw InvalidGraphon(Kind::BadWeights, m, m, "weights sum to " + render(S(total)) + ", expected 1");
  values_.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (values[i].size() != m)
      throw InvalidGraphon(Kind::BadShape, i, values[i].size(),
                           "row " + index_str(i) + " has " + index_str(values[i].size()) + " entries, expected " +
                               index_str(m));
    for (std::size_t j = 0; j < m; ++j) {
      const S& x = values[i][j];
      if (!(x >= 0 && x <= 1))
        throw InvalidGraphon(Kind::OutOfRangeEntry, i, j,
                             "entry (" + index_str(i) + "," + index_str(j) + ") = " + render(x) + " outside [0,1]");
      values_.push_back(x);
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (values_[i * m + j] != values_[j * m + i])
        throw InvalidGraphon(Kind::NonSymmetric, i, j,
                             "entries (" + index_str(i) + "," + index_str(j) + ") and (" + index_str(j) + "," +
                                 index_str(i) + ") differ");
}

template <class S>
std::vector<std::vector<S>> StepGraphon<S>::value_matrix() const {
  std::vector<std::vector<S>> rows(blocks());
  for (std::size_t i = 0; i < blocks(); ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

template <class S>
StepGraphon<S> complement(const StepGraphon<S>& w) {
  auto rows = w.value_matrix();
  for (auto& row : rows)
    for (auto& x : row) x = S(1 - x);
  return StepGraphon<S>(w.weights(), std::move(rows));
}

template <class S>
StepGraphon<S> drop_empty_blocks(std::vector<S> weights, std::vector<std::vector<S>> values) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] != 0) keep.push_back(i);
  if (keep.size() == weights.size() || values.size() != weights.size())
    return StepGraphon<S>(std::move(weights), std::move(values));
  std::vector<S> kept_weights;
  std::vector<std::vector<S>> kept_values;
  for (std::size_t i : keep) {
    kept_weights.push_back(weights[i]);
    std::vector<S> row;
    for (std::size_t j : keep) row.push_back(values[i].at(j));
    kept_values.push_back(std::move(row));
  }
  return StepGraphon<S>(std::move(kept_weights), std::move(kept_values));
}

template <class S>
StepGraphon<S> w_epsilon(const S& eps) {
  if (!(eps >= 0 && eps < 1)) throw EpsOutOfRange("eps = " + render(eps) + " outside [0,1)");
  const S third = S(1 - eps) / 3;
  std::vector<S> weights{eps, third, third, third};
  if constexpr (!ScalarTraits<S>::exact) weights[3] = 1.0 - eps - third - third;
  const S one = 1, zero = 0;
  std::vector<std::vector<S>> values{
      {zero, one, one, one},
      {one, one, zero, zero},
      {one, zero, one, zero},
      {one, zero, zero, one},
  };
  return drop_empty_blocks(std::move(weights), std::move(values));
}

template <class S>
StepGraphon<S> constant(const S& p) {
  return StepGraphon<S>({S(1)}, {{p}});
}

template <class S>
StepGraphon<S> two_cliques() {
  const S half = ScalarTraits<S>::ratio(1, 2);
  return StepGraphon<S>({half, half}, {{S(1), S(0)}, {S(0), S(1)}});
}

template <>
StepGraphon<double> random_step_graphon<double>(std::size_t m, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("random_step_graphon: m must be >= 1");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> spacing(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(m);
  double total = 0.0;
  for (auto& w : weights) {
    w = spacing(rng);
    total += w;
  }
  for (auto& w : weights) w /= total;
  // Put the rounding residue on the heaviest block so the sum is 1 to the last bit or two.
  const auto heaviest = std::max_element(weights.begin(), weights.end()) - weights.begin();
  double rest = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (static_cast<long>(i) != heaviest) rest += weights[i];
  weights[heaviest] = 1.0 - rest;
  std::vector<std::vector<double>> values(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) values[i][j] = values[j][i] = unit(rng);
  return StepGraphon<double>(std::move(weights), std::move(values));
}

template <>
StepGraphon<Rational> random_step_graphon<Rational>(std::size_t m, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("random_step_graphon: m must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> count(1, 1000);
  std::uniform_int_distribution<long> level(0, 1000);
  std::vector<long> counts(m);
  long total = 0;
  for (auto& c : counts) total += (c = count(rng));
  std::vector<Rational> weights;
  for (long c : counts) weights.push_back(ScalarTraits<Rational>::ratio(c, total));
  std::vector<std::vector<Rational>> values(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) values[i][j] = values[j][i] = ScalarTraits<Rational>::ratio(level(rng), 1000);
  return StepGraphon<Rational>(std::move(weights), std::move(values));
}

template <class S>
StepGraphon<S> permute_blocks(const StepGraphon<S>& w, std::span<const std::size_t> order) {
  const std::size_t m = w.blocks();
  if (order.size() != m) throw std::invalid_argument("permute_blocks: order has wrong length");
  std::vector<bool> seen(m, false);
  for (std::size_t i : order) {
    if (i >= m || seen[i]) throw std::invalid_argument("permute_blocks: not a permutation");
    seen[i] = true;
  }
  std::vector<S> weights(m);
  std::vector<std::vector<S>> values(m, std::vector<S>(m));
  for (std::size_t i = 0; i < m; ++i) {
    weights[i] = w.weight(order[i]);
    for (std::size_t j = 0; j < m; ++j) values[i][j] = w.value(order[i], order[j]);
  }
  return StepGraphon<S>(std::move(weights), std::move(values));
}

template <class S>
StepGraphon<S> split_block(const StepGraphon<S>& w, std::size_t block) {
  const std::size_t m = w.blocks();
  if (block >= m) throw std::invalid_argument("split_block: block out of range");
  std::vector<std::size_t> source;  // new index -> old index
  for (std::size_t i = 0; i < m; ++i) {
    source.push_back(i);
    if (i == block) source.push_back(i);
  }
  std::vector<S> weights;
  for (std::size_t i : source) weights.push_back(i == block ? S(w.weight(i) / 2) : w.weight(i));
  std::vector<std::vector<S>> values;
  for (std::size_t i : source) {
    std::vector<S> row;
    for (std::size_t j : source) row.push_back(w.value(i, j));
    values.push_back(std::move(row));
  }
  return StepGraphon<S>(std::move(weights), std::move(values));
}

StepGraphon<double> to_double(const StepGraphon<Rational>& w) {
  std::vector<double> weights;
  for (const auto& a : w.weights()) weights.push_back(a.get_d());
  std::vector<std::vector<double>> values(w.blocks());
  for (std::size_t i = 0; i < w.blocks(); ++i)
    for (std::size_t j = 0; j < w.blocks(); ++j) values[i].push_back(w.value(i, j).get_d());
  return StepGraphon<double>(std::move(weights), std::move(values));
}

StepGraphon<Rational> to_exact(const StepGraphon<double>& w) {
  // Binary values are exact rationals, but the weights need not sum to exactly 1.
  return rationalize(w, 1'000'000'000L);
}

StepGraphon<Rational> rationalize(const StepGraphon<double>& w, long max_den) {
  if (max_den < 1) throw std::invalid_argument("rationalize: max_den must be >= 1");
  const std::size_t m = w.blocks();
  std::vector<long> counts(m);
  long total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    counts[i] = std::lround(w.weight(i) * static_cast<double>(max_den));
    if (counts[i] < 0) counts[i] = 0;
    total += counts[i];
  }
  const auto heaviest = std::max_element(counts.begin(), counts.end()) - counts.begin();
  counts[heaviest] += max_den - total;
  if (counts[heaviest] <= 0) throw std::invalid_argument("rationalize: cannot fix up weights");
  std::vector<Rational> weights;
  for (long c : counts) weights.push_back(ScalarTraits<Rational>::ratio(c, max_den));
  std::vector<std::vector<Rational>> values(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const double x = std::clamp(w.value(i, j), 0.0, 1.0);
      values[i][j] = values[j][i] = best_rational(x, max_den);
    }
  return drop_empty_blocks(std::move(weights), std::move(values));
}

namespace {

template <class S>
nlohmann::json scalar_to_json(const S& x) {
  if constexpr (ScalarTraits<S>::exact)
    return render(x);
  else
    return x;
}

template <class S>
S scalar_from_json(const nlohmann::json& j, const std::string& where) {
  if constexpr (ScalarTraits<S>::exact) {
    try {
      if (j.is_string()) return parse_rational(j.get<std::string>());
      if (j.is_number_integer()) return Rational(j.get<long>());
      if (j.is_number_float()) return parse_rational(j.dump());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
    throw std::invalid_argument(where + ": expected a number or \"p/q\" string");
  } else {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
      try {
        return parse_rational(j.get<std::string>()).get_d();
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
      }
    }
    throw std::invalid_argument(where + ": expected a number");
  }
}

}  // namespace

template <class S>
nlohmann::json graphon_to_json(const StepGraphon<S>& w) {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& a : w.weights()) weights.push_back(scalar_to_json(a));
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t i = 0; i < w.blocks(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : w.row(i)) row.push_back(scalar_to_json(x));
    values.push_back(std::move(row));
  }
  return {{"weights", std::move(weights)}, {"values", std::move(values)}};
}

template <class S>
StepGraphon<S> graphon_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("values"))
    throw std::invalid_argument("graphon JSON needs \"weights\" and \"values\"");
  const auto& jw = j.at("weights");
  const auto& jv = j.at("values");
  if (!jw.is_array() || !jv.is_array()) throw std::invalid_argument("\"weights\" and \"values\" must be arrays");
  std::vector<S> weights;
  for (std::size_t i = 0; i < jw.size(); ++i)
    weights.push_back(scalar_from_json<S>(jw[i], "weights[" + std::to_string(i) + "]"));
  std::vector<std::vector<S>> values;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    if (!jv[i].is_array()) throw std::invalid_argument("values[" + std::to_string(i) + "] must be an array");
    std::vector<S> row;
    for (std::size_t c = 0; c < jv[i].size(); ++c)
      row.push_back(scalar_from_json<S>(jv[i][c], "values[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
    values.push_back(std::move(row));
  }
  return StepGraphon<S>(std::move(weights), std::move(values));
}

template <class S>
StepGraphon<S> read_graphon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graphon file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("graphon file '" + path + "': " + e.what());
  }
  return graphon_from_json<S>(j);
}

#define RAMSEY_INSTANTIATE(S)                                                                              \
  template class StepGraphon<S>;                                                                           \
  template StepGraphon<S> complement(const StepGraphon<S>&);                                               \
  template StepGraphon<S> drop_empty_blocks(std::vector<S>, std::vector<std::vector<S>>);                  \
  template StepGraphon<S> w_epsilon(const S&);                                                             \
  template StepGraphon<S> constant(const S&);                                                              \
  template StepGraphon<S> two_cliques();                                                                   \
  template StepGraphon<S> permute_blocks(const StepGraphon<S>&, std::span<const std::size_t>);             \
  template StepGraphon<S> split_block(const StepGraphon<S>&, std::size_t);                                 \
  template nlohmann::json graphon_to_json(const StepGraphon<S>&);                                          \
  template StepGraphon<S> graphon_from_json(const nlohmann::json&);                                        \
  template StepGraphon<S> read_graphon_file(const std::string&);

RAMSEY_INSTANTIATE(double)
RAMSEY_INSTANTIATE(Rational)

#undef RAMSEY_INSTANTIATE

}  // namespace ramsey
