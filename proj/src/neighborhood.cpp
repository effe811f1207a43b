#include "ramsey/neighborhood.hpp"

#include <cmath>
#include <stdexcept>

#include "ramsey/density.hpp"
#include "ramsey/error.hpp"

namespace ramsey {

namespace {

double profile_count(std::size_t m, unsigned k) {
  // C(m+k-1, k)
  double count = 1.0;
  for (unsigned i = 1; i <= k; ++i) count = count * static_cast<double>(m - 1 + i) / static_cast<double>(i);
  return std::round(count);
}

mpz_class multinomial(const std::vector<std::size_t>& blocks) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), blocks.size());
  std::size_t run = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    ++run;
    if (i + 1 == blocks.size() || blocks[i + 1] != blocks[i]) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), run);
      result /= f;
      run = 0;
    }
  }
  return result;
}

template <class S>
S from_integer(const mpz_class& z) {
  if constexpr (ScalarTraits<S>::exact)
    return Rational(z);
  else
    return z.get_d();
}

// nb[j] = prod_i V(b_i, j) where V is W (color 0) or 1 - W (color 1).
template <class S>
std::vector<S> neighborhood(const StepGraphon<S>& colored, const std::vector<std::size_t>& blocks) {
  std::vector<S> nb(colored.blocks(), S(1));
  for (std::size_t j = 0; j < colored.blocks(); ++j)
    for (std::size_t b : blocks) {
      nb[j] *= colored.value(b, j);
      if (nb[j] == 0) break;
    }
  return nb;
}

template <class S>
S degree_of(const StepGraphon<S>& colored, const std::vector<S>& nb) {
  S d = 0;
  for (std::size_t j = 0; j < colored.blocks(); ++j) d += colored.weight(j) * nb[j];
  return d;
}

// sum_{j,j'} a_j a_j' V(j,j') nb_j nb_j', i.e. d^2 * delta.
template <class S>
S edge_mass_of(const StepGraphon<S>& colored, const std::vector<S>& nb) {
  S total = 0;
  for (std::size_t j = 0; j < colored.blocks(); ++j) {
    if (nb[j] == 0) continue;
    S row = 0;
    for (std::size_t l = 0; l < colored.blocks(); ++l) row += colored.weight(l) * colored.value(j, l) * nb[l];
    total += colored.weight(j) * nb[j] * row;
  }
  return total;
}

template <class S>
const StepGraphon<S>& pick_color(const StepGraphon<S>& w, const StepGraphon<S>& comp, unsigned color) {
  return color == 0 ? w : comp;
}

}  // namespace

template <class S>
std::vector<BlockProfile<S>> enumerate_profiles(const StepGraphon<S>& w, unsigned k, std::uint64_t budget) {
  const std::size_t m = w.blocks();
  const double count = 2.0 * profile_count(m, k);
  if (count > static_cast<double>(budget)) throw BudgetExceeded(count, budget);
  std::vector<BlockProfile<S>> profiles;
  profiles.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> blocks(k, 0);
  std::vector<BlockProfile<S>> color0;
  while (true) {
    S mass = from_integer<S>(multinomial(blocks));
    for (std::size_t b : blocks) mass *= w.weight(b);
    color0.push_back({0, blocks, mass});
    // Next nondecreasing sequence.
    std::size_t pos = k;
    while (pos > 0 && blocks[pos - 1] == m - 1) --pos;
    if (pos == 0) break;
    const std::size_t next = blocks[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < k; ++i) blocks[i] = next;
  }
  for (const auto& p : color0) profiles.push_back(p);
  for (const auto& p : color0) profiles.push_back({1, p.blocks, p.mass});
  return profiles;
}

template <class S>
S common_degree(const StepGraphon<S>& w, const BlockProfile<S>& profile) {
  if (profile.color == 0) return degree_of(w, neighborhood(w, profile.blocks));
  const StepGraphon<S> comp = complement(w);
  return degree_of(comp, neighborhood(comp, profile.blocks));
}

template <class S>
S common_edge_density(const StepGraphon<S>& w, const BlockProfile<S>& profile) {
  const StepGraphon<S> comp = complement(w);
  const StepGraphon<S>& colored = pick_color(w, comp, profile.color);
  const std::vector<S> nb = neighborhood(colored, profile.blocks);
  const S d = degree_of(colored, nb);
  if (d == 0) return S(0);
  return S(edge_mass_of(colored, nb) / (d * d));
}

template <class S>
S dk_integral(const StepGraphon<S>& w, unsigned k, unsigned p, unsigned q, std::uint64_t budget) {
  if (k == 0) throw std::invalid_argument("dk_integral: k must be >= 1");
  if (q >= 1 && p == 0) throw std::invalid_argument("dk_integral: p must be >= 1 when q >= 1");
  const StepGraphon<S> comp = complement(w);
  S total = 0;
  for (const auto& profile : enumerate_profiles(w, k, budget)) {
    const StepGraphon<S>& colored = pick_color(w, comp, profile.color);
    const std::vector<S> nb = neighborhood(colored, profile.blocks);
    const S d = degree_of(colored, nb);
    if (d == 0) continue;
    S integrand = ipow(d, p);
    if (q > 0) {
      const S delta = edge_mass_of(colored, nb) / (d * d);
      integrand *= ipow(delta, q);
    }
    total += profile.mass * integrand;
  }
  return total;
}

template <class S>
S sidorenko_apex_lower_bound(unsigned n, unsigned k, const StepGraphon<S>& w) {
  if (n < 2) throw std::invalid_argument("sidorenko_apex_lower_bound: n must be >= 2");
  return dk_integral(w, k, n, n - 1);
}

template <class S>
HolderCheck holder_check(const StepGraphon<S>& w, unsigned k, unsigned n) {
  if (n < 2) throw std::invalid_argument("holder_check: n must be >= 2");
  HolderCheck out;
  out.lhs = to_double(dk_integral(w, k, 2, 1));
  const double degree_integral = to_double(dk_integral(w, k, 1, 0));
  const double top = to_double(dk_integral(w, k, n, n - 1));
  const double inv = 1.0 / static_cast<double>(n - 1);
  out.rhs = std::pow(degree_integral, static_cast<double>(n - 2) * inv) * std::pow(top, inv);
  out.holds = out.lhs <= out.rhs + 1e-12;
  return out;
}

template <class S>
S theorem_bound(unsigned n, unsigned k, const StepGraphon<S>& w) {
  if (n < 2) throw std::invalid_argument("theorem_bound: n must be >= 2");
  return S(ipow(book_mono_closed(w, k), n - 1) / ipow(star_mono_closed(w, k), n - 2));
}

#define RAMSEY_INSTANTIATE(S)                                                                           \
  template std::vector<BlockProfile<S>> enumerate_profiles(const StepGraphon<S>&, unsigned, std::uint64_t); \
  template S common_degree(const StepGraphon<S>&, const BlockProfile<S>&);                              \
  template S common_edge_density(const StepGraphon<S>&, const BlockProfile<S>&);                        \
  template S dk_integral(const StepGraphon<S>&, unsigned, unsigned, unsigned, std::uint64_t);           \
  template S sidorenko_apex_lower_bound(unsigned, unsigned, const StepGraphon<S>&);                     \
  template HolderCheck holder_check(const StepGraphon<S>&, unsigned, unsigned);                         \
  template S theorem_bound(unsigned, unsigned, const StepGraphon<S>&);

RAMSEY_INSTANTIATE(double)
RAMSEY_INSTANTIATE(Rational)

#undef RAMSEY_INSTANTIATE

}  // namespace ramsey
