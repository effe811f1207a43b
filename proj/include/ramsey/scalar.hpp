#pragma once

// Scalar backends. Every density routine is written once against a scalar type S
// and instantiated for double (fast, rounded) and Rational (GMP, never rounds).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ramsey {

using Rational = mpq_class;

enum class Backend { F64, Exact };

const char* backend_name(Backend backend);

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr Backend backend = Backend::F64;
  static constexpr bool exact = false;

  static double ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
  static double to_double(double x) { return x; }
  static std::string render(double x);
};

template <>
struct ScalarTraits<Rational> {
  static constexpr Backend backend = Backend::Exact;
  static constexpr bool exact = true;

  static Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  static double to_double(const Rational& x) { return x.get_d(); }
  static std::string render(const Rational& x);
};

template <class S>
double to_double(const S& x) {
  return ScalarTraits<S>::to_double(x);
}

template <class S>
std::string render(const S& x) {
  return ScalarTraits<S>::render(x);
}

// Integer power by repeated squaring; exact for Rational.
template <class S>
S ipow(const S& base, unsigned exponent) {
  S result = 1;
  S square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

// Accepts "p/q", integers, and decimal literals ("0.05", "1e-3"); decimals are
// read exactly, so "0.05" is 1/20. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Closest rational with denominator <= max_den (continued-fraction convergents
// and semiconvergents).
Rational best_rational(double x, long max_den);

// Shortest decimal that round-trips the double.
std::string shortest_decimal(double x);

}  // namespace ramsey
