#include "ramsey/scalar.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ramsey {

const char* backend_name(Backend backend) {
  return backend == Backend::Exact ? "exact" : "f64";
}

std::string shortest_decimal(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
  return std::string(buf.data(), end);
}

std::string ScalarTraits<double>::render(double x) { return shortest_decimal(x); }

std::string ScalarTraits<Rational>::render(const Rational& x) { return x.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    mpz_class exp_value = parse_integer(exp_part);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 10000)
      throw std::invalid_argument("exponent out of range");
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw std::invalid_argument("malformed decimal");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number");
    digits = std::string(s);
  }
  Rational value(mpz_class(digits, 10));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0)
    value /= scale;
  else
    value *= scale;
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return parse_decimal(text);
}

Rational best_rational(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("best_rational: non-finite input");
  if (max_den < 1) throw std::invalid_argument("best_rational: max_den < 1");
  const Rational target(x);  // exact binary value of x
  mpz_class floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), target.get_num_mpz_t(), target.get_den_mpz_t());

  // Convergents h/k of the continued fraction of target.
  mpz_class h_prev = 1, k_prev = 0;
  mpz_class h = floor_part, k = 1;
  Rational rest = target - Rational(floor_part);
  const mpz_class bound = max_den;
  while (rest != 0) {
    Rational inv = 1 / rest;
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    mpz_class k_next = a * k + k_prev;
    if (k_next > bound) {
      // Largest admissible semiconvergent, then pick whichever is closer.
      mpz_class t = (bound - k_prev) / k;
      mpz_class h_semi = t * h + h_prev;
      mpz_class k_semi = t * k + k_prev;
      Rational semi(h_semi, k_semi);
      semi.canonicalize();
      Rational conv(h, k);
      conv.canonicalize();
      if (t > 0 && abs(semi - target) < abs(conv - target)) return semi;
      return conv;
    }
    mpz_class h_next = a * h + h_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    rest = inv - Rational(a);
  }
  Rational exact(h, k);
  exact.canonicalize();
  return exact;
}

}  // namespace ramsey
