#include "amnm/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace amnm {

namespace {

std::optional<mpz_class> exact_isqrt(const mpz_class& z) {
  if (z < 0) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
  if (root * root != z) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& q) {
  auto num = exact_isqrt(q.get_num());
  auto den = exact_isqrt(q.get_den());
  if (!num || !den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

double to_double(const Rational& q) {
  const double t = q.get_d();
  if (!std::isfinite(t)) return t;
  double best = t;
  Rational best_gap = abs(Rational(t) - q);
  for (double c : {std::nextafter(t, -HUGE_VAL), std::nextafter(t, HUGE_VAL)}) {
    if (!std::isfinite(c)) continue;
    const Rational gap = abs(Rational(c) - q);
    if (gap < best_gap || (gap == best_gap && std::fmod(std::ldexp(std::frexp(c, nullptr), 53), 2.0) == 0.0)) {
      best = c;
      best_gap = gap;
    }
  }
  return best;
}

std::string to_string(const Rational& q) {
  Rational r(q);
  r.canonicalize();
  return r.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return r;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t decimals = text.size() - dot - 1;
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad decimal literal: " + text);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, decimals);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace amnm
