#pragma once

/**
 * @file rational.hpp
 * @brief Exact integer and rational scalars.
 *
 * Integer and Rational are GMP's mpz_class / mpq_class. Every Rational
 * produced by this library is canonical: lowest terms, positive
 * denominator, zero as 0/1. Text form is "num/den", or just "num" when the
 * denominator is 1.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypereuler {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }
inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Parses "num/den" or "num"; rejects anything else (no decimals).
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Integer d(std::string(den), 10);
  return make_rational(n, d);
}

/// (-1)^k as a small integer.
constexpr int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

inline int sgn(const Rational& q) { return ::sgn(q); }

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rational rpow(const Rational& base, unsigned long e) {
  Rational out(ipow(base.get_num(), e), ipow(base.get_den(), e));
  out.canonicalize();
  return out;
}

}  // namespace hypereuler
