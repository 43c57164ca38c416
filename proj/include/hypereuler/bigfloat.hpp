#pragma once

/**
 * @file bigfloat.hpp
 * @brief Owning wrapper over an mpfr_t with explicit precision and rounding.
 *
 * Binary operators round to nearest and produce the larger of the two
 * operand precisions. The free functions taking an mpfr_rnd_t are used for
 * error bounds, which are always rounded up.
 */

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "hypereuler/rational.hpp"

namespace hypereuler {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long x, mpfr_prec_t prec) : BigFloat(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
  BigFloat(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) : BigFloat(prec) {
    mpfr_set_q(v_, q.get_mpq_t(), rnd);
  }

  BigFloat(const BigFloat& other) : BigFloat(mpfr_get_prec(other.v_)) { mpfr_set(v_, other.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific notation with `sig` significant digits, rounded per `rnd`.
  std::string to_string(int sig, mpfr_rnd_t rnd = MPFR_RNDN) const {
    char* buf = nullptr;
    const char* fmt = rnd == MPFR_RNDU ? "%.*RUe" : rnd == MPFR_RNDD ? "%.*RDe" : "%.*RNe";
    mpfr_asprintf(&buf, fmt, std::max(sig - 1, 0), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

namespace bf {

inline mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

inline BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat out(max_prec(a, b));
  mpfr_add(out.get(), a.get(), b.get(), rnd);
  return out;
}
inline BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat out(max_prec(a, b));
  mpfr_sub(out.get(), a.get(), b.get(), rnd);
  return out;
}
inline BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat out(max_prec(a, b));
  mpfr_mul(out.get(), a.get(), b.get(), rnd);
  return out;
}
inline BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat out(max_prec(a, b));
  mpfr_div(out.get(), a.get(), b.get(), rnd);
  return out;
}
inline BigFloat abs(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_abs(out.get(), a.get(), MPFR_RNDN);  // exact
  return out;
}
inline BigFloat mul_d(const BigFloat& a, double d, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat out(a.precision());
  mpfr_mul_d(out.get(), a.get(), d, rnd);
  return out;
}
/// n^{-e} for integers n >= 1, e >= 0.
inline BigFloat inv_pow(unsigned long n, unsigned long e, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat out(prec);
  const mpfr_rnd_t inner = rnd == MPFR_RNDU ? MPFR_RNDD : rnd == MPFR_RNDD ? MPFR_RNDU : rnd;
  mpfr_ui_pow_ui(out.get(), n, e, inner);
  mpfr_ui_div(out.get(), 1, out.get(), rnd);
  return out;
}
/// 2^{-bits}, exact.
inline BigFloat pow2(long e, mpfr_prec_t prec) {
  BigFloat out(prec);
  mpfr_set_ui_2exp(out.get(), 1, e, MPFR_RNDN);
  return out;
}
inline BigFloat log(const BigFloat& a, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat out(a.precision());
  mpfr_log(out.get(), a.get(), rnd);
  return out;
}
inline BigFloat pow_real(const BigFloat& base, double e, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat exponent(base.precision());
  mpfr_set_d(exponent.get(), e, MPFR_RNDN);
  BigFloat out(base.precision());
  mpfr_pow(out.get(), base.get(), exponent.get(), rnd);
  return out;
}
inline BigFloat pi(mpfr_prec_t prec) {
  BigFloat out(prec);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}
inline BigFloat pow10(long e, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat out(prec);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(std::labs(e)), rnd == MPFR_RNDU && e < 0 ? MPFR_RNDD : rnd);
  if (e < 0) mpfr_ui_div(out.get(), 1, out.get(), rnd);
  return out;
}

}  // namespace bf
}  // namespace hypereuler
