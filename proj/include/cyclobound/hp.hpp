#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include <gmpxx.h>

namespace cyclobound {

/// Thin RAII wrapper around an mpfr_t. Arithmetic results carry the
/// precision of the left operand. Rounding is to nearest throughout;
/// callers that need directed bounds add explicit slack.
class Real {
 public:
  explicit Real(int bits = 192) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(Real o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real from(double x, int bits = 192) { Real r(bits); mpfr_set_d(r.v_, x, MPFR_RNDN); return r; }
  static Real from(const mpz_class& x, int bits = 192) { Real r(bits); mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN); return r; }
  static Real pi(int bits) { Real r(bits); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  mpz_class round_to_int() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
  }
  std::string str(int digits = 20) const;

  friend Real operator+(const Real& a, const Real& b) { Real r(a.precision()); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r(a.precision()); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r(a.precision()); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r(a.precision()); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }

  Real& mul_si(long s) { mpfr_mul_si(v_, v_, s, MPFR_RNDN); return *this; }
  Real& add_si(long s) { mpfr_add_si(v_, v_, s, MPFR_RNDN); return *this; }
  Real& div_ui(unsigned long s) { mpfr_div_ui(v_, v_, s, MPFR_RNDN); return *this; }
  Real& addmul(const Real& a, const mpz_class& z) {
    Real t(precision());
    mpfr_mul_z(t.v_, a.v_, z.get_mpz_t(), MPFR_RNDN);
    mpfr_add(v_, v_, t.v_, MPFR_RNDN);
    return *this;
  }

  friend Real cos(const Real& a) { Real r(a.precision()); mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real abs(const Real& a) { Real r(a.precision()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }

  int cmp(const Real& b) const { return mpfr_cmp(v_, b.v_); }
  int cmp(double b) const { return mpfr_cmp_d(v_, b); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace cyclobound
