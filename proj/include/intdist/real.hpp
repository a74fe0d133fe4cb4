#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace intdist {

// Working precision plus comparison tolerance, passed explicitly everywhere.
struct PrecisionContext {
  unsigned bits = 256;
  double tol = 1e-9;

  void validate() const {
    if (bits < 64) throw DomainError("precision must be at least 64 bits");
    if (!(tol > 0.0 && tol < 1.0)) throw DomainError("tol must lie in (0, 1)");
  }
};

// Owning MPFR value. Each value carries its own precision; binary operations
// round to the larger of the two operand precisions.
class Real {
 public:
  explicit Real(unsigned bits = 256) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(double x, unsigned bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(long x, unsigned bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(int x, unsigned bits) : Real(static_cast<long>(x), bits) {}

  static Real from_string(std::string_view s, unsigned bits) {
    Real r(bits);
    std::string tmp(s);
    if (tmp.empty() || mpfr_set_str(r.v_, tmp.c_str(), 10, MPFR_RNDN) != 0)
      throw UsageError("not a number: '" + tmp + "'");
    return r;
  }
  // p / q rounded once.
  static Real ratio(long p, long q, unsigned bits) {
    Real r(p, bits);
    mpfr_div_si(r.v_, r.v_, q, MPFR_RNDN);
    return r;
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_floor() const { return mpfr_get_si(v_, MPFR_RNDD); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Decimal text with the given number of significant digits (ties to even).
  std::string str(int digits = 17) const {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  Real& operator+=(const Real& o) { return apply(o, mpfr_add); }
  Real& operator-=(const Real& o) { return apply(o, mpfr_sub); }
  Real& operator*=(const Real& o) { return apply(o, mpfr_mul); }
  Real& operator/=(const Real& o) { return apply(o, mpfr_div); }
  Real& operator+=(long x) { mpfr_add_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& operator-=(long x) { mpfr_sub_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& operator*=(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& operator/=(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }

  Real operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

 private:
  template <class F>
  Real& apply(const Real& o, F f) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    f(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  mpfr_t v_;
};

inline Real operator+(Real a, const Real& b) { return a += b; }
inline Real operator-(Real a, const Real& b) { return a -= b; }
inline Real operator*(Real a, const Real& b) { return a *= b; }
inline Real operator/(Real a, const Real& b) { return a /= b; }
inline Real operator+(Real a, long b) { return a += b; }
inline Real operator-(Real a, long b) { return a -= b; }
inline Real operator*(Real a, long b) { return a *= b; }
inline Real operator/(Real a, long b) { return a /= b; }
inline Real operator+(long a, Real b) { return b += a; }
inline Real operator*(long a, Real b) { return b *= a; }
inline Real operator-(long a, const Real& b) { return Real(a, b.bits()) - b; }
inline Real operator/(long a, const Real& b) { return Real(a, b.bits()) / b; }

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) < 0; }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) > 0; }

inline std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

namespace detail {
template <class F>
Real unary(const Real& x, F f) {
  Real r(x.bits());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline Real sqrt(const Real& x) { return detail::unary(x, mpfr_sqrt); }
inline Real sin(const Real& x) { return detail::unary(x, mpfr_sin); }
inline Real cos(const Real& x) { return detail::unary(x, mpfr_cos); }
inline Real asin(const Real& x) { return detail::unary(x, mpfr_asin); }
inline Real abs(const Real& x) { return detail::unary(x, mpfr_abs); }
inline Real gamma(const Real& x) { return detail::unary(x, mpfr_gamma); }
inline Real log2(const Real& x) { return detail::unary(x, mpfr_log2); }
inline Real floor(const Real& x) {
  Real r(x.bits());
  mpfr_floor(r.get(), x.get());
  return r;
}
inline Real round_nearest(const Real& x) {
  Real r(x.bits());
  mpfr_rint(r.get(), x.get(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.bits(), y.bits()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, unsigned long n) {
  Real r(x.bits());
  mpfr_pow_ui(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}
inline Real ldexp(const Real& x, long e) {
  Real r(x.bits());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
inline Real pi(unsigned bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }

// x - floor(x), always in [0, 1).
inline Real fractional_part(const Real& x) { return x - floor(x); }
inline double fractional_part(double x) { return x - std::floor(x); }

// A real number that can be regenerated at any precision.
using Constant = std::function<Real(unsigned bits)>;

inline Constant constant_from_string(std::string s) {
  Real::from_string(s, 64);
  return [s = std::move(s)](unsigned bits) { return Real::from_string(s, bits); };
}
// exact: a double has at most 53 significant bits
inline Constant constant_from_double(double v) {
  return [v](unsigned bits) { return Real(v, std::max(bits, 64u)); };
}
inline Constant constant_from_long(long v) {
  return [v](unsigned bits) { return Real(v, bits); };
}

}  // namespace intdist
