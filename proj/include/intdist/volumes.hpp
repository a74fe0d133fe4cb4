#pragma once

#include <string>
#include <string_view>

#include "quadrature.hpp"
#include "real.hpp"

namespace intdist {

enum class VMethod { closed_form, recursion, quadrature };

inline VMethod parse_vmethod(std::string_view s) {
  if (s == "closed_form") return VMethod::closed_form;
  if (s == "recursion") return VMethod::recursion;
  if (s == "quadrature") return VMethod::quadrature;
  throw UsageError("unknown method '" + std::string(s) + "'");
}

namespace detail {

// λ_d(B_d) for the unit-diameter ball, with λ_0(B_0) = 1.
inline Real unit_ball(unsigned d, unsigned bits) {
  if (d == 0) return Real(1, bits);
  Real half_d = Real::ratio(static_cast<long>(d), 2, bits);
  Real num = pow(pi(bits), half_d);
  Real den = ldexp(gamma(half_d + 1L), static_cast<long>(d));
  return num / den;
}

inline Real v_closed_form(unsigned d, unsigned bits) {
  const unsigned wp = bits + 32;
  Real out(bits);
  if (d % 2 == 0) {
    const unsigned m = d / 2;
    Real pref(1, wp), sum(wp);
    Real t = sqrt(Real(3, wp)) / 2L;
    for (unsigned k = 0; k < m; ++k) {
      sum += t;
      t *= static_cast<long>(2 * k + 2) * 3L;
      t /= static_cast<long>(2 * k + 3) * 4L;
    }
    for (unsigned i = 1; i <= m; ++i) {
      pref *= static_cast<long>(2 * i - 1);
      pref /= static_cast<long>(2 * i);
    }
    Real r = pref * (sum / 2L + pi(wp) / 6L);
    mpfr_set(out.get(), r.get(), MPFR_RNDN);
  } else {
    const unsigned m = (d - 1) / 2;
    Real pref(1, wp), sum(wp), u(1, wp);
    for (unsigned k = 0; k <= m; ++k) {
      sum += u;
      u *= static_cast<long>(2 * k + 1) * 3L;
      u /= static_cast<long>(2 * k + 2) * 4L;
    }
    for (unsigned i = 1; i <= m; ++i) {
      pref *= static_cast<long>(2 * i);
      pref /= static_cast<long>(2 * i + 1);
    }
    Real r = pref * sum / 2L;
    mpfr_set(out.get(), r.get(), MPFR_RNDN);
  }
  return out;
}

// d·v(d) = (d-1)·v(d-2) + (1/2)(3/4)^((d-1)/2); eliminating the geometric term
// gives 4d·v(d) = (7d-10)·v(d-2) - 3(d-3)·v(d-4) for either parity.
inline Real v_recursion(unsigned d, unsigned bits) {
  const unsigned wp = bits + 32;
  Real a(wp), b(wp);  // v(s-2), v(s)
  unsigned s;
  if (d % 2 == 1) {
    a = Real::ratio(1, 2, wp);
    b = Real::ratio(11, 24, wp);
    if (d == 1) { Real o(bits); mpfr_set(o.get(), a.get(), MPFR_RNDN); return o; }
    s = 3;
  } else {
    a = pi(wp) / 6L;
    b = sqrt(Real(3, wp)) / 8L + pi(wp) / 12L;
    s = 2;
  }
  while (s < d) {
    s += 2;
    const long sl = static_cast<long>(s);
    Real next = ((7 * sl - 10) * b - (3 * (sl - 3)) * a) / (4 * sl);
    a = std::move(b);
    b = std::move(next);
  }
  Real o(bits);
  mpfr_set(o.get(), b.get(), MPFR_RNDN);
  return o;
}

inline Real cos_power_quad(unsigned d, const Real& upper, unsigned bits) {
  auto f = [d](const Real& x) { return pow(cos(x), static_cast<unsigned long>(d)); };
  return integrate(f, Real(bits + 32), upper, bits);
}

inline void require_d(unsigned d) {
  if (d == 0) throw DomainError("dimension must be at least 1");
}

}  // namespace detail

// diameter^d π^{d/2} / (2^d Γ(d/2 + 1))
inline Real ball_volume(unsigned d, const Real& diameter) {
  detail::require_d(d);
  if (diameter.sign() <= 0) throw DomainError("diameter must be positive");
  return detail::unit_ball(d, diameter.bits()) * pow(diameter, static_cast<unsigned long>(d));
}
inline Real ball_volume(unsigned d, double diameter, unsigned bits = 256) {
  return ball_volume(d, Real(diameter, bits));
}

// v(d) = ∫_0^{π/6} cos^d x dx
inline Real cos_power_integral(unsigned d, VMethod method, unsigned bits = 256) {
  detail::require_d(d);
  switch (method) {
    case VMethod::closed_form: return detail::v_closed_form(d, bits);
    case VMethod::recursion: return detail::v_recursion(d, bits);
    case VMethod::quadrature: return detail::cos_power_quad(d, pi(bits + 32) / 6L, bits);
  }
  throw UsageError("unknown method");
}

inline Real slice_volume(unsigned d, unsigned bits = 256) {
  detail::require_d(d);
  return detail::unit_ball(d - 1, bits) * cos_power_integral(d, VMethod::closed_form, bits);
}

inline Real cap_volume(unsigned d, unsigned bits = 256) {
  detail::require_d(d);
  return (detail::unit_ball(d, bits) - slice_volume(d, bits)) / 2L;
}

// Volume of the symmetric slice with diameter D and width ω.
inline Real width_volume_bound(unsigned d, const Real& D, const Real& omega) {
  detail::require_d(d);
  const unsigned bits = std::max(D.bits(), omega.bits());
  if (D.sign() <= 0) throw DomainError("D must be positive");
  if (omega.sign() < 0 || omega > D) throw DomainError("width must lie in [0, D]");
  if (omega.is_zero()) return Real(bits);
  Real top = asin(omega / D);
  return detail::unit_ball(d - 1, bits) * pow(D, static_cast<unsigned long>(d)) *
         detail::cos_power_quad(d, top, bits);
}
inline Real width_volume_bound(unsigned d, double D, double omega, unsigned bits = 256) {
  return width_volume_bound(d, Real(D, bits), Real(omega, bits));
}

enum class ExtremalKind { f_circ, l_circ, f, f_one, one_dim, l_conjecture };

inline ExtremalKind parse_extremal_kind(std::string_view s) {
  if (s == "f_circ") return ExtremalKind::f_circ;
  if (s == "l_circ") return ExtremalKind::l_circ;
  if (s == "f") return ExtremalKind::f;
  if (s == "f_one") return ExtremalKind::f_one;
  if (s == "one_dim") return ExtremalKind::one_dim;
  if (s == "l" || s == "l_conjecture") return ExtremalKind::l_conjecture;
  throw UsageError("unknown extremal kind '" + std::string(s) + "'");
}

struct ExtremalValue {
  Real value;
  bool conjectural = false;
};

inline ExtremalValue extremal_volume(ExtremalKind kind, unsigned d, unsigned n, unsigned bits = 256) {
  detail::require_d(d);
  if (n == 0) throw DomainError("component count must be at least 1");
  const Real ball = detail::unit_ball(d, bits);
  switch (kind) {
    case ExtremalKind::one_dim: return {Real(1, bits)};
    case ExtremalKind::f_one: return {ball};
    case ExtremalKind::f_circ:
    case ExtremalKind::l_circ: {
      if (d == 1) return {Real(1, bits)};
      Real ratio = ldexp(Real(static_cast<long>(n), bits), -static_cast<long>(d));
      return {max(Real(1, bits), ratio) * ball};
    }
    case ExtremalKind::f:
      if (d == 1) return {Real(1, bits)};
      if (n == 1) return {ball};
      return {static_cast<long>(n) * slice_volume(d, bits)};
    case ExtremalKind::l_conjecture:
      if (d == 1) return {Real(1, bits)};
      if (n == 1) return {ball};
      return {static_cast<long>(n) * slice_volume(d, bits), true};
  }
  throw UsageError("unknown extremal kind");
}

// λ_{d-1}(B_{d-1}) · (2d/(d+1))^{(d-1)/2}
inline Real jung_bound(unsigned d, unsigned bits = 256) {
  if (d < 2) throw DomainError("jung bound needs d >= 2");
  Real base = Real::ratio(2L * d, d + 1L, bits);
  Real e = Real::ratio(d - 1L, 2, bits);
  return detail::unit_ball(d - 1, bits) * pow(base, e);
}

inline Real averaging_bound(unsigned n, const Real& lambda, unsigned k) {
  if (n == 0) throw DomainError("n must be at least 1");
  if (k < n) throw DomainError("averaging bound needs k >= n");
  if (lambda.sign() <= 0) throw DomainError("volume must be positive");
  return lambda * static_cast<long>(k) / static_cast<long>(n);
}

inline Real asymptotic_v(unsigned d, unsigned bits = 256) {
  detail::require_d(d);
  return sqrt(pi(bits) / (2L * static_cast<long>(d)));
}

}  // namespace intdist
