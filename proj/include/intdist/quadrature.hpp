#pragma once

#include <vector>

#include "real.hpp"

namespace intdist {

// Gauss-Legendre rule on [-1, 1], nodes found by Newton iteration at the
// requested precision (plus guard bits).
class GaussLegendre {
 public:
  GaussLegendre(int n, unsigned bits) : bits_(bits) {
    const unsigned wp = bits + 32;
    const Real eps = ldexp(Real(1, wp), -static_cast<long>(bits) - 8);
    const double pi_d = 3.14159265358979323846;
    for (int i = 1; i <= (n + 1) / 2; ++i) {
      Real x(std::cos(pi_d * (i - 0.25) / (n + 0.5)), wp);
      Real dp(wp);
      for (int it = 0; it < 200; ++it) {
        Real p0(1, wp), p1(x);
        for (int j = 2; j <= n; ++j) {
          Real p2 = ((2L * j - 1) * (x * p1) - (j - 1L) * p0) / static_cast<long>(j);
          p0 = std::move(p1);
          p1 = std::move(p2);
        }
        dp = (n * (x * p1 - p0)) / (x * x - 1L);
        Real dx = p1 / dp;
        x -= dx;
        if (abs(dx) < eps) break;
      }
      // refresh derivative at the converged node
      Real p0(1, wp), p1(x);
      for (int j = 2; j <= n; ++j) {
        Real p2 = ((2L * j - 1) * (x * p1) - (j - 1L) * p0) / static_cast<long>(j);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = (n * (x * p1 - p0)) / (x * x - 1L);
      Real w = Real(2, wp) / ((1L - x * x) * dp * dp);
      nodes_.push_back(x);
      weights_.push_back(w);
      if (2 * i - 1 != n) {
        nodes_.push_back(-x);
        weights_.push_back(w);
      }
    }
  }

  template <class F>
  Real apply(const F& f, const Real& a, const Real& b) const {
    Real half = (b - a) / 2L;
    Real mid = (a + b) / 2L;
    Real sum(bits_ + 32);
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
    return sum * half;
  }

  unsigned bits() const { return bits_; }

 private:
  unsigned bits_;
  std::vector<Real> nodes_, weights_;
};

namespace detail {
template <class F>
Real adaptive_gl(const GaussLegendre& rule, const F& f, const Real& a, const Real& b, const Real& whole,
                 const Real& target, int depth) {
  Real m = (a + b) / 2L;
  Real left = rule.apply(f, a, m);
  Real right = rule.apply(f, m, b);
  Real both = left + right;
  if (depth <= 0 || abs(both - whole) < target) return both;
  Real t = target / 2L;
  return adaptive_gl(rule, f, a, m, left, t, depth - 1) + adaptive_gl(rule, f, m, b, right, t, depth - 1);
}
}  // namespace detail

// Adaptive Gauss-Legendre: bisect until the two-panel estimate matches the
// one-panel estimate to 2^(-bits/2) in absolute terms.
template <class F>
Real integrate(const F& f, const Real& a, const Real& b, unsigned bits, int order = 24) {
  GaussLegendre rule(order, bits);
  Real target = ldexp(Real(1, bits + 32), -static_cast<long>(bits / 2));
  if (a == b) return Real(bits);
  Real whole = rule.apply(f, a, b);
  Real r = detail::adaptive_gl(rule, f, a, b, whole, target, 48);
  Real out(bits);
  mpfr_set(out.get(), r.get(), MPFR_RNDN);
  return out;
}

}  // namespace intdist
