#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lll.hpp"
#include "real.hpp"

namespace intdist {

// Find k ≤ k_max with frac(α_j·k + β_j) < ε for all j.
struct ApproximationProblem {
  std::vector<Constant> multipliers;
  std::vector<Constant> offsets;
  Constant epsilon;
  std::uint64_t k_max = 0;
};

struct KHit {
  std::uint64_t k;
  Real worst_frac;
};

namespace detail {

enum class FracVerdict { accept, reject, ambiguous };

struct FracEval {
  FracVerdict verdict;
  Real worst;
};

inline FracEval eval_fracs(const std::vector<Real>& a, const std::vector<Real>& b, const Real& eps, std::uint64_t k,
                           unsigned bits, bool last = false) {
  const Real band = ldexp(Real(1, bits), -static_cast<long>(bits / 4));
  const Real seam = ldexp(Real(1, bits), -static_cast<long>(bits / 2));
  Real kk(bits);
  mpfr_set_uj(kk.get(), k, MPFR_RNDN);
  Real worst(bits);
  bool ambiguous = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Real v = fractional_part(a[j] * kk + b[j]);
    if (v > worst) worst = v;
    // an exact tie that survives the precision doubling is rejected
    if (last && v == eps) return {FracVerdict::reject, worst};
    bool near_eps = abs(v - eps) < band;
    bool near_seam = (v < seam && !v.is_zero()) || v > 1L - seam;
    if (near_eps || near_seam) {
      ambiguous = true;
    } else if (!(v < eps)) {
      return {FracVerdict::reject, worst};
    }
  }
  return {ambiguous ? FracVerdict::ambiguous : FracVerdict::accept, worst};
}

inline std::vector<Real> eval_all(const std::vector<Constant>& cs, unsigned bits) {
  std::vector<Real> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c(bits));
  return out;
}

}  // namespace detail

inline void validate(const ApproximationProblem& pr) {
  if (pr.multipliers.empty() || pr.multipliers.size() != pr.offsets.size())
    throw DomainError("multipliers and offsets must be nonempty and of equal length");
  if (!pr.epsilon) throw DomainError("epsilon missing");
  double e = pr.epsilon(64).to_double();
  if (!(e > 0 && e < 1)) throw DomainError("epsilon must lie in (0, 1)");
  for (const auto& m : pr.multipliers)
    if (!(m(64).sign() > 0)) throw DomainError("multipliers must be positive");
  if (pr.k_max == 0) throw DomainError("k_max must be positive");
}

// Exhaustive scan. A long-double running sum filters candidates; survivors
// are settled in MPFR, and values within 2^(-bits/4) of ε are re-evaluated at
// doubled precision. max_hits > 0 stops early.
inline std::vector<KHit> find_k(const ApproximationProblem& pr, unsigned bits = 256, std::size_t max_hits = 0) {
  validate(pr);
  const unsigned wp = bits + 64;
  const auto a = detail::eval_all(pr.multipliers, wp);
  const auto b = detail::eval_all(pr.offsets, wp);
  const Real eps = pr.epsilon(wp);
  std::vector<Real> a2, b2;
  Real eps2(2 * wp);

  const std::size_t J = a.size();
  std::vector<long double> x(J), step(J);
  for (std::size_t j = 0; j < J; ++j) {
    step[j] = mpfr_get_ld(fractional_part(a[j]).get(), MPFR_RNDN);
    x[j] = mpfr_get_ld(fractional_part(a[j] + b[j]).get(), MPFR_RNDN);
  }
  const long double eps_ld = mpfr_get_ld(eps.get(), MPFR_RNDN);
  const long double slack = std::ldexp(static_cast<long double>(pr.k_max + 2), -60);

  std::vector<KHit> hits;
  for (std::uint64_t k = 1; k <= pr.k_max; ++k) {
    bool candidate = true;
    for (std::size_t j = 0; j < J && candidate; ++j)
      candidate = x[j] < eps_ld + slack || x[j] > 1.0L - slack;
    if (candidate) {
      auto r = detail::eval_fracs(a, b, eps, k, wp);
      if (r.verdict == detail::FracVerdict::ambiguous) {
        if (a2.empty()) {
          a2 = detail::eval_all(pr.multipliers, 2 * wp);
          b2 = detail::eval_all(pr.offsets, 2 * wp);
          eps2 = pr.epsilon(2 * wp);
        }
        r = detail::eval_fracs(a2, b2, eps2, k, 2 * wp, true);
        if (r.verdict == detail::FracVerdict::ambiguous)
          throw UndecidableError("k = " + std::to_string(k) + " lies on the tolerance boundary at " +
                                 std::to_string(2 * wp) + " bits");
      }
      if (r.verdict == detail::FracVerdict::accept) {
        Real w(bits);
        mpfr_set(w.get(), r.worst.get(), MPFR_RNDN);
        hits.push_back({k, std::move(w)});
        if (max_hits && hits.size() >= max_hits) break;
      }
    }
    for (std::size_t j = 0; j < J; ++j) {
      x[j] += step[j];
      if (x[j] >= 1.0L) x[j] -= 1.0L;
    }
  }
  return hits;
}

// Decides one k with the same precision policy as find_k; returns the worst
// fractional part when k is accepted.
inline std::optional<Real> check_k(const ApproximationProblem& pr, std::uint64_t k, unsigned bits = 256) {
  validate(pr);
  for (unsigned wp : {bits + 64, 2 * (bits + 64)}) {
    bool last = wp != bits + 64;
    auto r = detail::eval_fracs(detail::eval_all(pr.multipliers, wp), detail::eval_all(pr.offsets, wp), pr.epsilon(wp),
                                k, wp, last);
    if (r.verdict == detail::FracVerdict::reject) return std::nullopt;
    if (r.verdict == detail::FracVerdict::accept) {
      Real w(bits);
      mpfr_set(w.get(), r.worst.get(), MPFR_RNDN);
      return w;
    }
  }
  throw UndecidableError("k = " + std::to_string(k) + " lies on the tolerance boundary");
}

struct DiagonalSet {
  unsigned p;
  std::vector<Real> values;
};

inline bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// 2 sin(jπ/p) for a circumradius-1 regular p-gon.
inline Constant pgon_diagonal(unsigned p, unsigned j) {
  return [p, j](unsigned bits) {
    Real t = pi(bits + 16) * static_cast<long>(j) / static_cast<long>(p);
    Real r = 2L * sin(t);
    Real out(bits);
    mpfr_set(out.get(), r.get(), MPFR_RNDN);
    return out;
  };
}

inline DiagonalSet pgon_diagonals(unsigned p, unsigned bits = 256) {
  if (p < 3 || p % 2 == 0) throw DomainError("p must be odd and at least 3");
  DiagonalSet s{p, {}};
  for (unsigned j = 1; j <= (p - 1) / 2; ++j) s.values.push_back(pgon_diagonal(p, j)(bits));
  return s;
}

struct IntegerRelation {
  std::vector<long> coefficients;
  Real residual;
};

// LLL on rows (e_i, round(2^(bits/2)·x_i)). Returns the shortest reduced
// vector with |c_j| ≤ coeff_bound and |Σ c_j x_j| < 2^(-bits/2), or nothing.
// "Nothing" is heuristic evidence of independence at this bound.
inline std::optional<IntegerRelation> integer_relation(const std::vector<Constant>& values, std::uint64_t coeff_bound,
                                                      unsigned bits) {
  if (values.empty()) throw DomainError("values must be nonempty");
  if (coeff_bound == 0) throw DomainError("coeff_bound must be at least 1");
  const std::size_t n = values.size();
  const double lb = std::log2(static_cast<double>(coeff_bound)) + 1;
  const double need = 2 * std::max((n + 1) * lb + std::log2(static_cast<double>(n)) + 16, n * (lb + n / 2.0 + 2));
  if (bits < need)
    throw UndecidableError("integer relation search at bound " + std::to_string(coeff_bound) + " over " +
                           std::to_string(n) + " values needs at least " + std::to_string(static_cast<int>(need) + 1) +
                           " bits");
  const Real threshold = ldexp(Real(1, bits), -static_cast<long>(bits / 2));
  std::vector<Real> x;
  for (const auto& v : values) x.push_back(v(bits));

  auto residual_of = [&](const std::vector<long>& c) {
    Real s(bits);
    for (std::size_t i = 0; i < n; ++i) s += c[i] * x[i];
    return abs(s);
  };

  IntMatrix basis(n, IntVector(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    basis[i][i] = 1;
    Real scaled = round_nearest(ldexp(x[i], static_cast<long>(bits / 2)));
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), scaled.get(), MPFR_RNDN);
    basis[i][n] = z;
  }
  if (n > 1) lll_reduce(basis);

  std::optional<IntegerRelation> best;
  mpz_class best_norm;
  for (const auto& row : basis) {
    bool in_bound = true, nonzero = false;
    std::vector<long> c(n);
    for (std::size_t i = 0; i < n && in_bound; ++i) {
      if (abs(row[i]) > coeff_bound) in_bound = false;
      else c[i] = row[i].get_si();
      nonzero = nonzero || row[i] != 0;
    }
    if (!in_bound || !nonzero) continue;
    long g = 0;
    for (long ci : c) g = std::gcd(g, ci);
    for (long& ci : c) ci /= g;
    for (long ci : c) {
      if (ci == 0) continue;
      if (ci < 0)
        for (long& cj : c) cj = -cj;
      break;
    }
    Real res = residual_of(c);
    if (!(res < threshold)) continue;
    mpz_class norm = 0;
    for (long ci : c) norm = std::max(norm, mpz_class(std::abs(ci)));
    if (!best || norm < best_norm) {
      best_norm = norm;
      best = IntegerRelation{c, res};
    }
  }
  return best;
}

enum class PgonForm { ball_construction, slice_construction, pentagon };

inline PgonForm parse_pgon_form(std::string_view s) {
  if (s == "ball" || s == "ball_construction") return PgonForm::ball_construction;
  if (s == "slice" || s == "slice_construction") return PgonForm::slice_construction;
  if (s == "pentagon") return PgonForm::pentagon;
  throw UsageError("unknown form '" + std::string(s) + "'");
}

// Chord indices j (chord 2 sin(jπ/p)) realized between the chosen vertices.
inline std::vector<unsigned> chord_indices(unsigned p, const std::vector<unsigned>& vertices) {
  std::vector<bool> used((p - 1) / 2 + 1, false);
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      unsigned delta = (vertices[a] % p + p - vertices[b] % p) % p;
      delta = std::min(delta, p - delta);
      if (delta == 0) throw DomainError("vertex indices must be distinct modulo p");
      used[delta] = true;
    }
  std::vector<unsigned> out;
  for (unsigned j = 1; j < used.size(); ++j)
    if (used[j]) out.push_back(j);
  return out;
}

inline std::vector<unsigned> consecutive_vertices(unsigned n) {
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

// Builds the fractional-part system for a p-gon construction.
//   ball:     frac(2k sin(jπ/p) − 1/2 + 2ε) < 4ε   (circumradius k)
//   slice:    frac(2k sin(jπ/p) − 1/2 + ε)  < 2ε   (circumradius k)
//   pentagon: frac(φk + (φ−1)(1/2 − 2ε))  < 4ε    (p = 5, side k + 1/2 − 2ε)
// Only chords between the chosen vertices (default: all p) are constrained.
inline ApproximationProblem pgon_problem(unsigned p, PgonForm form, const Constant& epsilon, std::uint64_t k_max,
                                         std::vector<unsigned> vertices = {}) {
  if (p < 3 || !is_prime(p) || p % 2 == 0) throw DomainError("p must be an odd prime");
  double e = epsilon(64).to_double();
  if (!(e > 0 && e < 0.25)) throw DomainError("epsilon must lie in (0, 1/4)");
  ApproximationProblem pr;
  pr.k_max = k_max;
  if (form == PgonForm::pentagon) {
    if (p != 5) throw DomainError("pentagon form needs p = 5");
    pr.multipliers.push_back([](unsigned bits) { return (1L + sqrt(Real(5, bits))) / 2L; });
    pr.offsets.push_back([epsilon](unsigned bits) {
      Real phi_m1 = (sqrt(Real(5, bits)) - 1L) / 2L;
      return phi_m1 * (Real::ratio(1, 2, bits) - 2L * epsilon(bits));
    });
    pr.epsilon = [epsilon](unsigned bits) { return 4L * epsilon(bits); };
    return pr;
  }
  if (vertices.empty()) vertices = consecutive_vertices(p);
  const long c = form == PgonForm::ball_construction ? 2 : 1;
  for (unsigned j : chord_indices(p, vertices)) {
    Constant d = pgon_diagonal(p, j);
    pr.multipliers.push_back(d);
    pr.offsets.push_back([epsilon, c](unsigned bits) { return c * epsilon(bits) - Real::ratio(1, 2, bits); });
  }
  pr.epsilon = [epsilon, c](unsigned bits) { return 2L * c * epsilon(bits); };
  return pr;
}

inline std::vector<KHit> solve_pgon_system(unsigned p, PgonForm form, const Constant& epsilon, std::uint64_t k_max,
                                           std::vector<unsigned> vertices = {}, unsigned bits = 256,
                                           std::size_t max_hits = 0) {
  return find_k(pgon_problem(p, form, epsilon, k_max, std::move(vertices)), bits, max_hits);
}

}  // namespace intdist
