#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "certifier.hpp"
#include "diophantine.hpp"
#include "geometry.hpp"
#include "volumes.hpp"

namespace intdist {

struct ConstructionParams {
  unsigned d = 2;
  unsigned n = 0;
  unsigned p = 0;
  double k = 0;
  double epsilon = 0;
};

// p-gon builders report whether the inputs meet their side conditions
// instead of refusing to build.
struct PgonBuild {
  ComponentUnion P;
  bool verified = true;
  std::optional<std::size_t> failing_vertex;
  std::string note;
};

namespace detail {

inline void require_eps(double eps, double hi, const char* what) {
  if (!(eps > 0 && eps < hi)) throw DomainError(std::string("epsilon out of range for ") + what);
}

// vertex i of a regular p-gon of circumradius R, placed symmetric about the
// second axis so the chosen vertices sit at the top and chords are near-horizontal
inline Vec pgon_vertex(unsigned d, unsigned p, double R, double index, double first) {
  const double t = std::numbers::pi / 2 + 2 * std::numbers::pi * (index - first) / p;
  Vec x(d, 0.0);
  x[0] = R * std::cos(t);
  x[1] = R * std::sin(t);
  return x;
}

inline double centered_first(const std::vector<unsigned>& v) {
  double lo = v.front(), hi = v.front();
  for (unsigned i : v) lo = std::min<double>(lo, i), hi = std::max<double>(hi, i);
  return (lo + hi) / 2;
}

}  // namespace detail

// Five discs of diameter 1/2 − 2ε on a regular pentagon of side k + 1/2 − 2ε.
// The circumradius is nudged up by 1e-14 relative so the side pairs, whose
// distance is exactly k in exact arithmetic, stay at distance ≥ k in doubles.
inline ComponentUnion build_pentagon_discs(long k, double eps) {
  if (k < 2) throw DomainError("pentagon needs k >= 2");
  detail::require_eps(eps, 1.0 / 7, "pentagon");
  const double D = 0.5 - 2 * eps;
  const double side = static_cast<double>(k) + D;
  const double R = side / (2 * std::sin(std::numbers::pi / 5)) * (1 + 1e-14);
  ComponentUnion P{2, {}, {}};
  for (unsigned i = 0; i < 5; ++i) P.components.push_back({detail::pgon_vertex(2, 5, R, i, 0), D, {}});
  return P;
}

// n balls of diameter 1/2 − 2ε at chosen vertices of the p-gon with
// circumradius k, in the first two coordinates of R^d.
inline PgonBuild build_pgon_balls(unsigned d, unsigned n, unsigned p, std::uint64_t k, double eps,
                                  std::vector<unsigned> vertices = {}, unsigned bits = 256) {
  if (d < 2) throw DomainError("p-gon constructions need d >= 2");
  if (!is_prime(p) || p < 3) throw DomainError("p must be an odd prime");
  if (n < 1 || n > p) throw DomainError("need 1 <= n <= p");
  if (k == 0) throw DomainError("k must be positive");
  detail::require_eps(eps, 0.25, "p-gon balls");
  if (vertices.empty()) vertices = consecutive_vertices(n);
  if (vertices.size() != n) throw DomainError("vertex list must have n entries");
  const double D = 0.5 - 2 * eps, first = detail::centered_first(vertices);
  PgonBuild out;
  out.P.dimension = d;
  for (unsigned v : vertices) out.P.components.push_back({detail::pgon_vertex(d, p, static_cast<double>(k), v, first), D, {}});
  if (n >= 2) {
    auto hit = check_k(pgon_problem(p, PgonForm::ball_construction, constant_from_double(eps), k, vertices), k, bits);
    out.verified = hit.has_value();
    if (!out.verified) out.note = "k = " + std::to_string(k) + " fails the fractional-part system";
  }
  return out;
}

// Two unit-diameter balls shrunk to 1 − 2/k and cut to width 1/2 − 2/k,
// shifted dk + 1/2 − 2/k apart along the first axis. The shift is rounded up
// and checked in exact arithmetic so the gap is at least dk.
inline ComponentUnion build_two_slices(unsigned d, long k) {
  if (d < 1) throw DomainError("dimension must be at least 1");
  if (k < 5) throw DomainError("two-slice construction needs k >= 5");
  const double kd = static_cast<double>(k);
  const double D = 1 - 2 / kd, h = 0.25 - 1 / kd;
  double shift = static_cast<double>(d) * kd + 0.5 - 2 / kd;
  const mpq_class target(static_cast<long>(d) * k);
  while (mpq_class(shift) - 2 * mpq_class(h) < target) shift = std::nextafter(shift, HUGE_VAL);
  Vec e(d, 0.0), c(d, 0.0);
  e[0] = 1;
  c[0] = shift;
  ComponentUnion P{d, {}, {}};
  P.components.push_back({Vec(d, 0.0), D, {{e, h}}});
  P.components.push_back({c, D, {{e, h}}});
  return P;
}

// The inscribed slice S_{d,ε}: diameter 1 − 2ε, width 1/2 − 2ε, cut across the first axis.
inline Component inscribed_slice(const Vec& center, double eps) {
  Vec e(center.size(), 0.0);
  e[0] = 1;
  return {center, 1 - 2 * eps, {{e, (0.5 - 2 * eps) / 2}}};
}

inline double inscribed_slice_volume(unsigned d, double eps, unsigned bits = 256) {
  return width_volume_bound(d, 1 - 2 * eps, 0.5 - 2 * eps, bits).to_double();
}

// n balls of diameter 1 − ε at consecutive p-gon vertices (circumradius k),
// each cut to width 1/2 − ε across every center-to-center direction.
// verified is false if some component misses the inscribed slice (p too
// small for this ε) or k fails the slice system.
inline PgonBuild build_pgon_slices(unsigned d, unsigned n, unsigned p, std::uint64_t k, double eps, unsigned bits = 256) {
  if (d < 2) throw DomainError("p-gon constructions need d >= 2");
  if (!is_prime(p) || p < 3) throw DomainError("p must be an odd prime");
  if (n < 2 || n > p) throw DomainError("need 2 <= n <= p");
  if (k == 0) throw DomainError("k must be positive");
  detail::require_eps(eps, 0.25, "p-gon slices");
  const auto vertices = consecutive_vertices(n);
  const double first = detail::centered_first(vertices), h = (0.5 - eps) / 2;
  PgonBuild out;
  out.P.dimension = d;
  for (unsigned v : vertices) out.P.components.push_back({detail::pgon_vertex(d, p, static_cast<double>(k), v, first), 1 - eps, {}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        out.P.components[i].slabs.push_back({detail::unit(detail::sub(out.P.components[j].center, out.P.components[i].center)), h});

  for (std::size_t i = 0; i < n && out.verified; ++i) {
    const Component& c = out.P.components[i];
    Component s = inscribed_slice(c.center, eps);
    for (const auto& sl : c.slabs) {
      Support up = support(s, sl.normal);
      if (up.value + up.pad - detail::dot(c.center, sl.normal) >= sl.half_width) {
        out.verified = false;
        out.failing_vertex = i;
        out.note = "p too small for this epsilon: component " + std::to_string(i) + " misses the inscribed slice";
        break;
      }
    }
  }
  if (out.verified) {
    auto hit = check_k(pgon_problem(p, PgonForm::slice_construction, constant_from_double(eps), k, vertices), k, bits);
    if (!hit) {
      out.verified = false;
      out.note = "k = " + std::to_string(k) + " fails the fractional-part system";
    }
  }
  return out;
}

// Smallest odd prime p ≥ max(n, 3) whose n-vertex slice construction holds S_{d,ε}.
inline unsigned adequate_prime(unsigned d, unsigned n, double eps, unsigned p_max = 100000) {
  for (unsigned p = std::max(n, 3u); p <= p_max; ++p)
    if (is_prime(p) && build_pgon_slices(d, n, p, 1000, eps).failing_vertex == std::nullopt) return p;
  throw DomainError("no adequate prime below " + std::to_string(p_max));
}

// One ball of diameter 1 − ε at the origin and n − 1 balls of diameter
// ε/(n − 1) on a circle just outside it.
inline ComponentUnion build_nested(unsigned d, unsigned n, double eps) {
  if (d < 1) throw DomainError("dimension must be at least 1");
  if (n < 1) throw DomainError("n must be at least 1");
  if (n == 1) {
    if (!(eps >= 0 && eps < 1)) throw DomainError("epsilon must lie in [0, 1)");
    return {d, {{Vec(d, 0.0), 1 - eps, {}}}, {}};
  }
  if (!(eps > 0 && eps < 1)) throw DomainError("epsilon must lie in (0, 1)");
  const double R = (1 - eps) / 2, r = eps / (2 * (n - 1));
  const double rho = R + r * 1.25;
  const unsigned m = n - 1;
  if (d == 1 && m > 2) throw PreconditionError("packing failure: at most two small intervals fit beside the big one");
  if (m >= 2 && d >= 2 && 2 * rho * std::sin(std::numbers::pi / m) <= 2 * r * 1.01)
    throw PreconditionError("packing failure: small balls would touch");
  ComponentUnion P{d, {{Vec(d, 0.0), 1 - eps, {}}}, {}};
  for (unsigned i = 0; i < m; ++i) {
    Vec x(d, 0.0);
    if (d == 1) {
      x[0] = i == 0 ? rho : -rho;
    } else {
      const double t = 2 * std::numbers::pi * i / m;
      x[0] = rho * std::cos(t);
      x[1] = rho * std::sin(t);
    }
    P.components.push_back({x, 2 * r, {}});
  }
  return P;
}

enum class SeparatedLayout { ngon, parabola };

inline SeparatedLayout parse_separated_layout(std::string_view s) {
  if (s == "ngon") return SeparatedLayout::ngon;
  if (s == "parabola") return SeparatedLayout::parabola;
  throw UsageError("unknown layout '" + std::string(s) + "'");
}

// n balls of diameter 1/2, no line meeting three of them.
inline ComponentUnion build_separated_balls(unsigned d, unsigned n, double k, SeparatedLayout layout) {
  if (d < 2) throw DomainError("separated balls need d >= 2");
  if (n < 2) throw DomainError("n must be at least 2");
  if (!(k > 0)) throw DomainError("k must be positive");
  ComponentUnion P{d, {}, {}};
  for (unsigned i = 0; i < n; ++i) {
    Vec x(d, 0.0);
    if (layout == SeparatedLayout::ngon) {
      const double t = std::numbers::pi / 2 + 2 * std::numbers::pi * i / n;
      x[0] = k * std::cos(t);
      x[1] = k * std::sin(t);
    } else {
      x[0] = i * k;
      x[1] = static_cast<double>(i) * i;
    }
    P.components.push_back({x, 0.5, {}});
  }
  const double slack = 1e-9;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      if (detail::norm(detail::sub(P.components[i].center, P.components[j].center)) <= 0.5 + slack)
        throw PreconditionError("k too small: balls " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      Line L = make_line(P.components[i].center, detail::sub(P.components[j].center, P.components[i].center));
      for (unsigned l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        if (perpendicular_distance(P.components[l].center, L) <= 0.5 + slack)
          throw PreconditionError("k too small: a line meets balls " + std::to_string(i) + ", " + std::to_string(j) +
                                  ", " + std::to_string(l));
      }
    }
  return P;
}

// ------------------------------------------------------------------ annuli

inline double annulus_a_outer(unsigned d, unsigned n) { return n + 1 / (d * std::pow(static_cast<double>(n), d)); }
inline double annulus_b_outer(unsigned n) { return 1 + 1 / std::pow(static_cast<double>(n), 4); }

// Shells A_n (center 0, radii n and n + 1/(d n^d)) for 30 ≤ n ≤ n_max, and
// connectors B_n (center (0, n + 3/4), radii 1 and 1 + 1/n^4) for 30 ≤ n < n_max.
// Order: all A shells, then all B shells.
inline ComponentUnion build_annuli(unsigned d, unsigned n_max) {
  if (d < 2) throw DomainError("annuli need d >= 2");
  if (n_max < 31) throw DomainError("n_max must be at least 31");
  ComponentUnion P{d, {}, {}};
  for (unsigned n = 30; n <= n_max; ++n) P.shells.push_back({Vec(d, 0.0), static_cast<double>(n), annulus_a_outer(d, n)});
  for (unsigned n = 30; n < n_max; ++n) {
    Vec c(d, 0.0);
    c[1] = n + 0.75;
    P.shells.push_back({c, 1.0, annulus_b_outer(n)});
  }
  return P;
}

struct AnnuliReport {
  unsigned d = 2, n_max = 0;
  bool connected = true;
  std::optional<unsigned> disconnected_at;
  double partial_volume = 0;  // Σ λ_d(A_n)
  double harmonic_bound = 0;  // λ_d(B_d)·2^d·Σ 1/n
  std::size_t lines = 0;
  double max_total = 0;
  double max_b = 0;        // connector contribution
  double max_a_near = 0;   // A contribution, offset l < 30
  double max_a_far = 0;    // A contribution, offset l ≥ 30
  Line worst_line{{}, {}};
  bool pass() const {
    return connected && partial_volume >= harmonic_bound && max_total < 1 && max_b < 0.12 && max_a_near < 0.47 &&
           max_a_far < 0.84;
  }
};

// Connectivity, divergence of the partial volume, and sampled lines stratified
// over the offset l ∈ [0, n_max + 2]; tangent lines to each A shell and lines
// grazing the connectors are added to the sample.
inline AnnuliReport annuli_report(unsigned d, unsigned n_max, std::size_t lines = 10000, std::uint64_t seed = 1,
                                  unsigned bits = 256) {
  ComponentUnion P = build_annuli(d, n_max);
  AnnuliReport rep;
  rep.d = d;
  rep.n_max = n_max;
  const std::size_t nA = n_max - 29;

  // B_n reaches origin distances in (n + 3/4 − outer, n + 3/4 + outer)
  for (unsigned n = 30; n < n_max; ++n) {
    const double L = n + 0.75, ob = annulus_b_outer(n);
    auto meets = [&](double r1, double r2) { return std::max(r1, L - ob) < std::min(r2, L + ob); };
    if (!meets(n, annulus_a_outer(d, n)) || !meets(n + 1, annulus_a_outer(d, n + 1))) {
      rep.connected = false;
      rep.disconnected_at = n;
      break;
    }
  }

  const double kappa = ball_volume(d, 2.0, bits).to_double();
  double h = 0;
  for (unsigned n = 30; n <= n_max; ++n) {
    const double r1 = n, r2 = annulus_a_outer(d, n);
    rep.partial_volume += kappa * (std::pow(r2, d) - std::pow(r1, d));
    h += 1.0 / n;
  }
  rep.harmonic_bound = kappa * h;

  auto examine = [&](const Line& L) {
    ++rep.lines;
    double a = 0, b = 0;
    for (std::size_t i = 0; i < P.shells.size(); ++i) (i < nA ? a : b) += annulus_chord_length(P.shells[i], L);
    const double l = perpendicular_distance(Vec(d, 0.0), L);
    rep.max_b = std::max(rep.max_b, b);
    (l < 30 ? rep.max_a_near : rep.max_a_far) = std::max(l < 30 ? rep.max_a_near : rep.max_a_far, a);
    if (a + b > rep.max_total) rep.max_total = a + b, rep.worst_line = L;
  };
  auto line_at = [&](double l, const Vec& u, const Vec& w) { return make_line(detail::scale(w, l), u); };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0, 1);
  const double lmax = n_max + 2.0;
  for (std::size_t t = 0; t < lines; ++t) {
    const double l = lmax * (t + U(rng)) / static_cast<double>(lines);
    Vec u = random_unit(d, rng), w = random_unit(d, rng);
    w = detail::axpy(w, -detail::dot(w, u), u);
    if (detail::norm(w) < 1e-9) continue;
    examine(line_at(l, u, detail::unit(w)));
  }
  // tangents to each A shell in a few directions
  Vec e0(d, 0.0), e1(d, 0.0);
  e0[0] = 1;
  e1[1] = 1;
  for (unsigned n = 30; n <= n_max; ++n)
    for (double l : {static_cast<double>(n), n - 1e-6, 0.5 * (n + annulus_a_outer(d, n))}) {
      examine(line_at(l, e0, e1));
      examine(line_at(l, e1, e0));
      examine(line_at(l, detail::scale(detail::add(e0, e1), 1 / std::sqrt(2.0)),
                      detail::scale(detail::sub(e1, e0), 1 / std::sqrt(2.0))));
    }
  // lines along the second axis grazing every connector at once
  for (double x : {0.0, 0.5, 0.999, 1.0, 1.0 + 1e-9}) examine(make_line(detail::scale(e0, x), e1));
  return rep;
}

// ------------------------------------------------------------------ 1-D

enum class OneDVariant { epsilon, equal };

inline OneDVariant parse_one_d_variant(std::string_view s) {
  if (s == "epsilon") return OneDVariant::epsilon;
  if (s == "equal") return OneDVariant::equal;
  throw UsageError("unknown 1-d variant '" + std::string(s) + "'");
}

// epsilon: (0, 1 − ε) plus n − 1 intervals of length ε/n spread over (1 − ε, 1).
// equal:   (i/n, (i+1)/n) for i < n.
inline IntervalSet1D build_1d_family(unsigned n, const mpq_class& eps, OneDVariant variant = OneDVariant::epsilon) {
  if (n < 1) throw DomainError("n must be at least 1");
  IntervalSet1D s;
  if (variant == OneDVariant::equal) {
    for (unsigned i = 0; i < n; ++i) {
      mpq_class a(i, n), b(i + 1, n);
      a.canonicalize();
      b.canonicalize();
      s.intervals.push_back({a, b});
    }
    return s;
  }
  if (!(eps > 0 && eps < 1)) throw DomainError("epsilon must lie in (0, 1)");
  s.intervals.push_back({0, 1 - eps});
  const mpq_class len = eps / n, gap = eps / (n * n);
  mpq_class x = 1 - eps;
  for (unsigned i = 1; i < n; ++i) {
    x += gap;
    s.intervals.push_back({x, x + len});
    x += len;
  }
  return s;
}

inline mpq_class total_length(const IntervalSet1D& s) {
  mpq_class t = 0;
  for (const auto& I : s.intervals) t += I.b - I.a;
  return t;
}

}  // namespace intdist
