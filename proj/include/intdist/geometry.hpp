#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"

namespace intdist {

using Vec = std::vector<double>;

namespace detail {

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }
inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline Vec scale(const Vec& a, double s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}
// a + s·b
inline Vec axpy(const Vec& a, double s, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
  return r;
}
inline Vec unit(const Vec& a) { return scale(a, 1 / norm(a)); }

// Solves the small dense system G x = b (Gaussian elimination, partial
// pivoting). Returns nothing if G is numerically singular.
inline std::optional<Vec> solve(std::vector<Vec> G, Vec b) {
  const std::size_t n = b.size();
  double scale_ = 0;
  for (auto& row : G)
    for (double v : row) scale_ = std::max(scale_, std::abs(v));
  if (scale_ == 0) return n == 0 ? std::optional<Vec>(Vec{}) : std::nullopt;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(G[r][c]) > std::abs(G[piv][c])) piv = r;
    if (std::abs(G[piv][c]) < 1e-12 * scale_) return std::nullopt;
    std::swap(G[piv], G[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = G[r][c] / G[c][c];
      for (std::size_t k = c; k < n; ++k) G[r][k] -= f * G[c][k];
      b[r] -= f * b[c];
    }
  }
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= G[i][k] * x[k];
    x[i] = s / G[i][i];
  }
  return x;
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace detail

struct Line {
  Vec base;
  Vec direction;
};

struct Slab {
  Vec normal;
  double half_width;
};

// Open ball of the given diameter intersected with slabs |⟨x − center, n⟩| < h.
struct Component {
  Vec center;
  double ball_diameter;
  std::vector<Slab> slabs;

  double radius() const { return ball_diameter / 2; }
  unsigned dimension() const { return static_cast<unsigned>(center.size()); }
};

struct AnnulusShell {
  Vec center;
  double r_inner;
  double r_outer;
};

struct ComponentUnion {
  unsigned dimension = 2;
  std::vector<Component> components;
  std::vector<AnnulusShell> shells;
};

struct Enclosure {
  double lower;
  double upper;
  bool overlap = false;
  // witness pair realizing `upper` (distance) or `lower` (diameter)
  Vec a, b;
};

inline Line make_line(Vec base, Vec direction) {
  double n = detail::norm(direction);
  if (!(n > 0)) throw DomainError("line direction must be nonzero");
  return {std::move(base), detail::scale(direction, 1 / n)};
}

inline void validate(const Component& c, unsigned d) {
  if (c.center.size() != d) throw DomainError("component center has wrong dimension");
  if (!(c.ball_diameter > 0) || !std::isfinite(c.ball_diameter)) throw DomainError("ball_diameter must be positive");
  for (double x : c.center)
    if (!std::isfinite(x)) throw DomainError("component center must be finite");
  for (const auto& s : c.slabs) {
    if (s.normal.size() != d) throw DomainError("slab normal has wrong dimension");
    if (!(s.half_width > 0)) throw DomainError("slab half_width must be positive");
    if (std::abs(detail::norm(s.normal) - 1) > 1e-9) throw DomainError("slab normal must be a unit vector");
  }
}

inline void validate(const AnnulusShell& s, unsigned d) {
  if (s.center.size() != d) throw DomainError("shell center has wrong dimension");
  if (!(s.r_inner > 0 && s.r_inner < s.r_outer)) throw DomainError("shell radii must satisfy 0 < r_inner < r_outer");
}

inline void validate(const ComponentUnion& P) {
  if (P.dimension < 1) throw DomainError("dimension must be at least 1");
  for (const auto& c : P.components) validate(c, P.dimension);
  for (const auto& s : P.shells) validate(s, P.dimension);
}

// Slabs with half_width ≥ radius do not cut the ball.
inline Component drop_redundant_slabs(Component c) {
  const double R = c.radius();
  std::erase_if(c.slabs, [R](const Slab& s) { return s.half_width >= R; });
  return c;
}

struct Support {
  double value;  // approximately max ⟨x, u⟩ over the closure
  double pad;    // the true value lies in [value − pad, value + pad]
  Vec point;     // a (numerically) feasible maximizer
};

namespace detail {

inline bool feasible_local(const Component& c, const Vec& y, double rel) {
  const double R = c.radius();
  if (norm(y) > R * (1 + rel)) return false;
  for (const auto& s : c.slabs)
    if (std::abs(dot(y, s.normal)) > s.half_width * (1 + rel) + R * rel) return false;
  return true;
}

struct LocalMax {
  double value = -std::numeric_limits<double>::infinity();
  Vec y;
  bool lost_degenerate = false;
  // best value among candidates rejected only by rounding-size violations
  double near_miss = -std::numeric_limits<double>::infinity();
};

// KKT enumeration over signed active slab subsets of size ≤ d. For each,
// the affine set F = {⟨y, n_i⟩ = s_i h_i} meets the ball in a subsphere
// around its min-norm point y0; the maximizer there is y0 + r·û_perp.
inline LocalMax local_support(const Component& c, const Vec& u) {
  const std::size_t d = c.center.size(), m = c.slabs.size();
  const double R = c.radius();
  LocalMax best;

  auto consider = [&](const std::vector<std::size_t>& act, unsigned signs) {
    const std::size_t s = act.size();
    std::vector<Vec> G(s, Vec(s));
    Vec rhs(s), nu(s);
    for (std::size_t i = 0; i < s; ++i) {
      const Slab& si = c.slabs[act[i]];
      for (std::size_t j = 0; j < s; ++j) G[i][j] = dot(si.normal, c.slabs[act[j]].normal);
      rhs[i] = (signs >> i & 1 ? -1 : 1) * si.half_width;
      nu[i] = dot(si.normal, u);
    }
    auto lam = solve(G, rhs);
    auto mu = solve(G, nu);
    if (!lam || !mu) return;
    Vec y0(d, 0.0), up = u;
    for (std::size_t i = 0; i < s; ++i) {
      y0 = axpy(y0, (*lam)[i], c.slabs[act[i]].normal);
      up = axpy(up, -(*mu)[i], c.slabs[act[i]].normal);
    }
    double r2 = R * R - dot(y0, y0);
    if (r2 < -1e-12 * R * R) return;
    double r = std::sqrt(std::max(0.0, r2));
    // second projection pass keeps û_perp orthogonal when u is nearly normal to F
    if (s > 0 && norm(up) > 0) {
      Vec nup(s);
      for (std::size_t i = 0; i < s; ++i) nup[i] = dot(c.slabs[act[i]].normal, up);
      if (auto mu2 = solve(G, nup))
        for (std::size_t i = 0; i < s; ++i) up = axpy(up, -(*mu2)[i], c.slabs[act[i]].normal);
    }
    double upn = norm(up);
    Vec y;
    bool degenerate = false;
    if (upn > 1e-12 * norm(u)) {
      y = axpy(y0, r / upn, up);
    } else {
      y = y0;
      degenerate = s < d && r > 1e-12 * R;
    }
    if (!feasible_local(c, y, 1e-11)) {
      if (degenerate) best.lost_degenerate = true;
      if (feasible_local(c, y, 1e-6)) best.near_miss = std::max(best.near_miss, dot(y, u));
      return;
    }
    double v = dot(y, u);
    if (v > best.value) best.value = v, best.y = std::move(y);
  };

  const std::size_t smax = std::min(d, m);
  // enumerate subsets in increasing size
  std::vector<std::size_t> act;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    for (unsigned signs = 0; signs < (1u << act.size()); ++signs) consider(act, signs);
    if (act.size() == smax) return;
    for (std::size_t i = start; i < m; ++i) {
      act.push_back(i);
      self(self, i + 1);
      act.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace detail

// Support function of the closure of c in direction u (u need not be unit).
inline Support support(const Component& c, const Vec& u) {
  using namespace detail;
  const double un = norm(u);
  const double R = c.radius();
  const double round_pad = 16 * kEps * (norm(c.center) + R) * std::sqrt(static_cast<double>(c.center.size())) * un;
  auto lm = local_support(c, u);
  double pad = 2e-11 * R * un + round_pad;
  if (lm.lost_degenerate || lm.y.empty()) {
    // u is orthogonal to a face whose min-norm point is cut off; the support
    // function is R-Lipschitz, so a perturbed direction pins the value
    const double delta = 1e-10;
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> g;
    double best_hi = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < 2; ++t) {
      Vec w(u.size());
      for (double& x : w) x = g(rng);
      Vec up = axpy(u, delta * un / norm(w), w);
      auto lp = local_support(c, up);
      if (lp.y.empty()) continue;
      best_hi = std::max(best_hi, lp.value);
      if (lm.y.empty() || dot(lp.y, u) > lm.value) lm.value = dot(lp.y, u), lm.y = lp.y;
    }
    // the exact value lies in [lm.value, best_hi + R·delta·|u|]
    if (std::isfinite(best_hi)) pad += std::max(0.0, best_hi + R * delta * un - lm.value);
    else pad += R * un;
  }
  if (!lm.y.empty() && lm.near_miss > lm.value) pad += lm.near_miss - lm.value;
  if (lm.y.empty()) {
    lm.y.assign(u.size(), 0.0);
    lm.value = 0;
  }
  Support out;
  out.value = lm.value + dot(c.center, u);
  out.pad = pad;
  out.point = add(c.center, lm.y);
  return out;
}

// (lo, hi) of ⟨x, u⟩ over the closure of c; u must be a unit vector. The
// returned interval is padded outward so it contains the true extent.
inline std::pair<double, double> extent(const Component& c, const Vec& u) {
  if (std::abs(detail::norm(u) - 1) > 1e-9) throw DomainError("extent direction must be a unit vector");
  if (u.size() != c.center.size()) throw DomainError("direction has wrong dimension");
  Support hi = support(c, u);
  Support lo = support(c, detail::scale(u, -1));
  return {-lo.value - lo.pad, hi.value + hi.pad};
}

inline bool contains(const Component& c, const Vec& x, double slack = 0) {
  Vec y = detail::sub(x, c.center);
  if (detail::norm(y) >= c.radius() - slack) return false;
  for (const auto& s : c.slabs)
    if (std::abs(detail::dot(y, s.normal)) >= s.half_width - slack) return false;
  return true;
}

// Pulls a boundary point toward the center so it lies strictly inside.
inline Vec shrink_into(const Component& c, const Vec& x, double rel = 1e-9) {
  return detail::axpy(c.center, 1 - rel, detail::sub(x, c.center));
}

namespace detail {

struct Closest {
  Vec v;
  std::vector<std::size_t> keep;
  Vec lambda;
};

// Closest point of conv(W) to the origin by trying every face.
inline Closest closest_in_hull(const std::vector<Vec>& W) {
  const std::size_t n = W.size();
  Closest best;
  double best_n = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) S.push_back(i);
    const std::size_t k = S.size() - 1;
    Vec lam(S.size());
    if (k == 0) {
      lam[0] = 1;
    } else {
      const Vec& w0 = W[S[0]];
      std::vector<Vec> E(k);
      for (std::size_t i = 0; i < k; ++i) E[i] = sub(W[S[i + 1]], w0);
      std::vector<Vec> G(k, Vec(k));
      Vec rhs(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) G[i][j] = dot(E[i], E[j]);
        rhs[i] = -dot(E[i], w0);
      }
      auto t = solve(G, rhs);
      if (!t) continue;
      double s = 0;
      bool ok = true;
      for (std::size_t i = 0; i < k; ++i) {
        lam[i + 1] = (*t)[i];
        s += (*t)[i];
        if ((*t)[i] < -1e-14) ok = false;
      }
      lam[0] = 1 - s;
      if (lam[0] < -1e-14 || !ok) continue;
    }
    Vec v(W[0].size(), 0.0);
    for (std::size_t i = 0; i < S.size(); ++i) v = axpy(v, lam[i], W[S[i]]);
    double vn = norm(v);
    if (vn < best_n) {
      best_n = vn;
      best.v = v;
      best.keep = S;
      best.lambda = lam;
    }
  }
  return best;
}

inline bool same_direction(const Vec& a, const Vec& b) {
  return std::abs(dot(a, b) - norm(a) * norm(b)) <= 1e-15 * norm(a) * norm(b);
}

}  // namespace detail

// Enclosure of dist(c1, c2) by GJK on the Minkowski difference. The upper
// bound comes from a feasible pair, the lower bound from supporting
// hyperplanes (with the support pads).
inline Enclosure pair_distance(const Component& a, const Component& b) {
  using namespace detail;
  if (a.center.size() != b.center.size()) throw DomainError("components live in different dimensions");
  const double L = norm(sub(b.center, a.center));
  const double scale_ = 1 + L + a.radius() + b.radius();
  double lb = L - a.radius() - b.radius() - 8 * kEps * scale_;
  double ub = std::numeric_limits<double>::infinity();
  Vec wa = a.center, wb = b.center;

  if (a.slabs.empty() && b.slabs.empty()) {
    // two balls: closest points lie on the center line
    if (L > 0) {
      Vec e = scale(sub(b.center, a.center), 1 / L);
      wa = axpy(a.center, a.radius(), e);
      wb = axpy(b.center, -b.radius(), e);
    }
    double dist = std::max(0.0, L - a.radius() - b.radius());
    double pad = 8 * kEps * scale_;
    bool overlap = L - a.radius() - b.radius() <= pad;
    if (overlap) return {0, 0, true, wa, wb};
    return {dist - pad, dist + pad, false, wa, wb};
  }

  std::vector<Vec> W{sub(a.center, b.center)};
  std::vector<std::pair<Vec, Vec>> pairs{{a.center, b.center}};
  Vec lam{1.0};
  Vec v = W[0];
  for (int it = 0; it < 10000; ++it) {
    // witness pair for the current point of the difference body
    Vec xa(v.size(), 0.0), xb(v.size(), 0.0);
    for (std::size_t i = 0; i < W.size(); ++i) {
      xa = axpy(xa, lam[i], pairs[i].first);
      xb = axpy(xb, lam[i], pairs[i].second);
    }
    double cand = norm(sub(xa, xb)) + 2e-11 * (a.radius() + b.radius()) + 8 * kEps * scale_;
    if (cand < ub) ub = cand, wa = xa, wb = xb;

    double vn = norm(v);
    if (vn <= 1e-13 * scale_) break;
    Vec vh = scale(v, 1 / vn);
    Support sa = support(a, scale(vh, -1));
    Support sb = support(b, vh);
    lb = std::max(lb, -sa.value - sb.value - sa.pad - sb.pad);
    if (ub - lb <= 1e-10 * scale_) break;

    Vec w = sub(sa.point, sb.point);
    if (vn * vn - dot(v, w) <= 1e-15 * vn * vn) break;  // no progress possible
    bool dup = false;
    for (const auto& x : W)
      if (norm(sub(x, w)) <= 1e-15 * scale_) dup = true;
    if (dup) break;
    W.push_back(w);
    pairs.push_back({sa.point, sb.point});
    auto cl = closest_in_hull(W);
    if (cl.keep.empty()) break;
    std::vector<Vec> W2;
    std::vector<std::pair<Vec, Vec>> P2;
    for (std::size_t i : cl.keep) W2.push_back(W[i]), P2.push_back(pairs[i]);
    W = std::move(W2);
    pairs = std::move(P2);
    lam = cl.lambda;
    if (norm(cl.v) >= vn) break;
    v = cl.v;
  }
  if (lb <= 0 && ub <= 1e-11 * scale_) return {0, 0, true, wa, wb};
  return {std::max(0.0, lb), ub, false, wa, wb};
}

// Upper bound on diam(c): the ball diameter.
inline double component_diameter_upper(const Component& c) { return c.ball_diameter; }

// Lower bound on diam(c) via the symmetric width in a few directions.
inline double component_diameter_lower(const Component& c) {
  using namespace detail;
  if (c.slabs.empty()) return c.ball_diameter * (1 - 1e-12);
  const std::size_t d = c.center.size();
  double best = 0;
  for (std::size_t i = 0; i < d; ++i) {
    Vec u(d, 0.0);
    u[i] = 1;
    Support s = support(c, u);
    best = std::max(best, 2 * (s.value - dot(c.center, u) - s.pad));
  }
  return std::max(0.0, best);
}

// Enclosure of diam(closure(c1 ∪ c2)). The upper bound uses the center line
// e: every cross difference z has |⟨z, e⟩| ≤ Z and |P_e z| ≤ Q, so
// |z| ≤ √(Z² + Q²). The lower bound is the best feasible pair found by
// alternating farthest-point local search from several seeds.
inline Enclosure pair_diameter(const Component& a, const Component& b, int restarts = 32, std::uint64_t seed = 1) {
  using namespace detail;
  if (a.center.size() != b.center.size()) throw DomainError("components live in different dimensions");
  const std::size_t d = a.center.size();
  const Vec diff = sub(b.center, a.center);
  const double L = norm(diff);
  const double scale_ = 1 + L + a.radius() + b.radius();
  const double rpad = 16 * kEps * scale_;
  const double Da = component_diameter_upper(a), Db = component_diameter_upper(b);

  if (a.slabs.empty() && b.slabs.empty()) {
    double cross = L + a.radius() + b.radius();
    double D = std::max({cross, Da, Db});
    Vec wa = a.center, wb = b.center;
    if (L > 0) {
      Vec e = scale(diff, 1 / L);
      wa = axpy(a.center, -a.radius(), e);
      wb = axpy(b.center, b.radius(), e);
    }
    return {D - rpad, D + rpad, false, wa, wb};
  }

  double upper = L + a.radius() + b.radius() + rpad;
  if (L > 0) {
    Vec e = scale(diff, 1 / L);
    auto rel = [](const Component& c, const Vec& u) {
      Support s = support(c, u);
      return s.value - dot(c.center, u) + s.pad;
    };
    double zmax = L + rel(a, scale(e, -1)) + rel(b, e);
    double zmin = L - rel(a, e) - rel(b, scale(e, -1));
    double Z = std::max(std::abs(zmax), std::abs(zmin));
    double Q = a.radius() + b.radius();
    if (d == 2) {
      Vec w{-e[1], e[0]};
      Q = std::max(rel(a, scale(w, -1)) + rel(b, w), rel(a, w) + rel(b, scale(w, -1)));
    } else if (d == 1) {
      Q = 0;
    }
    upper = std::min(upper, std::sqrt(Z * Z + Q * Q) + rpad);
  }
  upper = std::max({upper, Da, Db});

  // lower bound from feasible pairs
  double lower = std::max(component_diameter_lower(a), component_diameter_lower(b));
  Vec wa = a.center, wb = b.center;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  auto search = [&](const Component& p, const Component& q, bool along_centers) {
    for (int r = 0; r <= restarts; ++r) {
      Vec u(d);
      if (r == 0 && along_centers) {
        u = scale(diff, 1 / L);
      } else {
        for (double& x : u) x = g(rng);
        u = unit(u);
      }
      for (int it = 0; it < 60; ++it) {
        Vec x = shrink_into(p, support(p, scale(u, -1)).point);
        Vec y = shrink_into(q, support(q, u).point);
        Vec z = sub(y, x);
        double zn = norm(z);
        if (zn > lower && contains(p, x) && contains(q, y)) lower = zn, wa = x, wb = y;
        if (zn == 0) break;
        Vec un = scale(z, 1 / zn);
        if (norm(sub(un, u)) < 1e-14) break;
        u = un;
      }
    }
  };
  search(a, b, L > 0);
  // overlapping or nested pairs: the widest chord may sit inside one piece
  if (lower < Da) search(a, a, false);
  if (lower < Db) search(b, b, false);
  return {std::min(lower, upper), upper, false, wa, wb};
}

struct ParamInterval {
  double lo;
  double hi;
  bool empty() const { return !(hi > lo); }
  double length() const { return empty() ? 0.0 : hi - lo; }
};

// Parameter interval {s : base + s·dir ∈ c}; exact up to rounding.
inline ParamInterval line_chord(const Component& c, const Line& L) {
  using namespace detail;
  Vec w = sub(L.base, c.center);
  double s0 = -dot(w, L.direction);
  double perp2 = dot(w, w) - s0 * s0;
  double R = c.radius();
  double h2 = R * R - perp2;
  if (h2 <= 0) return {0, 0};
  double h = std::sqrt(h2);
  ParamInterval I{s0 - h, s0 + h};
  for (const auto& sl : c.slabs) {
    double a = dot(w, sl.normal), t = dot(L.direction, sl.normal);
    if (t == 0) {
      if (std::abs(a) >= sl.half_width) return {0, 0};
      continue;
    }
    double p = (-sl.half_width - a) / t, q = (sl.half_width - a) / t;
    if (p > q) std::swap(p, q);
    I.lo = std::max(I.lo, p);
    I.hi = std::min(I.hi, q);
  }
  if (I.empty()) return {0, 0};
  return I;
}

inline double perpendicular_distance(const Vec& x, const Line& L) {
  Vec w = detail::sub(x, L.base);
  double s = detail::dot(w, L.direction);
  return std::sqrt(std::max(0.0, detail::dot(w, w) - s * s));
}

inline double annulus_chord_length(double r1, double r2, double l) {
  // factored differences keep thin shells and near-tangent lines accurate
  auto half = [l](double r) { return std::sqrt((r - l) * (r + l)); };
  if (l >= r2) return 0;
  if (l >= r1) return 2 * half(r2);
  return 2 * (r2 - r1) * (r2 + r1) / (half(r2) + half(r1));
}

inline double annulus_chord_length(const AnnulusShell& s, const Line& L) {
  return annulus_chord_length(s.r_inner, s.r_outer, perpendicular_distance(s.center, L));
}

inline double union_line_length(const ComponentUnion& P, const Line& L) {
  double t = 0;
  for (const auto& c : P.components) t += line_chord(c, L).length();
  for (const auto& s : P.shells) t += annulus_chord_length(s, L);
  return t;
}

inline Vec random_unit(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    Vec u(d);
    for (double& x : u) x = g(rng);
    double n = detail::norm(u);
    if (n > 1e-12) return detail::scale(u, 1 / n);
  }
}

// Uniform point in the open component by rejection from its ball.
inline Vec sample_point(const Component& c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0, 1), C(-1, 1);
  const std::size_t d = c.center.size();
  const double R = c.radius();
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    Vec x(d);
    if (d <= 3) {
      // cube rejection is cheaper in low dimension
      for (std::size_t k = 0; k < d; ++k) x[k] = c.center[k] + R * C(rng);
    } else {
      Vec u = random_unit(d, rng);
      x = detail::axpy(c.center, R * std::pow(U(rng), 1.0 / static_cast<double>(d)), u);
    }
    if (contains(c, x)) return x;
  }
  throw DomainError("component is empty or too thin to sample");
}

}  // namespace intdist
