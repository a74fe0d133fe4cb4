#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"
#include "volumes.hpp"

namespace intdist {

enum class Verdict { certified_avoiding, violation, inconclusive };
enum class CertMethod { pairwise, line_sampled, one_dim_exact, monte_carlo };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_avoiding: return "certified_avoiding";
    case Verdict::violation: return "violation";
    default: return "inconclusive";
  }
}

inline const char* to_string(CertMethod m) {
  switch (m) {
    case CertMethod::pairwise: return "pairwise";
    case CertMethod::line_sampled: return "line_sampled";
    case CertMethod::one_dim_exact: return "one_dim_exact";
    default: return "monte_carlo";
  }
}

struct PairLedger {
  std::size_t i, j;
  double dist_lower, dist_upper, diam_lower, diam_upper;
  std::optional<long> blocking;  // integer left undecided in (dist, diam), or the violating one
  std::string rule;              // how the pair was settled
};

struct Witness {
  Vec x, y;
  double distance;
  long integer;
};

struct Certificate {
  Verdict verdict = Verdict::inconclusive;
  CertMethod method = CertMethod::pairwise;
  std::vector<PairLedger> ledger;
  std::optional<Witness> witness;
  double tol = 1e-9;
  unsigned bits = 256;
  std::string note;
};

struct DiameterCheck {
  bool pass;
  std::optional<std::size_t> offending;
  double value;  // diameter upper bound of the offending (or largest) component
};

inline DiameterCheck check_diameters(const ComponentUnion& P, double tol = 1e-9) {
  validate(P);
  DiameterCheck r{true, std::nullopt, 0};
  for (std::size_t i = 0; i < P.components.size(); ++i) {
    double D = component_diameter_upper(P.components[i]);
    if (D > 1 + tol) return {false, i, D};
    r.value = std::max(r.value, D);
  }
  return r;
}

namespace detail {

inline mpq_class q(double x) { return mpq_class(x); }

inline mpq_class dot_q(const Vec& a, const Vec& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += q(a[i]) * q(b[i]);
  return s;
}

// lhs ≥ rhs·|n| with rhs ≥ 0, exactly
inline bool ge_times_norm(const mpq_class& lhs, const mpq_class& rhs, const Vec& n) {
  if (lhs < 0) return false;
  return lhs * lhs >= rhs * rhs * dot_q(n, n);
}

// Exact sufficient conditions for dist(a, b) ≥ m on the stored double data.
inline std::optional<std::string> exact_dist_at_least(const Component& a, const Component& b, long m) {
  const mpq_class M(m);
  const mpq_class ra = q(a.ball_diameter) / 2, rb = q(b.ball_diameter) / 2;
  mpq_class L2 = 0;
  std::vector<mpq_class> dq(a.center.size());
  for (std::size_t i = 0; i < dq.size(); ++i) {
    dq[i] = q(b.center[i]) - q(a.center[i]);
    L2 += dq[i] * dq[i];
  }
  mpq_class t = M + ra + rb;
  if (L2 >= t * t) return "exact_ball";
  auto proj = [&](const Vec& n) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < dq.size(); ++i) s += dq[i] * q(n[i]);
    return s;
  };
  for (const auto& sa : a.slabs) {
    mpq_class g = proj(sa.normal);
    for (int sg : {1, -1}) {
      mpq_class gs = sg * g;
      // slab of a against the ball of b
      if (ge_times_norm(gs - q(sa.half_width), M + rb, sa.normal)) return "exact_slab_ball";
      // slab of a against a parallel slab of b
      for (const auto& sb : b.slabs) {
        bool same = sb.normal == sa.normal;
        Vec neg = scale(sb.normal, -1);
        if (!same && neg != sa.normal) continue;
        if (ge_times_norm(gs - q(sa.half_width) - q(sb.half_width), M, sa.normal)) return "exact_slab_slab";
      }
    }
  }
  for (const auto& sb : b.slabs) {
    mpq_class g = proj(sb.normal);
    for (int sg : {1, -1})
      if (ge_times_norm(sg * g - q(sb.half_width), M + ra, sb.normal)) return "exact_ball_slab";
  }
  return std::nullopt;
}

// Exact sufficient condition for diam(a ∪ b) ≤ m.
inline bool exact_diam_at_most(const Component& a, const Component& b, long m) {
  const mpq_class M(m);
  const mpq_class ra = q(a.ball_diameter) / 2, rb = q(b.ball_diameter) / 2;
  if (q(a.ball_diameter) > M || q(b.ball_diameter) > M) return false;
  mpq_class L2 = 0;
  for (std::size_t i = 0; i < a.center.size(); ++i) {
    mpq_class d = q(b.center[i]) - q(a.center[i]);
    L2 += d * d;
  }
  mpq_class t = M - ra - rb;
  return t >= 0 && L2 <= t * t;
}

inline long floor_l(double x) { return static_cast<long>(std::floor(x)); }

// Points p(t) ∈ a, q(t) ∈ b moving from the closest to the farthest witness
// pair; bisection on |p − q| = m.
inline std::optional<Witness> bisect_witness(const Component& a, const Component& b, const Enclosure& dist,
                                             const Enclosure& diam, long m, double tol) {
  Vec a0 = shrink_into(a, dist.a), b0 = shrink_into(b, dist.b);
  Vec a1 = shrink_into(a, diam.a), b1 = shrink_into(b, diam.b);
  auto at = [&](double t) {
    Vec p = axpy(scale(a0, 1 - t), t, a1), r = axpy(scale(b0, 1 - t), t, b1);
    return std::pair{p, r};
  };
  auto f = [&](double t) {
    auto [p, r] = at(t);
    return norm(sub(p, r)) - static_cast<double>(m);
  };
  double lo = 0, hi = 1;
  if (!(f(lo) < 0 && f(hi) > 0)) return std::nullopt;
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    if (f(mid) < 0) lo = mid;
    else hi = mid;
  }
  auto [p, r] = at((lo + hi) / 2);
  double dd = norm(sub(p, r));
  if (std::abs(dd - m) >= tol || !contains(a, p) || !contains(b, r)) return std::nullopt;
  return Witness{p, r, dd, m};
}

}  // namespace detail

namespace detail {
// two interior points of c more than 1 + tol apart, if the search finds them
inline std::optional<std::pair<Vec, Vec>> long_chord(const Component& c, double tol) {
  if (c.ball_diameter <= 1 + tol) return std::nullopt;
  const std::size_t d = c.center.size();
  std::vector<Vec> dirs;
  for (std::size_t k = 0; k < d; ++k) {
    Vec u(d, 0.0);
    u[k] = 1;
    dirs.push_back(u);
  }
  if (d == 2)
    for (const auto& sl : c.slabs) dirs.push_back(unit(Vec{-sl.normal[1], sl.normal[0]}));
  std::mt19937_64 rng(7);
  for (int r = 0; r < 64; ++r) dirs.push_back(random_unit(d, rng));
  for (const Vec& u : dirs) {
    Vec p = shrink_into(c, support(c, u).point), m = shrink_into(c, support(c, scale(u, -1)).point);
    if (norm(sub(p, m)) > 1 + tol && contains(c, p) && contains(c, m)) return std::pair{m, p};
  }
  return std::nullopt;
}
}  // namespace detail

// Pairwise criterion: the union avoids integral distances iff no integer lies
// strictly between dist(C_i, C_j) and diam(C_i ∪ C_j) for any pair.
inline Certificate pairwise_certify(const ComponentUnion& P, double tol = 1e-9, unsigned bits = 256) {
  using namespace detail;
  validate(P);
  if (!P.shells.empty()) throw PreconditionError("pairwise certification does not handle annulus shells");
  Certificate cert;
  cert.method = CertMethod::pairwise;
  cert.tol = tol;
  cert.bits = bits;

  // a component wider than 1 holds a pair at distance exactly 1
  for (std::size_t i = 0; i < P.components.size(); ++i) {
    if (auto ch = long_chord(P.components[i], tol)) {
      Vec e = unit(sub(ch->second, ch->first));
      Vec y = axpy(ch->first, 1.0, e);
      cert.verdict = Verdict::violation;
      cert.witness = Witness{ch->first, y, norm(sub(y, ch->first)), 1};
      cert.note = "component " + std::to_string(i) + " has diameter above 1";
      return cert;
    }
  }
  auto dcheck = check_diameters(P, tol);
  bool undecided_diam = !dcheck.pass;
  if (undecided_diam) cert.note = "component " + std::to_string(*dcheck.offending) + " may have diameter above 1";

  bool any_open = undecided_diam;
  for (std::size_t i = 0; i < P.components.size(); ++i)
    for (std::size_t j = i + 1; j < P.components.size(); ++j) {
      const Component &a = P.components[i], &b = P.components[j];
      Enclosure dist = pair_distance(a, b);
      if (dist.overlap) throw PreconditionError("components " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      Enclosure diam = pair_diameter(a, b);
      PairLedger row{i, j, dist.lower, dist.upper, diam.lower, diam.upper, std::nullopt, "bounds"};

      std::optional<long> open;
      for (long m = floor_l(dist.lower) + 1; static_cast<double>(m) < diam.upper; ++m) {
        std::string tag = (row.rule == "bounds" ? "" : row.rule + "; ") + std::to_string(m) + ":";
        if (auto rule = exact_dist_at_least(a, b, m)) {
          row.rule = tag + *rule;
          continue;
        }
        if (exact_diam_at_most(a, b, m)) {
          row.rule = tag + "exact_diam";
          continue;
        }
        open = m;
        break;
      }
      if (open) {
        row.blocking = open;
        long m = floor_l(dist.upper) + 1;
        if (static_cast<double>(m) < diam.lower) {
          row.blocking = m;
          row.rule = "violation";
          if (!cert.witness) cert.witness = bisect_witness(a, b, dist, diam, m, tol);
          if (cert.witness) cert.verdict = Verdict::violation;
        } else {
          row.rule = "undecided";
        }
        any_open = true;
      }
      cert.ledger.push_back(std::move(row));
    }
  if (cert.verdict != Verdict::violation) cert.verdict = any_open ? Verdict::inconclusive : Verdict::certified_avoiding;
  return cert;
}

// ---------------------------------------------------------------- one dimension

struct Interval1D {
  mpq_class a, b;
};

struct IntervalSet1D {
  std::vector<Interval1D> intervals;
};

inline IntervalSet1D make_interval_set(const std::vector<std::pair<double, double>>& xs) {
  IntervalSet1D s;
  for (auto [a, b] : xs) s.intervals.push_back({mpq_class(a), mpq_class(b)});
  return s;
}

struct OneDResult {
  bool has_integral_pair;
  std::optional<std::pair<mpq_class, mpq_class>> witness;  // y − x is a positive integer
  std::optional<mpq_class> shift;                          // (s − a) ∩ Z = ∅
};

inline mpq_class floor_q(const mpq_class& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return mpq_class(f);
}

// Exact decision. Distances between points of C_i and C_j (gap g) fill
// (g, g + l_i + l_j), which holds an integer iff floor(g) + 1 − g < l_i + l_j.
inline OneDResult check_1d(IntervalSet1D s) {
  auto& v = s.intervals;
  for (auto& I : v) {
    I.a.canonicalize();
    I.b.canonicalize();
    if (!(I.a < I.b)) throw PreconditionError("interval endpoints must satisfy a < b");
  }
  std::sort(v.begin(), v.end(), [](const Interval1D& x, const Interval1D& y) { return x.a < y.a; });
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i].a < v[i - 1].b) throw PreconditionError("intervals overlap");

  OneDResult out{false, std::nullopt, std::nullopt};
  for (const auto& I : v) {
    mpq_class l = I.b - I.a;
    if (l > 1) {
      mpq_class x = I.a + (l - 1) / 2;
      out.has_integral_pair = true;
      out.witness = std::pair{x, x + 1};
      return out;
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      mpq_class li = v[i].b - v[i].a, lj = v[j].b - v[j].a;
      mpq_class g = v[j].a - v[i].b;
      mpq_class m = floor_q(g) + 1;
      mpq_class delta = m - g;
      if (delta < li + lj) {
        // x = b_i − s, y = a_j + t with s + t = delta split in proportion
        mpq_class sfrac = delta * li / (li + lj), tfrac = delta * lj / (li + lj);
        out.has_integral_pair = true;
        out.witness = std::pair{v[i].b - sfrac, v[j].a + tfrac};
        return out;
      }
    }
  // shift: midpoint of the widest uncovered arc of the images on R/Z
  if (v.empty()) {
    out.shift = mpq_class(0);
    return out;
  }
  struct Arc {
    mpq_class s, e;
  };
  std::vector<Arc> arcs;
  for (const auto& I : v) {
    mpq_class st = I.a - floor_q(I.a);
    arcs.push_back({st, st + (I.b - I.a)});
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.s < y.s; });
  mpq_class best_gap = -1, best_pt = 0;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    mpq_class next = k + 1 < arcs.size() ? arcs[k + 1].s : arcs[0].s + 1;
    mpq_class gap = next - arcs[k].e;
    if (gap > best_gap) best_gap = gap, best_pt = arcs[k].e + gap / 2;
  }
  mpq_class a = best_pt - floor_q(best_pt);
  if (a > mpq_class(1, 2)) a -= 1;
  out.shift = a;
  return out;
}

// --------------------------------------------------------------- line sampling

struct LineCheck {
  bool pass;
  std::size_t lines;
  Line worst_line;
  double worst_value;  // largest union length, or condition (ii) deficit
  std::string condition;
};

namespace detail {

// Condition (ii) deficit along one line: positive means violated.
inline double gap_deficit(const std::vector<ParamInterval>& ch, double tol) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ch.size(); ++i)
    for (std::size_t j = 0; j < ch.size(); ++j) {
      if (i == j || ch[j].lo < ch[i].hi) continue;
      double r = ch[j].lo - ch[i].hi;
      double room = std::floor(r) + 1 - r;
      worst = std::max(worst, ch[i].length() + ch[j].length() - tol - room);
    }
  return worst;
}

}  // namespace detail

// Sampled evidence for the all-lines criterion: every line meets the set in
// total length ≤ 1, and chords at gap r on one line satisfy
// l_1 + l_2 ≤ floor(r) + 1 − r. Never upgraded to a certificate.
// length_only drops the second condition (unit line-length sets).
inline LineCheck line_criterion_check(const ComponentUnion& P, std::uint64_t seed, std::size_t N, double tol = 1e-9,
                                      bool length_only = false) {
  using namespace detail;
  validate(P);
  if (N == 0) throw UsageError("number of lines must be positive");
  const std::size_t d = P.dimension, n = P.components.size();
  std::mt19937_64 rng(seed);
  LineCheck res{true, 0, Line{Vec(d, 0.0), Vec(d, 0.0)}, -std::numeric_limits<double>::infinity(), "none"};

  Vec lo(d, std::numeric_limits<double>::infinity()), hi(d, -std::numeric_limits<double>::infinity());
  for (const auto& c : P.components)
    for (std::size_t k = 0; k < d; ++k) lo[k] = std::min(lo[k], c.center[k] - c.radius()), hi[k] = std::max(hi[k], c.center[k] + c.radius());
  for (const auto& s : P.shells)
    for (std::size_t k = 0; k < d; ++k) lo[k] = std::min(lo[k], s.center[k] - s.r_outer), hi[k] = std::max(hi[k], s.center[k] + s.r_outer);

  auto examine = [&](const Line& L) {
    ++res.lines;
    std::vector<ParamInterval> ch;
    for (const auto& c : P.components) {
      auto I = line_chord(c, L);
      if (!I.empty()) ch.push_back(I);
    }
    double total = 0;
    for (auto& I : ch) total += I.length();
    for (const auto& s : P.shells) total += annulus_chord_length(s, L);
    if (total > 1 + tol) {
      if (res.pass || res.condition != "i" || total > res.worst_value) res.worst_line = L, res.worst_value = total, res.condition = "i";
      res.pass = false;
      return;
    }
    double deficit = length_only ? -1.0 : gap_deficit(ch, tol);
    if (deficit > 0) {
      if (res.pass) res.worst_line = L, res.worst_value = deficit, res.condition = "ii";
      res.pass = false;
      return;
    }
    if (res.pass && total > res.worst_value) res.worst_line = L, res.worst_value = total;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec dir = sub(P.components[j].center, P.components[i].center);
      if (norm(dir) > 0) examine(make_line(P.components[i].center, dir));
    }
  std::uniform_real_distribution<double> U(0, 1);
  for (std::size_t t = 0; t < N; ++t) {
    if (n > 0 && t % 2 == 0) {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      Vec x = sample_point(P.components[pick(rng)], rng), y = sample_point(P.components[pick(rng)], rng);
      Vec dir = sub(y, x);
      if (norm(dir) < 1e-12) dir = random_unit(d, rng);
      examine(make_line(x, dir));
    } else {
      Vec base(d);
      for (std::size_t k = 0; k < d; ++k) base[k] = lo[k] + (hi[k] - lo[k]) * U(rng);
      examine(make_line(base, random_unit(d, rng)));
    }
  }
  return res;
}

// ---------------------------------------------------------------- volumes

enum class VolumeMethod { analytic, monte_carlo };

inline VolumeMethod parse_volume_method(std::string_view s) {
  if (s == "analytic") return VolumeMethod::analytic;
  if (s == "monte_carlo" || s == "mc") return VolumeMethod::monte_carlo;
  throw UsageError("unknown volume method '" + std::string(s) + "'");
}

struct VolumeEstimate {
  double value;
  double error_bound;
};

namespace detail {

using P2 = std::array<double, 2>;

inline double cross2(const P2& a, const P2& b) { return a[0] * b[1] - a[1] * b[0]; }
inline double dot2(const P2& a, const P2& b) { return a[0] * b[0] + a[1] * b[1]; }

// Signed area of (disc of radius r at the origin) ∩ triangle (0, a, b).
inline double disc_triangle_area(P2 a, P2 b, double r) {
  auto angle = [](const P2& u, const P2& v) { return std::atan2(cross2(u, v), dot2(u, v)); };
  const double r2 = r * r;
  bool ain = dot2(a, a) <= r2, bin = dot2(b, b) <= r2;
  if (ain && bin) return cross2(a, b) / 2;
  P2 d{b[0] - a[0], b[1] - a[1]};
  double A = dot2(d, d), B = dot2(a, d), C = dot2(a, a) - r2;
  double disc = B * B - A * C;
  std::vector<double> ts;
  if (A > 0 && disc > 0) {
    double sq = std::sqrt(disc);
    for (double t : {(-B - sq) / A, (-B + sq) / A})
      if (t > 0 && t < 1) ts.push_back(t);
  }
  auto at = [&](double t) { return P2{a[0] + t * d[0], a[1] + t * d[1]}; };
  if (ain) {
    P2 p = at(ts.empty() ? 1 : ts.back());
    return cross2(a, p) / 2 + r2 * angle(p, b) / 2;
  }
  if (bin) {
    P2 p = at(ts.empty() ? 0 : ts.front());
    return r2 * angle(a, p) / 2 + cross2(p, b) / 2;
  }
  if (ts.size() == 2) {
    P2 p = at(ts[0]), q = at(ts[1]);
    return r2 * angle(a, p) / 2 + cross2(p, q) / 2 + r2 * angle(q, b) / 2;
  }
  return r2 * angle(a, b) / 2;
}

// Area of a planar component: the disc clipped by the slab half-planes.
inline double planar_area(const Component& c) {
  const double R = c.radius();
  std::vector<P2> poly{{-2 * R, -2 * R}, {2 * R, -2 * R}, {2 * R, 2 * R}, {-2 * R, 2 * R}};
  auto clip = [&](const Vec& n, double h) {  // keep ⟨x, n⟩ ≤ h
    std::vector<P2> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const P2 &p = poly[i], &q = poly[(i + 1) % poly.size()];
      double fp = p[0] * n[0] + p[1] * n[1] - h, fq = q[0] * n[0] + q[1] * n[1] - h;
      if (fp <= 0) out.push_back(p);
      if ((fp < 0) != (fq < 0) && fp != fq) {
        double t = fp / (fp - fq);
        out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
      }
    }
    poly = std::move(out);
  };
  for (const auto& s : c.slabs) {
    clip(s.normal, s.half_width);
    clip(scale(s.normal, -1), s.half_width);
  }
  double area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) area += disc_triangle_area(poly[i], poly[(i + 1) % poly.size()], R);
  return std::abs(area);
}

inline VolumeEstimate mc_component_volume(const Component& c, std::size_t samples, std::mt19937_64& rng) {
  const std::size_t d = c.center.size();
  const double V = ball_volume(static_cast<unsigned>(d), c.ball_diameter).to_double();
  std::uniform_real_distribution<double> U(0, 1);
  std::size_t hit = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Vec u = random_unit(d, rng);
    double r = c.radius() * std::pow(U(rng), 1.0 / static_cast<double>(d));
    Vec y = scale(u, r);
    bool in = true;
    for (const auto& sl : c.slabs)
      if (std::abs(dot(y, sl.normal)) >= sl.half_width) in = false;
    hit += in;
  }
  double p = static_cast<double>(hit) / static_cast<double>(samples);
  return {V * p, V * std::sqrt(p * (1 - p) / static_cast<double>(samples))};
}

}  // namespace detail

inline VolumeEstimate component_volume(const Component& c0, VolumeMethod method, std::size_t samples,
                                       std::mt19937_64& rng) {
  Component c = drop_redundant_slabs(c0);
  const unsigned d = c.dimension();
  if (c.slabs.empty()) return {ball_volume(d, c.ball_diameter).to_double(), 0};
  if (method == VolumeMethod::analytic) {
    if (c.slabs.size() == 1) {
      double w = 2 * c.slabs[0].half_width / detail::norm(c.slabs[0].normal);
      return {width_volume_bound(d, c.ball_diameter, std::min(w, c.ball_diameter)).to_double(), 0};
    }
    if (d == 2) return {detail::planar_area(c), 1e-12 * c.ball_diameter * c.ball_diameter};
  }
  return detail::mc_component_volume(c, samples, rng);
}

// Volumes are summed over members (they are disjoint). The error bound is the
// sum of Monte Carlo standard errors, zero for analytic members.
inline VolumeEstimate volume_of_union(const ComponentUnion& P, VolumeMethod method = VolumeMethod::analytic,
                                      std::size_t samples = 200000, std::uint64_t seed = 1) {
  validate(P);
  std::mt19937_64 rng(seed);
  VolumeEstimate v{0, 0};
  for (const auto& c : P.components) {
    auto e = component_volume(c, method, samples, rng);
    v.value += e.value;
    v.error_bound += e.error_bound;
  }
  for (const auto& s : P.shells) {
    Real outer = ball_volume(P.dimension, 2 * s.r_outer), inner = ball_volume(P.dimension, 2 * s.r_inner);
    v.value += (outer - inner).to_double();
  }
  return v;
}

// --------------------------------------------------------- consistency checks

struct RepulsionCheck {
  bool pass;
  std::size_t pairs_checked;
  std::optional<std::pair<std::size_t, std::size_t>> offending;
};

// Two components whose volumes add up beyond the unit-diameter ball must be
// at least 1 apart in an avoiding set.
inline RepulsionCheck repulsion_check(const ComponentUnion& P, double tol = 1e-9) {
  validate(P);
  const double unit = ball_volume(P.dimension, 1.0).to_double();
  std::mt19937_64 rng(7);
  std::vector<double> vol;
  for (const auto& c : P.components) vol.push_back(component_volume(c, VolumeMethod::analytic, 200000, rng).value);
  RepulsionCheck r{true, 0, std::nullopt};
  for (std::size_t i = 0; i < vol.size(); ++i)
    for (std::size_t j = i + 1; j < vol.size(); ++j) {
      if (vol[i] + vol[j] <= unit) continue;
      ++r.pairs_checked;
      if (pair_distance(P.components[i], P.components[j]).lower < 1 - tol) {
        r.pass = false;
        r.offending = std::pair{i, j};
        return r;
      }
    }
  return r;
}

struct MonteCarloPair {
  double value;  // min distance to the nearest positive integer
  Vec x, y;
  std::size_t i, j;
};

// Distance from a nonnegative real to the nearest positive integer.
inline double integer_gap(double dist) { return dist <= 1 ? 1 - dist : std::abs(dist - std::round(dist)); }

// Stochastic oracle: uniform points in components (pairs of slots drawn
// uniformly, same component allowed), minimizing integer_gap.
inline MonteCarloPair monte_carlo_integral_pair(const ComponentUnion& P, std::size_t samples, std::uint64_t seed) {
  validate(P);
  if (samples == 0) throw UsageError("samples must be positive");
  if (P.components.empty()) throw DomainError("union has no components");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, P.components.size() - 1);
  MonteCarloPair best{std::numeric_limits<double>::infinity(), {}, {}, 0, 0};
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    Vec x = sample_point(P.components[i], rng), y = sample_point(P.components[j], rng);
    double g = integer_gap(detail::norm(detail::sub(x, y)));
    if (g < best.value) best = {g, x, y, i, j};
  }
  return best;
}

}  // namespace intdist
