#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "certifier.hpp"
#include "constructions.hpp"
#include "diophantine.hpp"
#include "io.hpp"
#include "volumes.hpp"

namespace intdist {

enum class CertifyMethod { pairwise, lines, mc, all };

inline CertifyMethod parse_certify_method(std::string_view s) {
  if (s == "pairwise") return CertifyMethod::pairwise;
  if (s == "lines") return CertifyMethod::lines;
  if (s == "mc") return CertifyMethod::mc;
  if (s == "all") return CertifyMethod::all;
  throw UsageError("unknown method '" + std::string(s) + "'");
}

struct CertifyOptions {
  CertifyMethod method = CertifyMethod::pairwise;
  std::uint64_t seed = 1;
  std::size_t samples = 1000000;
  std::size_t lines = 10000;
  double tol = 1e-9;
  unsigned bits = 256;
};

// Witness on a line whose chords admit an integral pair (exact 1-D decision on
// the chord parameters as stored doubles).
inline std::optional<Witness> line_witness(const ComponentUnion& P, const Line& L) {
  IntervalSet1D s;
  for (const auto& c : P.components) {
    auto I = line_chord(c, L);
    if (!I.empty()) s.intervals.push_back({mpq_class(I.lo), mpq_class(I.hi)});
  }
  if (s.intervals.empty()) return std::nullopt;
  OneDResult r;
  try {
    r = check_1d(s);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  if (!r.has_integral_pair) return std::nullopt;
  const double a = r.witness->first.get_d(), b = r.witness->second.get_d();
  Vec x = detail::axpy(L.base, a, L.direction), y = detail::axpy(L.base, b, L.direction);
  mpq_class m = r.witness->second - r.witness->first;
  return Witness{x, y, detail::norm(detail::sub(y, x)), m.get_num().get_si()};
}

struct CertifyOutcome {
  Certificate cert;
  std::optional<LineCheck> lines;
  std::optional<MonteCarloPair> mc;
};

// pairwise is the only route to certified_avoiding; lines and mc can only
// produce violations (with a witness) or leave the verdict inconclusive.
inline CertifyOutcome certify(const ComponentUnion& P, const CertifyOptions& o) {
  CertifyOutcome out;
  out.cert.tol = o.tol;
  out.cert.bits = o.bits;
  const bool all = o.method == CertifyMethod::all;
  if (o.method == CertifyMethod::pairwise || all) out.cert = pairwise_certify(P, o.tol, o.bits);
  if (o.method == CertifyMethod::lines || all) {
    out.lines = line_criterion_check(P, o.seed, o.lines, o.tol);
    if (!out.lines->pass && out.cert.verdict != Verdict::violation) {
      if (auto w = line_witness(P, out.lines->worst_line); w && std::abs(w->distance - w->integer) < o.tol) {
        out.cert.verdict = Verdict::violation;
        out.cert.method = CertMethod::line_sampled;
        out.cert.witness = w;
      }
    }
    if (o.method == CertifyMethod::lines && out.cert.verdict != Verdict::violation) out.cert.method = CertMethod::line_sampled;
  }
  if ((o.method == CertifyMethod::mc || all) && !P.components.empty()) {
    out.mc = monte_carlo_integral_pair(P, o.samples, o.seed);
    if (out.mc->value < o.tol && out.cert.verdict != Verdict::violation) {
      out.cert.verdict = Verdict::violation;
      out.cert.method = CertMethod::monte_carlo;
      double dd = detail::norm(detail::sub(out.mc->y, out.mc->x));
      out.cert.witness = Witness{out.mc->x, out.mc->y, dd, std::max(1L, std::lround(dd))};
    }
    if (o.method == CertifyMethod::mc && out.cert.verdict != Verdict::violation) out.cert.method = CertMethod::monte_carlo;
  }
  return out;
}

inline json to_json(const CertifyOutcome& o, std::uint64_t seed) {
  json j = to_json(o.cert);
  j["seed"] = seed;
  if (o.lines) {
    j["lines"] = {{"pass", o.lines->pass},
                  {"lines", o.lines->lines},
                  {"condition", o.lines->condition},
                  {"worst_value", o.lines->worst_value},
                  {"worst_line", to_json(o.lines->worst_line)}};
  }
  if (o.mc) j["monte_carlo"] = {{"value", o.mc->value}, {"i", o.mc->i}, {"j", o.mc->j}};
  return j;
}

// ------------------------------------------------------------------ pipeline

struct PipelineConfig {
  std::string construction;
  unsigned d = 2;
  unsigned n = 0;  // 0: construction default
  unsigned p = 0;  // 0: chosen
  double epsilon = 0.01;
  double k = 0;  // two-slices / separated scale; 0: default
  std::uint64_t k_max = 1000;
  std::size_t max_tries = 200;
  std::string layout = "ngon";
  std::string variant = "epsilon";
  unsigned bits = 256;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::size_t lines = 10000;
};

struct ReportRow {
  std::string construction;
  json parameters;
  std::string verdict;  // certified_avoiding / violation / inconclusive, or pass / fail for line-length sets
  double volume = 0;
  double volume_error = 0;
  double paper_limit = 0;
  double gap = 0;
  std::optional<std::uint64_t> k;
  std::vector<std::uint64_t> k_tried;
  std::string note;
  ComponentUnion P;
  std::optional<Certificate> cert;
};

inline int exit_code(const std::string& verdict) {
  if (verdict == "certified_avoiding" || verdict == "pass") return 0;
  if (verdict == "violation" || verdict == "fail") return 1;
  return 3;
}

namespace detail {

inline void finish_row(ReportRow& r, const PipelineConfig& c, ExtremalKind kind, unsigned n) {
  auto v = volume_of_union(r.P, VolumeMethod::analytic, 200000, c.seed);
  r.volume = v.value;
  r.volume_error = v.error_bound;
  r.paper_limit = extremal_volume(kind, r.P.dimension, n, c.bits).value.to_double();
  r.gap = r.paper_limit - r.volume;
}

inline unsigned prime_at_least(unsigned n) {
  unsigned p = std::max(n, 3u);
  while (!is_prime(p)) ++p;
  return p;
}

// Walks solver hits in order until the built union certifies.
template <class Build>
void walk_hits(ReportRow& r, const PipelineConfig& c, const std::vector<KHit>& hits, Build build) {
  for (const auto& h : hits) {
    r.k_tried.push_back(h.k);
    auto b = build(h.k);
    if (!b) continue;
    Certificate cert = pairwise_certify(b->P, c.tol, c.bits);
    r.P = b->P;
    r.k = h.k;
    r.cert = cert;
    r.verdict = to_string(cert.verdict);
    if (cert.verdict == Verdict::certified_avoiding) return;
  }
  if (!r.k) r.verdict = "inconclusive", r.note = "no solver hit up to k_max";
}

}  // namespace detail

// search-k → build → certify → volume. Builders never search; this loop
// takes solver hits in increasing k and stops at the first certified one.
inline ReportRow run_pipeline(const PipelineConfig& c) {
  ReportRow r;
  r.construction = c.construction;
  const Constant eps = constant_from_double(c.epsilon);
  const std::string& what = c.construction;

  if (what == "pentagon") {
    r.parameters = {{"p", 5}, {"epsilon", c.epsilon}, {"k_max", c.k_max}};
    auto hits = solve_pgon_system(5, PgonForm::pentagon, eps, c.k_max, {}, c.bits, c.max_tries);
    detail::walk_hits(r, c, hits, [&](std::uint64_t k) -> std::optional<PgonBuild> {
      if (k < 2) return std::nullopt;
      return PgonBuild{build_pentagon_discs(static_cast<long>(k), c.epsilon), true, std::nullopt, {}};
    });
    if (r.k) detail::finish_row(r, c, ExtremalKind::f_circ, 5);
  } else if (what == "pgon-balls") {
    const unsigned n = c.n ? c.n : 5, p = c.p ? c.p : detail::prime_at_least(n);
    r.parameters = {{"d", c.d}, {"n", n}, {"p", p}, {"epsilon", c.epsilon}, {"k_max", c.k_max}};
    auto hits = solve_pgon_system(p, PgonForm::ball_construction, eps, c.k_max, consecutive_vertices(n), c.bits, c.max_tries);
    detail::walk_hits(r, c, hits, [&](std::uint64_t k) -> std::optional<PgonBuild> { return build_pgon_balls(c.d, n, p, k, c.epsilon); });
    if (r.k) detail::finish_row(r, c, ExtremalKind::f_circ, n);
  } else if (what == "pgon-slices") {
    const unsigned n = c.n ? c.n : 3, p = c.p ? c.p : adequate_prime(c.d, n, c.epsilon);
    r.parameters = {{"d", c.d}, {"n", n}, {"p", p}, {"epsilon", c.epsilon}, {"k_max", c.k_max}};
    auto probe = build_pgon_slices(c.d, n, p, 1000, c.epsilon, c.bits);
    if (probe.failing_vertex) {
      r.verdict = "inconclusive";
      r.note = probe.note;
      r.P = probe.P;
      return r;
    }
    auto hits = solve_pgon_system(p, PgonForm::slice_construction, eps, c.k_max, consecutive_vertices(n), c.bits, c.max_tries);
    detail::walk_hits(r, c, hits, [&](std::uint64_t k) -> std::optional<PgonBuild> {
      auto b = build_pgon_slices(c.d, n, p, k, c.epsilon, c.bits);
      if (!b.verified) return std::nullopt;
      return b;
    });
    if (r.k) detail::finish_row(r, c, ExtremalKind::f, n);
  } else if (what == "two-slices") {
    const long k = c.k > 0 ? std::lround(c.k) : 100;
    r.parameters = {{"d", c.d}, {"k", k}};
    r.P = build_two_slices(c.d, k);
    r.k = static_cast<std::uint64_t>(k);
    r.cert = pairwise_certify(r.P, c.tol, c.bits);
    r.verdict = to_string(r.cert->verdict);
    detail::finish_row(r, c, ExtremalKind::f, 2);
  } else if (what == "nested" || what == "separated") {
    const unsigned n = c.n ? c.n : 3;
    if (what == "nested") {
      r.parameters = {{"d", c.d}, {"n", n}, {"epsilon", c.epsilon}};
      r.P = build_nested(c.d, n, c.epsilon);
    } else {
      const double k = c.k > 0 ? c.k : 100;
      r.parameters = {{"d", c.d}, {"n", n}, {"k", k}, {"layout", c.layout}};
      r.P = build_separated_balls(c.d, n, k, parse_separated_layout(c.layout));
    }
    auto lc = line_criterion_check(r.P, c.seed, c.lines, c.tol, true);
    r.verdict = lc.pass && check_diameters(r.P, c.tol).pass ? "pass" : "fail";
    r.note = "max sampled line length " + fmt17(lc.worst_value);
    detail::finish_row(r, c, ExtremalKind::l_circ, n);
  } else if (what == "one-d") {
    const unsigned n = c.n ? c.n : 3;
    r.parameters = {{"n", n}, {"epsilon", c.epsilon}, {"variant", c.variant}};
    auto s = build_1d_family(n, mpq_class(c.epsilon), parse_one_d_variant(c.variant));
    auto res = check_1d(s);
    r.verdict = res.has_integral_pair ? "violation" : "certified_avoiding";
    r.volume = total_length(s).get_d();
    r.paper_limit = 1;
    r.gap = r.paper_limit - r.volume;
    r.P = ComponentUnion{1, {}, {}};
    for (const auto& I : s.intervals) {
      const double a = I.a.get_d(), b = I.b.get_d();
      r.P.components.push_back({{(a + b) / 2}, b - a, {}});
    }
  } else {
    throw UsageError("pipeline: unknown construction '" + what + "'");
  }
  return r;
}

inline json to_json(const ReportRow& r, const PipelineConfig& c) {
  json j;
  j["construction"] = r.construction;
  j["parameters"] = r.parameters;
  j["verdict"] = r.verdict;
  j["k"] = r.k ? json(*r.k) : json(nullptr);
  j["k_tried"] = r.k_tried;
  j["volume"] = r.volume;
  j["volume_error"] = r.volume_error;
  j["paper_limit"] = r.paper_limit;
  j["gap"] = r.gap;
  j["seed"] = c.seed;
  j["bits"] = c.bits;
  j["tol"] = c.tol;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.cert) j["certificate"] = to_json(*r.cert);
  return j;
}

inline std::string csv_header() { return "construction,verdict,k,volume,paper_limit,gap,seed"; }

inline std::string to_csv(const ReportRow& r, const PipelineConfig& c) {
  return r.construction + "," + r.verdict + "," + (r.k ? std::to_string(*r.k) : "") + "," + fmt17(r.volume) + "," +
         fmt17(r.paper_limit) + "," + fmt17(r.gap) + "," + std::to_string(c.seed);
}

}  // namespace intdist
