#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "certifier.hpp"
#include "constructions.hpp"
#include "diophantine.hpp"
#include "io.hpp"
#include "pipeline.hpp"
#include "svg.hpp"
#include "volumes.hpp"

namespace intdist::cli {

// exit statuses
constexpr int kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3;

struct BuildFlags {
  std::string construction;
  unsigned d = 2, n = 0, p = 0, n_max = 200;
  double k = 0, epsilon = 0.01;
  std::string layout = "ngon", variant = "epsilon";
};

inline void add_build_flags(CLI::App* sc, BuildFlags& b, bool need_construction) {
  auto* o = sc->add_option("--construction", b.construction, "pentagon, pgon-balls, pgon-slices, two-slices, nested, separated, annuli, one-d");
  if (need_construction) o->required();
  sc->add_option("--d", b.d, "dimension");
  sc->add_option("--n", b.n, "component count");
  sc->add_option("--p", b.p, "odd prime");
  sc->add_option("--k", b.k, "scale (integer for p-gon and two-slice builders)");
  sc->add_option("--epsilon", b.epsilon, "epsilon");
  sc->add_option("--layout", b.layout, "separated layout: ngon or parabola");
  sc->add_option("--variant", b.variant, "1-d variant: epsilon or equal");
  sc->add_option("--n-max", b.n_max, "largest annulus index");
}

struct Built {
  json doc;
  std::optional<ComponentUnion> P;
  bool ok = true;
};

inline std::uint64_t integer_k(double k, const char* what) {
  if (!(k >= 1) || k != std::floor(k)) throw UsageError(std::string(what) + " needs a positive integer --k");
  return static_cast<std::uint64_t>(k);
}

inline Built build(const BuildFlags& b, unsigned bits) {
  Built out;
  json params = {{"d", b.d}, {"n", b.n}, {"p", b.p}, {"k", b.k}, {"epsilon", b.epsilon}};
  const std::string& c = b.construction;
  if (c == "pentagon") {
    out.P = build_pentagon_discs(static_cast<long>(integer_k(b.k, "pentagon")), b.epsilon);
  } else if (c == "pgon-balls" || c == "pgon-slices") {
    if (!b.p) throw UsageError(c + " needs --p");
    const unsigned n = b.n ? b.n : b.p;
    auto r = c == "pgon-balls" ? build_pgon_balls(b.d, n, b.p, integer_k(b.k, c.c_str()), b.epsilon, {}, bits)
                               : build_pgon_slices(b.d, n, b.p, integer_k(b.k, c.c_str()), b.epsilon, bits);
    out.P = r.P;
    out.ok = r.verified;
    out.doc["verified"] = r.verified;
    if (r.failing_vertex) out.doc["failing_vertex"] = *r.failing_vertex;
    if (!r.note.empty()) out.doc["note"] = r.note;
  } else if (c == "two-slices") {
    out.P = build_two_slices(b.d, static_cast<long>(integer_k(b.k, "two-slices")));
  } else if (c == "nested") {
    out.P = build_nested(b.d, b.n ? b.n : 3, b.epsilon);
  } else if (c == "separated") {
    out.P = build_separated_balls(b.d, b.n ? b.n : 3, b.k > 0 ? b.k : 100, parse_separated_layout(b.layout));
    params["layout"] = b.layout;
  } else if (c == "annuli") {
    out.P = build_annuli(b.d, b.n_max);
    params = {{"d", b.d}, {"n_max", b.n_max}};
  } else if (c == "one-d") {
    auto s = build_1d_family(b.n ? b.n : 3, mpq_class(b.epsilon), parse_one_d_variant(b.variant));
    out.doc = to_json(s);
    params = {{"n", b.n ? b.n : 3}, {"epsilon", b.epsilon}, {"variant", b.variant}};
  } else {
    throw UsageError("unknown construction '" + c + "'");
  }
  if (out.P) {
    json u = to_json(*out.P);
    for (auto it = out.doc.begin(); it != out.doc.end(); ++it) u[it.key()] = it.value();
    out.doc = u;
  }
  out.doc["construction"] = c;
  out.doc["parameters"] = params;
  return out;
}

// value tokens for check-independence: decimals or sqrt(decimal)
inline Constant parse_value(const std::string& t) {
  if (t.rfind("sqrt(", 0) == 0 && t.back() == ')') {
    std::string inner = t.substr(5, t.size() - 6);
    Real::from_string(inner, 64);
    return [inner](unsigned bits) { return sqrt(Real::from_string(inner, bits)); };
  }
  return constant_from_string(t);
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"integral-distance avoiding sets: volumes, searches, constructions, certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned bits = 256;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::string out_path;
  app.add_option("--bits", bits, "working precision in bits")->check(CLI::Range(64u, 65536u));
  app.add_option("--seed", seed, "random seed");
  app.add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write the primary output here instead of stdout");

  // volumes
  auto* vol = app.add_subcommand("volumes", "slice, cap, ball and extremal volumes");
  bool table1 = false;
  std::string kind, format = "csv", vmethod = "recursion";
  unsigned vd = 2, vn = 1;
  vol->add_flag("--table1", table1, "slice and cap volumes for d = 2..5");
  vol->add_option("--kind", kind, "slice, cap, ball, v, jung, f_circ, l_circ, f, f_one, one_dim, l_conjecture");
  vol->add_option("--d", vd, "dimension");
  vol->add_option("--n", vn, "component count (extremal kinds)");
  vol->add_option("--method", vmethod, "v(d) method: closed_form, recursion, quadrature");
  vol->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // search-k
  auto* sk = app.add_subcommand("search-k", "k with simultaneously small fractional parts for a p-gon");
  unsigned sp = 5;
  std::string seps = "0.01", sform = "ball";
  std::uint64_t kmax = 1000;
  std::size_t max_hits = 0;
  std::vector<unsigned> vertices;
  sk->add_option("--p", sp, "odd prime")->required();
  sk->add_option("--epsilon", seps, "epsilon (decimal, read exactly)")->required();
  sk->add_option("--k-max", kmax, "largest k scanned");
  sk->add_option("--form", sform, "ball, slice or pentagon");
  sk->add_option("--max-hits", max_hits, "stop after this many hits (0: all)");
  sk->add_option("--vertices", vertices, "chosen vertex indices (default all)")->delimiter(',');

  // check-independence
  auto* ci = app.add_subcommand("check-independence", "search for an integer relation");
  unsigned ip = 0;
  std::vector<std::string> values;
  std::uint64_t coeff_bound = 1000000;
  auto* ip_opt = ci->add_option("--p", ip, "p-gon diagonals 2 sin(jπ/p)");
  ci->add_option("--values", values, "comma-separated decimals or sqrt(x)")->delimiter(',')->excludes(ip_opt);
  ci->add_option("--coeff-bound", coeff_bound, "largest coefficient magnitude");

  // build
  auto* bd = app.add_subcommand("build", "emit a construction as union JSON");
  BuildFlags bflags;
  add_build_flags(bd, bflags, true);

  // certify
  auto* ce = app.add_subcommand("certify", "certify a union read from JSON");
  std::string input, cmethod = "pairwise";
  std::size_t samples = 1000000, nlines = 10000;
  ce->add_option("--input", input, "union JSON file ('-' for stdin)")->required();
  ce->add_option("--method", cmethod, "pairwise, lines, mc, all");
  ce->add_option("--samples", samples, "Monte Carlo pairs");
  ce->add_option("--lines", nlines, "sampled lines");

  // pipeline
  auto* pl = app.add_subcommand("pipeline", "search k, build, certify and measure");
  BuildFlags pflags;
  add_build_flags(pl, pflags, true);
  std::uint64_t pkmax = 1000;
  std::size_t max_tries = 200, plines = 10000;
  std::string pformat = "json";
  pl->add_option("--k-max", pkmax, "largest k scanned");
  pl->add_option("--max-tries", max_tries, "solver hits tried before giving up");
  pl->add_option("--lines", plines, "sampled lines for line-length constructions");
  pl->add_option("--format", pformat, "json or csv")->check(CLI::IsMember({"csv", "json"}));

  // annuli-verify
  auto* av = app.add_subcommand("annuli-verify", "connectivity, volume growth and line bounds for the annuli");
  unsigned ad = 2, anmax = 200;
  std::size_t alines = 10000;
  av->add_option("--d", ad, "dimension");
  av->add_option("--n-max", anmax, "largest annulus index");
  av->add_option("--lines", alines, "stratified lines");

  // render
  auto* rd = app.add_subcommand("render", "draw a planar union as SVG");
  BuildFlags rflags;
  std::string rinput;
  add_build_flags(rd, rflags, false);
  rd->add_option("--input", rinput, "union JSON file");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cannot write " << out_path << "\n";
      return kUsage;
    }
  }
  std::ostream& o = out_path.empty() ? out : file;

  try {
    if (*vol) {
      struct Row {
        std::string kind;
        unsigned d, n;
        Real value;
      };
      std::vector<Row> rows;
      if (table1) {
        for (unsigned d = 2; d <= 5; ++d) rows.push_back({"slice", d, 1, slice_volume(d, bits)});
        for (unsigned d = 2; d <= 5; ++d) rows.push_back({"cap", d, 1, cap_volume(d, bits)});
      } else if (kind.empty()) {
        throw UsageError("volumes needs --table1 or --kind");
      } else if (kind == "slice") {
        rows.push_back({kind, vd, 1, slice_volume(vd, bits)});
      } else if (kind == "cap") {
        rows.push_back({kind, vd, 1, cap_volume(vd, bits)});
      } else if (kind == "ball") {
        rows.push_back({kind, vd, 1, ball_volume(vd, 1.0, bits)});
      } else if (kind == "v") {
        rows.push_back({kind, vd, 1, cos_power_integral(vd, parse_vmethod(vmethod), bits)});
      } else if (kind == "jung") {
        rows.push_back({kind, vd, 1, jung_bound(vd, bits)});
      } else {
        auto e = extremal_volume(parse_extremal_kind(kind), vd, vn, bits);
        rows.push_back({kind + (e.conjectural ? "(conjectural)" : ""), vd, vn, e.value});
      }
      if (format == "csv") {
        o << "kind,d,n,value,precision_bits,seed\n";
        for (const auto& r : rows)
          o << r.kind << "," << r.d << "," << r.n << "," << fmt17(r.value.to_double()) << "," << bits << "," << seed << "\n";
      } else {
        json a = json::array();
        for (const auto& r : rows)
          a.push_back({{"kind", r.kind}, {"d", r.d}, {"n", r.n}, {"value", r.value.str(40)}, {"value_double", r.value.to_double()},
                       {"precision_bits", bits}});
        o << json{{"rows", a}, {"seed", seed}}.dump(2) << "\n";
      }
      return kPass;
    }

    if (*sk) {
      auto hits = solve_pgon_system(sp, parse_pgon_form(sform), constant_from_string(seps), kmax, vertices, bits, max_hits);
      json h = json::array();
      for (const auto& x : hits) h.push_back({{"k", x.k}, {"worst_frac", x.worst_frac.str(20)}});
      o << json{{"p", sp}, {"form", sform}, {"epsilon", seps}, {"k_max", kmax}, {"bits", bits}, {"seed", seed}, {"hits", h}}.dump(2) << "\n";
      return hits.empty() ? kFail : kPass;
    }

    if (*ci) {
      std::vector<Constant> cs;
      json shown = json::array();
      if (ip) {
        for (unsigned j = 1; j <= (ip - 1) / 2; ++j) {
          cs.push_back(pgon_diagonal(ip, j));
          shown.push_back("2 sin(" + std::to_string(j) + "pi/" + std::to_string(ip) + ")");
        }
        if (!is_prime(ip) || ip < 3) throw UsageError("--p must be an odd prime");
      } else if (!values.empty()) {
        for (const auto& v : values) cs.push_back(parse_value(v)), shown.push_back(v);
      } else {
        throw UsageError("check-independence needs --p or --values");
      }
      auto rel = integer_relation(cs, coeff_bound, bits);
      json j{{"values", shown}, {"coeff_bound", coeff_bound}, {"bits", bits}, {"seed", seed}};
      if (rel) {
        j["relation"] = rel->coefficients;
        j["residual"] = rel->residual.str(6);
      } else {
        j["relation"] = nullptr;
      }
      o << j.dump(2) << "\n";
      return rel ? kFail : kPass;
    }

    if (*bd) {
      Built b = build(bflags, bits);
      b.doc["seed"] = seed;
      o << b.doc.dump(2) << "\n";
      return b.ok ? kPass : kFail;
    }

    if (*ce) {
      ComponentUnion P;
      if (input == "-") {
        P = union_from_json(parse_json(std::cin, "stdin"));
      } else {
        std::ifstream f(input);
        if (!f) throw UsageError("cannot read " + input);
        P = union_from_json(parse_json(f, input));
      }
      CertifyOptions opt{parse_certify_method(cmethod), seed, samples, nlines, tol, bits};
      auto res = certify(P, opt);
      o << to_json(res, seed).dump(2) << "\n";
      return exit_code(to_string(res.cert.verdict));
    }

    if (*pl) {
      PipelineConfig c;
      c.construction = pflags.construction;
      c.d = pflags.d;
      c.n = pflags.n;
      c.p = pflags.p;
      c.epsilon = pflags.epsilon;
      c.k = pflags.k;
      c.k_max = pkmax;
      c.max_tries = max_tries;
      c.layout = pflags.layout;
      c.variant = pflags.variant;
      c.bits = bits;
      c.tol = tol;
      c.seed = seed;
      c.lines = plines;
      auto row = run_pipeline(c);
      if (pformat == "csv") {
        o << csv_header() << "\n" << to_csv(row, c) << "\n";
      } else {
        o << to_json(row, c).dump(2) << "\n";
      }
      return exit_code(row.verdict);
    }

    if (*av) {
      auto rep = annuli_report(ad, anmax, alines, seed, bits);
      json j{{"d", rep.d},
             {"n_max", rep.n_max},
             {"connected", rep.connected},
             {"disconnected_at", rep.disconnected_at ? json(*rep.disconnected_at) : json(nullptr)},
             {"partial_volume", rep.partial_volume},
             {"harmonic_bound", rep.harmonic_bound},
             {"lines", rep.lines},
             {"max_total", rep.max_total},
             {"max_b", rep.max_b},
             {"max_a_near", rep.max_a_near},
             {"max_a_far", rep.max_a_far},
             {"bounds", {{"b", 0.12}, {"a_near", 0.47}, {"a_far", 0.84}, {"total", 1}}},
             {"worst_line", to_json(rep.worst_line)},
             {"pass", rep.pass()},
             {"seed", seed}};
      o << j.dump(2) << "\n";
      return rep.pass() ? kPass : kFail;
    }

    if (*rd) {
      ComponentUnion P;
      std::vector<std::string> legend;
      if (!rinput.empty()) {
        std::ifstream f(rinput);
        if (!f) throw UsageError("cannot read " + rinput);
        P = union_from_json(parse_json(f, rinput));
        legend.push_back("input: " + rinput);
      } else if (!rflags.construction.empty()) {
        Built b = build(rflags, bits);
        if (!b.P) throw UsageError("render needs a planar union, not " + rflags.construction);
        P = *b.P;
        legend.push_back("construction: " + rflags.construction);
        legend.push_back("parameters: " + b.doc["parameters"].dump());
      } else {
        throw UsageError("render needs --input or --construction");
      }
      legend.push_back("components: " + std::to_string(P.components.size()) + ", shells: " + std::to_string(P.shells.size()) +
                       ", seed: " + std::to_string(seed));
      render_svg(P, o, legend);
      return kPass;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kUsage;
  } catch (const UndecidableError& e) {
    err << "undecidable: " << e.what() << "\n";
    return kInconclusive;
  }
  return kUsage;
}

}  // namespace intdist::cli
