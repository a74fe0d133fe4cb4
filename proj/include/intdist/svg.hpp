#pragma once

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "io.hpp"

namespace intdist {

// Planar drawing: discs clipped by their slabs (one nested clip group per slab),
// shells as rings. Coordinates are flipped so the second axis points up.
inline void render_svg(const ComponentUnion& P, std::ostream& out, const std::vector<std::string>& legend = {}) {
  validate(P);
  if (P.dimension != 2) throw UsageError("render supports d = 2 only");
  double lo[2] = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  double hi[2] = {-lo[0], -lo[1]};
  auto grow = [&](const Vec& c, double r) {
    for (int k = 0; k < 2; ++k) lo[k] = std::min(lo[k], c[k] - r), hi[k] = std::max(hi[k], c[k] + r);
  };
  for (const auto& c : P.components) grow(c.center, c.radius());
  for (const auto& s : P.shells) grow(s.center, s.r_outer);
  if (!(hi[0] > lo[0])) lo[0] = lo[1] = -1, hi[0] = hi[1] = 1;
  const double span = std::max(hi[0] - lo[0], hi[1] - lo[1]);
  const double W = 800, margin = 20, unit = (W - 2 * margin) / span;
  const double H = (hi[1] - lo[1]) * unit + 2 * margin + 18.0 * legend.size() + 10;
  auto X = [&](double x) { return margin + (x - lo[0]) * unit; };
  auto Y = [&](double y) { return margin + (hi[1] - y) * unit; };
  const double minstroke = 0.6;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << fmt17(H) << "\" viewBox=\"0 0 " << W << " "
      << fmt17(H) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<defs>\n";
  for (std::size_t i = 0; i < P.components.size(); ++i) {
    const auto& c = P.components[i];
    for (std::size_t k = 0; k < c.slabs.size(); ++k) {
      const auto& s = c.slabs[k];
      const double nn = detail::norm(s.normal), h = s.half_width / nn;
      const Vec n = detail::scale(s.normal, 1 / nn), t{-n[1], n[0]};
      const double L = 2 * c.radius() + 1;
      out << "<clipPath id=\"c" << i << "s" << k << "\"><polygon points=\"";
      for (auto [a, b] : {std::pair{-h, -L}, {h, -L}, {h, L}, {-h, L}}) {
        Vec p = detail::axpy(detail::axpy(c.center, a, n), b, t);
        out << fmt17(X(p[0])) << "," << fmt17(Y(p[1])) << " ";
      }
      out << "\"/></clipPath>\n";
    }
  }
  out << "</defs>\n";
  for (const auto& s : P.shells) {
    const double w = std::max(minstroke, (s.r_outer - s.r_inner) * unit);
    out << "<circle cx=\"" << fmt17(X(s.center[0])) << "\" cy=\"" << fmt17(Y(s.center[1])) << "\" r=\""
        << fmt17((s.r_inner + s.r_outer) / 2 * unit) << "\" fill=\"none\" stroke=\"#b05030\" stroke-width=\"" << fmt17(w)
        << "\"/>\n";
  }
  for (std::size_t i = 0; i < P.components.size(); ++i) {
    const auto& c = P.components[i];
    for (std::size_t k = 0; k < c.slabs.size(); ++k) out << "<g clip-path=\"url(#c" << i << "s" << k << ")\">";
    out << "<circle cx=\"" << fmt17(X(c.center[0])) << "\" cy=\"" << fmt17(Y(c.center[1])) << "\" r=\"" << fmt17(c.radius() * unit)
        << "\" fill=\"#3060a0\" fill-opacity=\"0.6\" stroke=\"#203050\" stroke-width=\"" << minstroke << "\"/>";
    for (std::size_t k = 0; k < c.slabs.size(); ++k) out << "</g>";
    out << "\n";
  }
  double y = (hi[1] - lo[1]) * unit + 2 * margin + 14;
  for (const auto& line : legend) {
    out << "<text x=\"" << margin << "\" y=\"" << fmt17(y) << "\" font-family=\"monospace\" font-size=\"12\">" << line << "</text>\n";
    y += 18;
  }
  out << "</svg>\n";
}

}  // namespace intdist
