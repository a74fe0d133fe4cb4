#include <gtest/gtest.h>

#include <cmath>
#include <intdist/geometry.hpp>
#include <random>

using namespace intdist;

namespace {

Component ball(Vec c, double diam) { return {std::move(c), diam, {}}; }

Component slice2(Vec c, double diam = 1, double h = 0.25) { return {std::move(c), diam, {{{1, 0}, h}}}; }

Component two_slice_b(double k, unsigned d) {
  Vec c(d, 0.0), n(d, 0.0);
  c[0] = d * k + 0.5 - 2 / k;
  n[0] = 1;
  return {c, 1 - 2 / k, {{n, 0.25 - 1 / k}}};
}
Component two_slice_a(double k, unsigned d) {
  Vec n(d, 0.0);
  n[0] = 1;
  return {Vec(d, 0.0), 1 - 2 / k, {{n, 0.25 - 1 / k}}};
}

// Dense boundary sample of a planar component (oracle for 2-D tests).
std::vector<Vec> boundary_2d(const Component& c, int m = 4000) {
  std::vector<Vec> pts;
  const double R = c.radius();
  auto inside = [&](const Vec& x) {
    Vec y = {x[0] - c.center[0], x[1] - c.center[1]};
    if (y[0] * y[0] + y[1] * y[1] > R * R * (1 + 1e-12)) return false;
    for (auto& s : c.slabs)
      if (std::abs(y[0] * s.normal[0] + y[1] * s.normal[1]) > s.half_width * (1 + 1e-12)) return false;
    return true;
  };
  for (int i = 0; i < m; ++i) {
    double t = 2 * M_PI * i / m;
    Vec x = {c.center[0] + R * std::cos(t), c.center[1] + R * std::sin(t)};
    if (inside(x)) pts.push_back(x);
  }
  for (auto& s : c.slabs)
    for (int sg : {-1, 1})
      for (int i = 0; i <= m; ++i) {
        double t = -R + 2 * R * i / m;
        Vec x = {c.center[0] + sg * s.half_width * s.normal[0] - t * s.normal[1],
                 c.center[1] + sg * s.half_width * s.normal[1] + t * s.normal[0]};
        if (inside(x)) pts.push_back(x);
      }
  // exact corners: slab line ∩ circle and slab line ∩ slab line
  for (std::size_t i = 0; i < c.slabs.size(); ++i)
    for (int si : {-1, 1}) {
      const auto& a = c.slabs[i];
      double t = std::sqrt(std::max(0.0, R * R - a.half_width * a.half_width));
      for (int st : {-1, 1}) {
        Vec x = {c.center[0] + si * a.half_width * a.normal[0] - st * t * a.normal[1],
                 c.center[1] + si * a.half_width * a.normal[1] + st * t * a.normal[0]};
        if (inside(x)) pts.push_back(x);
      }
      for (std::size_t j = i + 1; j < c.slabs.size(); ++j)
        for (int sj : {-1, 1}) {
          const auto& b = c.slabs[j];
          double det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
          if (std::abs(det) < 1e-12) continue;
          double p = si * a.half_width, q = sj * b.half_width;
          Vec x = {c.center[0] + (p * b.normal[1] - q * a.normal[1]) / det,
                   c.center[1] + (a.normal[0] * q - b.normal[0] * p) / det};
          if (inside(x)) pts.push_back(x);
        }
    }
  return pts;
}

double dist(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

Component random_component(std::mt19937_64& rng, unsigned d, double spread) {
  std::uniform_real_distribution<double> U(-spread, spread), D(0.2, 1.0), H(0.05, 0.5);
  Component c{Vec(d), D(rng), {}};
  for (double& x : c.center) x = U(rng);
  std::uniform_int_distribution<int> ns(0, 3);
  int k = ns(rng);
  for (int i = 0; i < k; ++i) c.slabs.push_back({random_unit(d, rng), H(rng) * c.ball_diameter});
  return drop_redundant_slabs(c);
}

}  // namespace

TEST(Extent, Examples) {
  auto [lo, hi] = extent(ball({1, 2}, 1), {0.6, 0.8});
  EXPECT_NEAR(lo, 2.2 - 0.5, 1e-9);
  EXPECT_NEAR(hi, 2.2 + 0.5, 1e-9);
  auto [a, b] = extent(slice2({0, 0}), {1, 0});
  EXPECT_NEAR(a, -0.25, 1e-9);
  EXPECT_NEAR(b, 0.25, 1e-9);
  auto [c, e] = extent(slice2({0, 0}), {0, 1});
  EXPECT_NEAR(c, -0.5, 1e-9);
  EXPECT_NEAR(e, 0.5, 1e-9);
  EXPECT_THROW(extent(ball({0, 0}, 1), {1, 1}), DomainError);
}

TEST(Extent, DegenerateFaceWithCutOffMinNormPoint) {
  // x-extent is 1/4, reached on a face whose foot (1/4, 0) is cut by the diagonal slab
  Component c{{0, 0}, 1, {{{1, 0}, 0.25}, {{M_SQRT1_2, M_SQRT1_2}, 0.1}}};
  auto [lo, hi] = extent(c, {1, 0});
  EXPECT_NEAR(hi, 0.25, 1e-9);
  EXPECT_NEAR(lo, -0.25, 1e-9);
  EXPECT_GE(hi, 0.25);
}

TEST(Extent, MatchesBoundaryOracleAndIsMonotoneUnderCuts) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Component c = random_component(rng, 2, 3);
    Vec u = random_unit(2, rng);
    auto [lo, hi] = extent(c, u);
    double olo = 1e300, ohi = -1e300;
    for (auto& x : boundary_2d(c)) {
      double p = x[0] * u[0] + x[1] * u[1];
      olo = std::min(olo, p), ohi = std::max(ohi, p);
    }
    ASSERT_LE(lo, olo + 1e-12);
    ASSERT_GE(hi, ohi - 1e-12);
    ASSERT_NEAR(lo, olo, 2e-6);
    ASSERT_NEAR(hi, ohi, 2e-6);
    Component cut = c;
    cut.slabs.push_back({random_unit(2, rng), 0.3 * c.ball_diameter});
    auto [lo2, hi2] = extent(cut, u);
    ASSERT_GE(lo2, lo - 1e-9);
    ASSERT_LE(hi2, hi + 1e-9);
  }
}

TEST(PairDistance, Examples) {
  auto e = pair_distance(ball({0, 0}, 0.5), ball({5.5, 0}, 0.5));
  EXPECT_NEAR(e.lower, 5.0, 1e-9);
  EXPECT_NEAR(e.upper, 5.0, 1e-9);
  EXPECT_FALSE(e.overlap);
  auto o = pair_distance(ball({1, 1}, 1), ball({1, 1}, 1));
  EXPECT_TRUE(o.overlap);
  EXPECT_EQ(o.lower, 0);
  EXPECT_EQ(o.upper, 0);
  auto s = pair_distance(two_slice_a(100, 2), two_slice_b(100, 2));
  EXPECT_NEAR(s.lower, 200, 1e-9);
  EXPECT_NEAR(s.upper, 200, 1e-9);
  EXPECT_LE(s.lower, 200);
}

TEST(PairDistance, BracketsBoundaryOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    Component a = random_component(rng, 2, 2), b = random_component(rng, 2, 2);
    auto e = pair_distance(a, b);
    auto pa = boundary_2d(a, 1500), pb = boundary_2d(b, 1500);
    double best = 1e300;
    for (auto& x : pa)
      for (auto& y : pb) best = std::min(best, dist(x, y));
    if (e.overlap) {
      // closures meet: boundaries come close, or one body holds a boundary point of the other
      bool inside = false;
      for (auto& x : pa) inside = inside || contains(b, x);
      for (auto& y : pb) inside = inside || contains(a, y);
      EXPECT_TRUE(best < 1e-2 || inside) << t;
      continue;
    }
    ASSERT_LE(e.lower, best + 1e-12) << t;
    ASSERT_LE(e.upper - e.lower, 1e-9) << t;
    ASSERT_NEAR(e.upper, best, 5e-3) << t;
  }
}

TEST(PairDistance, ThreeDimensionalSlicesAgainstSampling) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    Component a = random_component(rng, 3, 3), b = random_component(rng, 3, 3);
    auto e = pair_distance(a, b);
    if (e.overlap) continue;
    double best = 1e300;
    for (int i = 0; i < 20000; ++i) best = std::min(best, dist(sample_point(a, rng), sample_point(b, rng)));
    ASSERT_LE(e.lower, best) << t;
    ASSERT_LE(e.upper - e.lower, 1e-9) << t;
  }
}

TEST(PairDiameter, Examples) {
  auto e = pair_diameter(ball({0, 0}, 0.5), ball({5.5, 0}, 0.5));
  EXPECT_NEAR(e.lower, 6.0, 1e-9);
  EXPECT_NEAR(e.upper, 6.0, 1e-9);
  auto s = pair_diameter(ball({0, 0}, 1), ball({0, 0}, 1));
  EXPECT_NEAR(s.lower, 1, 1e-9);
  EXPECT_NEAR(s.upper, 1, 1e-9);
  for (double k : {5.0, 17.0, 100.0, 1000.0}) {
    auto t = pair_diameter(two_slice_a(k, 2), two_slice_b(k, 2));
    EXPECT_LT(t.upper, 2 * k + 1) << k;
    EXPECT_GT(t.lower, 2 * k + 0.9 - 4 / k) << k;
  }
}

TEST(PairDiameter, BracketsSampling) {
  std::mt19937_64 rng(21);
  for (unsigned d : {2u, 3u})
    for (int t = 0; t < 60; ++t) {
      Component a = random_component(rng, d, 3), b = random_component(rng, d, 3);
      auto e = pair_diameter(a, b);
      ASSERT_LE(e.lower, e.upper);
      double best = 0;
      for (int i = 0; i < 20000; ++i) best = std::max(best, dist(sample_point(a, rng), sample_point(b, rng)));
      ASSERT_GE(e.upper, best) << t;
      ASSERT_LE(e.upper, std::max({a.ball_diameter, b.ball_diameter, dist(a.center, b.center) + a.radius() + b.radius()}) + 1e-9);
      if (d == 2) {
        double exact = 0;
        auto pa = boundary_2d(a, 800), pb = boundary_2d(b, 800);
        pa.insert(pa.end(), pb.begin(), pb.end());
        for (auto& x : pa)
          for (auto& y : pa) exact = std::max(exact, dist(x, y));
        // oracle resolution on the arcs is about 1e-5
        ASSERT_LE(e.lower, exact + 1e-4) << t;
        ASSERT_GE(e.lower, exact - 1e-2) << t;
      }
    }
}

TEST(PairDiameter, NeverExceedsBallDiameterForOneComponent) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    Component c = random_component(rng, 3, 1);
    EXPECT_LE(component_diameter_upper(c), c.ball_diameter);
    EXPECT_LE(component_diameter_lower(c), c.ball_diameter);
  }
}

TEST(LineChord, Examples) {
  Component b = ball({0, 0}, 1);
  EXPECT_NEAR(line_chord(b, make_line({-3, 0}, {1, 0})).length(), 1, 1e-15);
  EXPECT_EQ(line_chord(b, make_line({-3, 0.5}, {1, 0})).length(), 0);
  EXPECT_NEAR(line_chord(slice2({0, 0}), make_line({0, 0}, {1, 0})).length(), 0.5, 1e-15);
  EXPECT_NEAR(line_chord(slice2({0, 0}), make_line({0, 0}, {0, 1})).length(), 1, 1e-15);
  // parallel to the cut, outside it
  EXPECT_EQ(line_chord(slice2({0, 0}), make_line({0.3, 0}, {0, 1})).length(), 0);
}

TEST(LineChord, NeverExceedsExtentWidth) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    unsigned d = 2 + t % 3;
    Component c = random_component(rng, d, 2);
    Vec u = random_unit(d, rng);
    auto [lo, hi] = extent(c, u);
    EXPECT_LE(line_chord(c, make_line(c.center, u)).length(), hi - lo + 1e-12);
  }
}

TEST(AnnulusChord, FormulaAndSeams) {
  EXPECT_DOUBLE_EQ(annulus_chord_length(3, 5, 0), 4);
  EXPECT_DOUBLE_EQ(annulus_chord_length(3, 5, 3), 2 * std::sqrt(16.0));
  EXPECT_EQ(annulus_chord_length(3, 5, 5.01), 0);
  for (double r1 : {1.0, 30.0}) {
    double r2 = r1 + 0.01;
    // both branches agree at the seams (the chord has a square-root profile there)
    EXPECT_NEAR(annulus_chord_length(r1, r2, r1 * (1 - 1e-15)), annulus_chord_length(r1, r2, r1 * (1 + 1e-15)), 1e-5);
    EXPECT_NEAR(annulus_chord_length(r1, r2, r2 * (1 - 1e-15)), 0, 1e-5);
  }
  AnnulusShell s{{0, 0}, 30, 30 + 1 / (2 * 900.0)};
  EXPECT_NEAR(annulus_chord_length(s, make_line({30, 0}, {0, 1})), 2 * std::sqrt(s.r_outer * s.r_outer - 900), 1e-12);
  EXPECT_LT(annulus_chord_length(s, make_line({30, 0}, {0, 1})), 0.366);
}

TEST(UnionLineLength, Examples) {
  ComponentUnion P{2, {ball({0, 0}, 0.6), ball({0.7, 0}, 0.6)}, {}};
  EXPECT_NEAR(union_line_length(P, make_line({-5, 0}, {1, 0})), 1.2, 1e-14);
  EXPECT_EQ(union_line_length(P, make_line({-5, 3}, {1, 0})), 0);
}

TEST(Validation, RejectsBadComponents) {
  EXPECT_THROW(validate(Component{{0, 0}, -1, {}}, 2), DomainError);
  EXPECT_THROW(validate(Component{{0, 0}, 1, {{{2, 0}, 0.1}}}, 2), DomainError);
  EXPECT_THROW(validate(Component{{0, 0}, 1, {{{1, 0}, 0}}}, 2), DomainError);
  EXPECT_THROW(validate(Component{{0, 0, 0}, 1, {}}, 2), DomainError);
  EXPECT_THROW(validate(AnnulusShell{{0, 0}, 2, 1}, 2), DomainError);
  EXPECT_THROW(make_line({0, 0}, {0, 0}), DomainError);
  Component c = drop_redundant_slabs(Component{{0, 0}, 1, {{{1, 0}, 0.6}, {{0, 1}, 0.2}}});
  EXPECT_EQ(c.slabs.size(), 1u);
}
