#include <gtest/gtest.h>

#include <cmath>
#include <intdist/constructions.hpp>
#include <numbers>

using namespace intdist;

namespace {

constexpr double kPi = std::numbers::pi;

double lam_S(unsigned d) { return slice_volume(d).to_double(); }
double lam_B(unsigned d) { return ball_volume(d, 1.0).to_double(); }

// first solver hit whose construction certifies
template <class Build>
std::optional<std::pair<std::uint64_t, ComponentUnion>> first_certified(const std::vector<KHit>& hits, Build build) {
  for (const auto& h : hits) {
    ComponentUnion P = build(h.k);
    if (pairwise_certify(P).verdict == Verdict::certified_avoiding) return std::pair{h.k, P};
  }
  return std::nullopt;
}


}  // namespace

TEST(Pentagon, KListEntriesCertify) {
  auto P = build_pentagon_discs(6, 0.01);
  ASSERT_EQ(P.components.size(), 5u);
  EXPECT_EQ(pairwise_certify(P).verdict, Verdict::certified_avoiding);
  EXPECT_NEAR(volume_of_union(P).value, 5 * 0.48 * 0.48 * kPi / 4, 1e-14);
  // side pairs sit at distance k up to the outward nudge
  EXPECT_NEAR(pair_distance(P.components[0], P.components[1]).lower, 6, 1e-12);
  EXPECT_GE(pair_distance(P.components[0], P.components[1]).upper, 6);
}

TEST(Pentagon, SmallEpsilonIsNotCertified) {
  auto c = pairwise_certify(build_pentagon_discs(6, 1e-6));
  EXPECT_NE(c.verdict, Verdict::certified_avoiding);
  auto mc = monte_carlo_integral_pair(build_pentagon_discs(6, 1e-6), 1000000, 1);
  EXPECT_LT(mc.value, 1e-3);
}

TEST(Pentagon, K116AtEpsilonThousandthIsAViolation) {
  // diagonal distances fill (φs − D, φs + D) with s = 116.498; 188 lies inside
  const double D = 0.5 - 0.002, s = 116 + D, phi = (1 + std::sqrt(5.0)) / 2;
  ASSERT_LT(phi * s - D, 188);
  ASSERT_GT(phi * s + D, 188);
  auto c = pairwise_certify(build_pentagon_discs(116, 0.001));
  EXPECT_EQ(c.verdict, Verdict::violation);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->integer, 188);
}

TEST(Pentagon, Domain) {
  EXPECT_THROW(build_pentagon_discs(1, 0.01), DomainError);
  EXPECT_THROW(build_pentagon_discs(6, 0.15), DomainError);
  EXPECT_THROW(build_pentagon_discs(6, 0), DomainError);
}

TEST(PgonBalls, SolverPipelineCertifies) {
  auto hits = solve_pgon_system(5, PgonForm::ball_construction, constant_from_double(0.01), 100000, {}, 256, 20);
  ASSERT_FALSE(hits.empty());
  auto got = first_certified(hits, [](std::uint64_t k) {
    auto b = build_pgon_balls(2, 5, 5, k, 0.01);
    EXPECT_TRUE(b.verified);
    return b.P;
  });
  ASSERT_TRUE(got);
  EXPECT_EQ(got->first, hits.front().k);
}

TEST(PgonBalls, UnverifiedKIsFlagged) {
  auto b = build_pgon_balls(2, 5, 5, 1, 0.01);
  EXPECT_FALSE(b.verified);
  EXPECT_FALSE(b.note.empty());
  EXPECT_EQ(b.P.components.size(), 5u);
  EXPECT_THROW(build_pgon_balls(2, 6, 5, 10, 0.01), DomainError);
  EXPECT_THROW(build_pgon_balls(2, 3, 9, 10, 0.01), DomainError);
}

TEST(PgonBalls, NineBallsInThreeSpaceApproachNineEighths) {
  double prev = 0;
  for (double eps : {0.05, 0.02, 0.01, 0.005}) {
    auto b = build_pgon_balls(3, 9, 11, 1000, eps);
    double v = volume_of_union(b.P).value;
    EXPECT_NEAR(v, 9 * std::pow(0.5 - 2 * eps, 3) * lam_B(3), 1e-13);
    EXPECT_GT(v, prev);
    EXPECT_LT(v, 9.0 / 8 * lam_B(3));
    prev = v;
  }
  EXPECT_NEAR(prev, 9.0 / 8 * lam_B(3), 0.05);
  // coordinates beyond the first two are zero
  for (auto& c : build_pgon_balls(3, 9, 11, 1000, 0.01).P.components) EXPECT_EQ(c.center[2], 0);
}

TEST(TwoSlices, CertifiedWithVolumeNearTwoSlices) {
  for (unsigned d : {2u, 3u}) {
    auto P = build_two_slices(d, 100);
    EXPECT_EQ(pairwise_certify(P).verdict, Verdict::certified_avoiding) << d;
    double v = volume_of_union(P).value;
    // at k = 100 the shrink to 1 − 2/k costs 5.7% (d = 2) and 7.5% (d = 3)
    EXPECT_GT(v / (2 * lam_S(d)), 0.92) << d;
    EXPECT_LT(v, 2 * lam_S(d));
    // independent planar/solid formulas for a ball of radius R cut to |x| < h
    const double R = 0.49, h = 0.24;
    const double one = d == 2 ? 2 * (h * std::sqrt(R * R - h * h) + R * R * std::asin(h / R)) : kPi * (2 * h * R * R - 2 * h * h * h / 3);
    EXPECT_NEAR(v, 2 * one, 1e-13) << d;
  }
  EXPECT_NEAR(2 * lam_S(2), 0.9566, 1e-4);
  EXPECT_NEAR(2 * lam_S(3), 2 * 11 * kPi / 96, 1e-14);
  EXPECT_EQ(pairwise_certify(build_two_slices(2, 5)).verdict, Verdict::certified_avoiding);
  EXPECT_THROW(build_two_slices(2, 4), DomainError);
}

TEST(TwoSlices, DistanceChainIsRigorous) {
  for (unsigned d : {1u, 2u, 3u, 4u})
    for (long k : {5L, 6L, 10L, 37L, 100L, 1000L}) {
      auto P = build_two_slices(d, k);
      auto dist = pair_distance(P.components[0], P.components[1]);
      auto diam = pair_diameter(P.components[0], P.components[1]);
      const double dk = static_cast<double>(d) * k;
      EXPECT_LE(dk, dist.lower + 1e-9) << d << " " << k;
      EXPECT_LT(diam.upper, dk + 1) << d << " " << k;
      EXPECT_EQ(pairwise_certify(P).verdict, Verdict::certified_avoiding) << d << " " << k;
    }
}

TEST(PgonSlices, ThreeComponentsCertifyWithVolumeBound) {
  const double eps = 0.02;
  unsigned p = adequate_prime(2, 3, eps);
  EXPECT_FALSE(build_pgon_slices(2, 3, 5, 1000, eps).verified);
  auto hits = solve_pgon_system(p, PgonForm::slice_construction, constant_from_double(eps), 10000000, consecutive_vertices(3),
                                256, 200);
  ASSERT_FALSE(hits.empty());
  auto got = first_certified(hits, [&](std::uint64_t k) {
    auto b = build_pgon_slices(2, 3, p, k, eps);
    EXPECT_TRUE(b.verified) << b.note;
    return b.P;
  });
  ASSERT_TRUE(got) << "p = " << p;
  double v = volume_of_union(got->second).value;
  EXPECT_GE(v, 3 * inscribed_slice_volume(2, eps));
  EXPECT_LE(v, 3 * lam_S(2));
  for (auto& c : got->second.components) {
    EXPECT_EQ(c.slabs.size(), 2u);
    EXPECT_EQ(c.ball_diameter, 1 - eps);
  }
}

TEST(PgonSlices, TwoComponentsMatchTwoSliceLimit) {
  auto b = build_pgon_slices(2, 2, 5, 100000, 0.001);
  double v = volume_of_union(b.P).value;
  EXPECT_NEAR(v, 2 * lam_S(2), 0.005);
  EXPECT_NEAR(v, 2 * width_volume_bound(2, 0.999, 0.499).to_double(), 1e-12);
}

TEST(PgonSlices, FiveMutuallyCutDiscs) {
  auto b = build_pgon_slices(2, 5, 5, 50, 0.02);
  ASSERT_EQ(b.P.components.size(), 5u);
  for (auto& c : b.P.components) EXPECT_EQ(c.slabs.size(), 4u);
  // slab normals of a pair are exact negatives
  EXPECT_EQ(b.P.components[0].slabs[0].normal[0], -b.P.components[1].slabs[0].normal[0]);
}

TEST(PgonSlices, InadequatePrimeReportsVertex) {
  auto b = build_pgon_slices(2, 3, 7, 1000, 0.01);
  EXPECT_FALSE(b.verified);
  ASSERT_TRUE(b.failing_vertex);
  EXPECT_NE(b.note.find("p too small"), std::string::npos);
}

TEST(PgonSlices, AdequacyMatchesDirectAngleBound) {
  // support of S_{2,ε} along angle α: w cos α + sqrt(ρ² − w²) sin α (corner), below (1/2 − ε)/2
  for (double eps : {0.05, 0.02, 0.01}) {
    unsigned p = adequate_prime(2, 3, eps);
    const double rho = (1 - 2 * eps) / 2, w = (0.5 - 2 * eps) / 2, h = (0.5 - eps) / 2;
    auto fits = [&](unsigned q) {
      double a = kPi / q;
      return w * std::cos(a) + std::sqrt(rho * rho - w * w) * std::sin(a) < h;
    };
    // with n = 3 the extreme chord directions deviate by π/p from the common axis
    EXPECT_TRUE(fits(p)) << eps;
    unsigned q = p - 2;
    while (q > 3 && !is_prime(q)) q -= 2;
    EXPECT_FALSE(fits(q)) << eps;
  }
}

TEST(Nested, LinesAndVolume) {
  auto P = build_nested(2, 3, 0.1);
  auto lc = line_criterion_check(P, 1, 5000, 1e-9, true);
  EXPECT_TRUE(lc.pass);
  EXPECT_LE(lc.worst_value, 1);
  EXPECT_TRUE(check_diameters(P).pass);
  for (std::size_t i = 0; i < P.components.size(); ++i)
    for (std::size_t j = i + 1; j < P.components.size(); ++j) EXPECT_FALSE(pair_distance(P.components[i], P.components[j]).overlap);
  auto Q = build_nested(2, 2, 0.01);
  EXPECT_NEAR(volume_of_union(Q).value, 0.99 * 0.99 * kPi / 4, 1e-4);
  EXPECT_NEAR(volume_of_union(build_nested(4, 1, 0)).value, lam_B(4), 1e-14);
  EXPECT_THROW(build_nested(1, 5, 0.1), PreconditionError);
  EXPECT_THROW(build_nested(2, 3, 0), DomainError);
}

TEST(Separated, Layouts) {
  auto P = build_separated_balls(2, 5, 100, SeparatedLayout::ngon);
  auto lc = line_criterion_check(P, 3, 20000, 1e-9, true);
  EXPECT_TRUE(lc.pass);
  EXPECT_LE(lc.worst_value, 1 + 1e-9);
  EXPECT_NO_THROW(build_separated_balls(2, 3, 10, SeparatedLayout::parabola));
  EXPECT_NO_THROW(build_separated_balls(3, 6, 10, SeparatedLayout::parabola));
  // equilateral triangle: the narrowest width is the altitude 1.5 k
  EXPECT_NO_THROW(build_separated_balls(2, 3, 1, SeparatedLayout::ngon));
  EXPECT_THROW(build_separated_balls(2, 3, 0.3, SeparatedLayout::ngon), PreconditionError);
  EXPECT_THROW(build_separated_balls(2, 3, 0.2, SeparatedLayout::ngon), PreconditionError);
  EXPECT_THROW(build_separated_balls(2, 6, 0.5, SeparatedLayout::parabola), PreconditionError);
}

TEST(Annuli, ReportPasses) {
  auto rep = annuli_report(2, 200, 10000, 1);
  EXPECT_TRUE(rep.connected);
  EXPECT_GT(rep.partial_volume, rep.harmonic_bound);
  double H = 0;
  for (int n = 30; n <= 200; ++n) H += 1.0 / n;
  EXPECT_NEAR(rep.harmonic_bound, kPi * H, 1e-12);
  EXPECT_GE(rep.lines, 10000u);
  EXPECT_LT(rep.max_total, 1);
  EXPECT_LT(rep.max_b, 0.12);
  EXPECT_LT(rep.max_a_near, 0.47);
  EXPECT_LT(rep.max_a_far, 0.84);
  EXPECT_TRUE(rep.pass());
  // the tangent to the first shell dominates the near case
  EXPECT_GT(rep.max_a_near, 0.36);
  auto P = build_annuli(2, 200);
  EXPECT_EQ(P.shells.size(), 171u + 170u);
  EXPECT_THROW(build_annuli(2, 30), DomainError);
}

TEST(Annuli, TangentChordAtThirty) {
  const double r2 = 30 + 1 / (2 * 900.0);
  double c = annulus_chord_length(30, r2, 30);
  const long double R2 = r2;
  EXPECT_NEAR(c, static_cast<double>(2 * std::sqrt(R2 * R2 - 900.0L)), 1e-14);
  EXPECT_LE(c, 0.366);
  EXPECT_NEAR(c, 0.36515, 1e-5);
}

TEST(OneD, Families) {
  auto thirds = build_1d_family(3, mpq_class(0), OneDVariant::equal);
  EXPECT_EQ(thirds.intervals.size(), 3u);
  EXPECT_EQ(total_length(thirds), 1);
  EXPECT_FALSE(check_1d(thirds).has_integral_pair);
  auto two = build_1d_family(2, mpq_class(1, 10));
  auto r = check_1d(two);
  ASSERT_FALSE(r.has_integral_pair);
  ASSERT_TRUE(r.shift);
  for (auto& I : two.intervals) EXPECT_GE(floor_q(I.a - *r.shift) + 1, I.b - *r.shift);
  EXPECT_EQ(total_length(two), 1 - mpq_class(1, 10) + mpq_class(1, 20));
  auto one = build_1d_family(1, mpq_class(1, 3));
  EXPECT_FALSE(check_1d(one).has_integral_pair);
  for (unsigned n = 1; n < 8; ++n) {
    auto s = build_1d_family(n, mpq_class(1, 100));
    EXPECT_FALSE(check_1d(s).has_integral_pair);
    EXPECT_LT(s.intervals.back().b, 1);
  }
}

TEST(Invariants, BuildersPassDiameterCheck) {
  EXPECT_TRUE(check_diameters(build_pentagon_discs(6, 0.01)).pass);
  EXPECT_TRUE(check_diameters(build_pgon_balls(3, 9, 11, 50, 0.01).P).pass);
  EXPECT_TRUE(check_diameters(build_two_slices(3, 7)).pass);
  EXPECT_TRUE(check_diameters(build_pgon_slices(2, 5, 5, 50, 0.02).P).pass);
  EXPECT_TRUE(check_diameters(build_nested(3, 4, 0.1)).pass);
  EXPECT_TRUE(check_diameters(build_separated_balls(2, 4, 20, SeparatedLayout::ngon)).pass);
}

TEST(Invariants, VolumesIncreaseTowardLimits) {
  double prev_pent = 0, prev_slice = 0;
  for (double eps : {0.05, 0.02, 0.01, 0.005}) {
    double v = volume_of_union(build_pentagon_discs(6, eps)).value;
    EXPECT_GT(v, prev_pent);
    EXPECT_LT(v, 5 * kPi / 16);
    // first-order expansion: 5π/16 − (5π/2)ε + O(ε²)
    EXPECT_NEAR(v, 5 * kPi / 16 - 2.5 * kPi * eps, 10 * kPi * eps * eps + 1e-15);
    prev_pent = v;
    double s = volume_of_union(build_pgon_slices(2, 3, 1009, 1000, eps).P).value;
    EXPECT_GT(s, prev_slice);
    EXPECT_LT(s, 3 * lam_S(2));
    prev_slice = s;
  }
  double prev_two = 0;
  for (long k : {5L, 10L, 50L, 100L, 1000L}) {
    double v = volume_of_union(build_two_slices(2, k)).value;
    EXPECT_GT(v, prev_two);
    EXPECT_LT(v, 2 * lam_S(2));
    prev_two = v;
  }
}

TEST(Invariants, CertifiedConstructionsPassConsistencyChecks) {
  std::vector<ComponentUnion> cs{build_pentagon_discs(6, 0.01), build_two_slices(2, 100), build_two_slices(3, 10)};
  for (auto& P : cs) {
    ASSERT_EQ(pairwise_certify(P).verdict, Verdict::certified_avoiding);
    EXPECT_TRUE(repulsion_check(P).pass);
    EXPECT_TRUE(line_criterion_check(P, 5, 3000).pass);
    EXPECT_GT(monte_carlo_integral_pair(P, 200000, 2).value, 1e-9);
  }
}

TEST(Invariants, SmallBallCountsNeverBeatOneBall) {
  for (unsigned d : {2u, 3u})
    for (unsigned n = 2; n <= (1u << d); ++n) {
      unsigned p = 3;
      while (p < n || !is_prime(p)) ++p;
      double v = volume_of_union(build_pgon_balls(d, n, p, 1000, 0.001).P).value;
      EXPECT_LE(v, lam_B(d)) << d << " " << n;
    }
}
