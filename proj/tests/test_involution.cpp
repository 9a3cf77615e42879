#include "helpers.hpp"
#include "oracles.hpp"

using namespace desargues;
using namespace testing_helpers;

namespace {

const QConfig base = cfg(pr(1, 6), pr(2, 3), pr(-1, -6));
const QConfig broken = cfg(pr(1, 6), pr(2, 3), pr(-1, -5));

}  // namespace

TEST(Arbre, Examples) {
  EXPECT_TRUE(is_arbre(Arbre<Rational>{pt(0), base}));
  EXPECT_FALSE(is_arbre(Arbre<Rational>{pt(0), broken}));
  EXPECT_TRUE(is_arbre(Arbre<Rational>{pt(1), cfg(pr(2, 7), pr(3, 4), pr(0, -5))}));
  EXPECT_ERROR_KIND(is_arbre(Arbre<Rational>{inf(), base}), ErrorKind::InfinitePoint);
  EXPECT_ERROR_KIND(is_arbre(Arbre<Rational>{pt(1), base}), ErrorKind::CoincidentPoints);
}

TEST(InvolutionRect, Examples) {
  EXPECT_TRUE(is_involution_rect(base));
  EXPECT_FALSE(is_involution_rect(broken));
  EXPECT_ERROR_KIND(is_involution_rect(cfg(pr(pt(0), inf()), pr(1, -1), pr(pt(2), pt(-1, 2)))), ErrorKind::InfinitePoint);
  EXPECT_ERROR_KIND(is_involution_rect(cfg(pr(1, 6), pr(1, 3), pr(-1, -6))), ErrorKind::CoincidentPoints);
}

TEST(InvolutionCrossRatio, Examples) {
  EXPECT_EQ(cross_ratio(pt(1), pt(6), pt(-1), pt(2)), cross_ratio(pt(1), pt(6), pt(3), pt(-6)));
  EXPECT_TRUE(is_involution_cr(base));
  EXPECT_TRUE(is_involution_cr(cfg(pr(pt(0), inf()), pr(1, -1), pr(pt(2), pt(-1, 2)))));
  EXPECT_FALSE(is_involution_cr(broken));
}

TEST(InvolutionDet, ExamplesAndOracle) {
  EXPECT_TRUE(is_involution_det(base));
  EXPECT_FALSE(is_involution_det(broken));
  EXPECT_TRUE(is_involution_det(cfg(pr(pt(2, 5), pt(-8, 5)), pr(pt(-2, 5), pt(8, 5)), pr(pt(4, 5), pt(-4, 5)))));
  EXPECT_EQ(oracle::pairing_det(1, 6, 2, 3, -1, -6), 0);
  EXPECT_EQ(oracle::pairing_det(1, 6, 2, 3, -1, -5), -2);
  // Rows through infinity use the homogeneous form [x, 1, 0].
  EXPECT_TRUE(is_involution_det(cfg(pr(pt(0), inf()), pr(1, -1), pr(pt(2), pt(-1, 2)))));
}

TEST(InvolutionDet, AgreesWithDeterminantOracleOnSmallGrid) {
  for (int b = -2; b <= 2; ++b)
    for (int h = 3; h <= 4; ++h)
      for (int d = -3; d <= 3; ++d)
        for (int f = 5; f <= 7; ++f) {
          auto c = cfg(pr(b, h), pr(2, 9), pr(d, f));
          bool det_zero = oracle::pairing_det(b, h, 2, 9, d, f) == 0;
          // A vanishing determinant alone may still be the singular relation.
          if (!det_zero) {
            EXPECT_FALSE(is_involution_det(c));
          }
          if (is_involution_det(c)) {
            EXPECT_TRUE(det_zero);
          }
        }
}

TEST(FindSouche, Examples) {
  EXPECT_EQ(find_souche(base), pt(0));
  EXPECT_EQ(find_souche(cfg(pr(1, 4), pr(2, 2), pr(-2, -2))), pt(0));
  EXPECT_EQ(find_souche(cfg(pr(0, 2), pr(-1, 3), pr(-2, 4))), inf());
  EXPECT_ERROR_KIND(find_souche(broken), ErrorKind::NotAnInvolution);
  EXPECT_EQ(souche_by_ratio(base), q(0));
}

TEST(InvolutionFromPairs, Examples) {
  auto m = involution_from_pairs(pr(1, 6), pr(2, 3));
  EXPECT_EQ(m, InvolutiveMap<Rational>(q(1), q(0), q(-6)));
  // 0 <-> inf and 1 <-> -1 force z -> -1/z.
  auto r = involution_from_pairs(pr(pt(0), inf()), pr(1, -1));
  EXPECT_EQ(r, InvolutiveMap<Rational>(q(1), q(0), q(1)));
  EXPECT_EQ(r(pt(2)), pt(-1, 2));
  auto d = involution_from_pairs(pr(1, 1), pr(4, 4));
  EXPECT_EQ(d.alpha(), q(1));
  EXPECT_EQ(d.beta(), q(-5, 2));
  EXPECT_EQ(d.gamma(), q(4));
  EXPECT_EQ(d.discriminant(), q(9, 4));
  EXPECT_ERROR_KIND(involution_from_pairs(pr(1, 2), pr(1, 3)), ErrorKind::DegenerateInvolution);
  EXPECT_ERROR_KIND(InvolutiveMap<Rational>(q(1), q(2), q(4)), ErrorKind::DegenerateInvolution);
}

TEST(InvolutiveMap, IsSelfInverse) {
  InvolutiveMap<Rational> m(q(3), q(-2), q(5, 7));
  for (int x = -5; x <= 5; ++x) EXPECT_EQ(m(m(pt(x))), pt(x));
  EXPECT_EQ(m(m(inf())), inf());
  auto h = m.homography();
  EXPECT_EQ(h * h, Homography<Rational>::identity(FieldSpec::rationals()));
}

TEST(Classify, Examples) {
  auto four = InvolutiveMap<Rational>::reciprocal(q(4));
  auto c = classify(four);
  EXPECT_EQ(c.kind, InvolutionKind::Hyperbolic);
  EXPECT_EQ(*c.fixed, pr(2, -2));
  EXPECT_EQ(classify(InvolutiveMap<Rational>::reciprocal(q(-1))).kind, InvolutionKind::Elliptic);
  auto f13 = FieldSpec::prime(13);
  auto m13 = InvolutiveMap<Residue>::reciprocal(Residue(3, 13));
  auto c13 = classify(m13);
  ASSERT_EQ(c13.kind, InvolutionKind::Hyperbolic);
  EXPECT_EQ(c13.fixed->first, ProjPoint<Residue>::finite(Residue(4, 13)));
  EXPECT_EQ(c13.fixed->second, ProjPoint<Residue>::finite(Residue(9, 13)));
  (void)f13;
}

TEST(FixedPoints, Examples) {
  EXPECT_EQ(fixed_points(InvolutiveMap<Rational>::reciprocal(q(4))), pr(2, -2));
  // x -> 2 - x: alpha = 0, beta = 1, gamma = -2.
  EXPECT_EQ(fixed_points(InvolutiveMap<Rational>(q(0), q(1), q(-2))), pr(pt(1), inf()));
  EXPECT_ERROR_KIND(fixed_points(InvolutiveMap<Rational>::reciprocal(q(-1))), ErrorKind::Elliptic);
}

TEST(CentralPoint, Examples) {
  EXPECT_EQ(central_point(InvolutiveMap<Rational>::reciprocal(q(6))), pt(0));
  EXPECT_EQ(central_point(InvolutiveMap<Rational>(q(1), q(-5, 2), q(4))), pt(5, 2));
  EXPECT_EQ(central_point(InvolutiveMap<Rational>(q(0), q(1), q(-5))), inf());
}

TEST(ReciprocalSouches, Examples) {
  auto [a, l] = reciprocal_souches(pr(2, -2), pr(1, 4));
  EXPECT_EQ(a, pt(0));
  EXPECT_EQ(l, pt(5, 2));
  Rational L = q(5, 2);
  EXPECT_EQ((L - q(2)) * (L + q(2)), q(9, 4));
  EXPECT_EQ((L - q(1)) * (L - q(1)), q(9, 4));
  EXPECT_ERROR_KIND(reciprocal_souches(pr(1, -1), pr(pt(0), inf())), ErrorKind::InfinitePoint);
  auto [a2, l2] = reciprocal_souches(pr(0, 2), pr(pt(-2), pt(2, 3)));
  EXPECT_EQ(a2, pt(1));
  EXPECT_EQ(l2, pt(-2, 3));
  EXPECT_ERROR_KIND(reciprocal_souches(pr(2, -2), pr(1, 3)), ErrorKind::NotHarmonic);
}

TEST(SixthPoint, Examples) {
  EXPECT_EQ(sixth_point(pr(1, 6), pr(2, 3), pt(-1)), pt(-6));
  EXPECT_EQ(sixth_point(pr(1, 6), pr(2, 3), pt(0)), inf());
  // Fixed points 1 and 4: the partner of 2 is its harmonic conjugate -2.
  auto y = sixth_point(pr(1, 1), pr(4, 4), pt(2));
  EXPECT_EQ(y, pt(-2));
  EXPECT_EQ(cross_ratio(pt(1), pt(4), pt(2), y), pt(-1));
  EXPECT_ERROR_KIND(sixth_point(pr(1, 2), pr(1, 3), pt(5)), ErrorKind::DegenerateInvolution);
}

TEST(FourPointInvolution, Examples) {
  EXPECT_TRUE(is_involution_four(pr(1, 4), pr(2, -2)));
  EXPECT_FALSE(is_involution_four(pr(1, 2), pr(pt(0), inf())));
  EXPECT_TRUE(is_involution_four(pr(pt(0), inf()), pr(-3, 3)));
}

TEST(CompletesInvolution, Examples) {
  auto c2 = cfg(pr(1, 6), pr(2, 3), pr(-2, -3));
  EXPECT_TRUE(completes_involution(base, c2));
  EXPECT_TRUE(is_involution_det(cfg(pr(2, 3), pr(-1, -6), pr(-2, -3))));
  EXPECT_ERROR_KIND(completes_involution(base, cfg(pr(1, 6), pr(2, 3), pr(-2, -4))), ErrorKind::NotAnInvolution);
  EXPECT_ERROR_KIND(completes_involution(base, base), ErrorKind::PreconditionViolated);
}

TEST(CompletesInvolution, FourPointForm) {
  // z -> 4/z: fixed {2, -2} is harmonic with (1, 4) and with (-1, -4).
  auto ext = cfg(pr(pt(8), pt(1, 2)), pr(1, 4), pr(-1, -4));
  EXPECT_TRUE(is_harmonic(pr(2, -2), pr(1, 4)));
  EXPECT_TRUE(is_harmonic(pr(2, -2), pr(-1, -4)));
  EXPECT_TRUE(completes_involution_four(ext, pr(2, 2), pr(-2, -2)));
  EXPECT_TRUE(is_harmonic(pr(2, -2), pr(pt(8), pt(1, 2))));
}

TEST(Involutions, ExhaustiveOverSmallFieldsHaveZeroOrTwoFixedPoints) {
  for (long long p : {3, 5, 7, 11}) {
    auto counts = oracle::involution_fixed_counts(p);
    EXPECT_EQ(counts.size(), static_cast<std::size_t>(p * p)) << p;
    for (int n : counts) EXPECT_TRUE(n == 0 || n == 2) << "p=" << p << " n=" << n;
    auto census = fixed_point_census(static_cast<std::uint64_t>(p));
    EXPECT_EQ(census[1], 0u);
    EXPECT_EQ(census[3], 0u);
    EXPECT_EQ(census[0] + census[2], counts.size());
    EXPECT_EQ(census[2], static_cast<std::size_t>(std::count(counts.begin(), counts.end(), 2)));
  }
}
