#include "helpers.hpp"

using namespace desargues;
using namespace testing_helpers;

TEST(Engaged, Examples) {
  EXPECT_TRUE(is_engaged(pt(0), pr(-1, 2)));
  EXPECT_FALSE(is_engaged(pt(0), pr(1, 6)));
  EXPECT_TRUE(is_engaged(pt(3), pr(1, 6)));
  EXPECT_ERROR_KIND(is_engaged(pt(1), pr(1, 6)), ErrorKind::CoincidentPoints);
  EXPECT_ERROR_KIND(is_engaged(pt(0), pr(pt(1), inf())), ErrorKind::InfinitePoint);
}

TEST(Mingled, Examples) {
  EXPECT_EQ(mingled(pr(0, 3), pr(2, 5)), Mingling::Meles);
  EXPECT_EQ(mingled(pr(0, 1), pr(2, 3)), Mingling::Demeles);
  EXPECT_EQ(mingled(pr(0, 5), pr(1, 2)), Mingling::Demeles);
  EXPECT_EQ(mingled(pr(2, 5), pr(0, 3)), Mingling::Meles);
  EXPECT_ERROR_KIND(mingled(pr(0, 3), pr(3, 5)), ErrorKind::CoincidentPoints);
}

TEST(ArbreCombinatoire, Examples) {
  EXPECT_TRUE(is_arbre_combinatoire(Arbre<Rational>{pt(0), cfg(pr(1, 6), pr(2, 3), pr(4, 5))}));
  EXPECT_TRUE(is_arbre_combinatoire(Arbre<Rational>{pt(0), cfg(pr(-1, 2), pr(-3, 4), pr(-5, 6))}));
  EXPECT_FALSE(is_arbre_combinatoire(Arbre<Rational>{pt(0), cfg(pr(1, 6), pr(-1, 2), pr(4, 5))}));
  // Pairs on opposite sides of the souche are still degagee.
  EXPECT_TRUE(is_arbre_combinatoire(Arbre<Rational>{pt(0), cfg(pr(1, 6), pr(2, 3), pr(-1, -6))}));
}

TEST(InvolutionCombinatoire, Examples) {
  EXPECT_TRUE(is_involution_combinatoire(cfg(pr(1, 6), pr(2, 3), pr(4, 5))));
  EXPECT_TRUE(is_involution_combinatoire(cfg(pr(0, 3), pr(2, 5), pr(1, 4))));
  EXPECT_FALSE(is_involution_combinatoire(cfg(pr(1, 6), pr(2, 3), pr(0, 4))));
}

TEST(MiddlePairs, Examples) {
  auto doubled = middle_pairs(q(0), q(4));
  ASSERT_EQ(doubled.size(), 2u);
  EXPECT_TRUE(doubled[0].is_doubled());
  EXPECT_TRUE(doubled[1].is_doubled());
  auto simple = middle_pairs(q(1), q(-9));
  ASSERT_EQ(simple.size(), 1u);
  EXPECT_EQ(simple[0], pr(4, -2));
  EXPECT_TRUE(middle_pairs(q(0), q(2)).empty());
}

TEST(ClassifyNodes, DoubledMiddle) {
  auto labels = classify_nodes(Arbre<Rational>{pt(0), cfg(pr(2, 2), pr(-2, -2), pr(1, 4))});
  EXPECT_EQ(labels[0].kind, NodeKind::MoyenDouble);
  EXPECT_EQ(labels[1].kind, NodeKind::MoyenDouble);
  EXPECT_EQ(labels[2], (NodeLabel{NodeKind::Extreme, ExtremeSide::Interieur, ExtremeSide::Exterieur}));
}

TEST(ClassifyNodes, SimpleMiddle) {
  auto labels = classify_nodes(Arbre<Rational>{pt(0), cfg(pr(2, -2), pr(-2, 2), pr(1, -4))});
  EXPECT_EQ(labels[0].kind, NodeKind::MoyenSimple);
  EXPECT_EQ(labels[1].kind, NodeKind::MoyenSimple);
  EXPECT_EQ(labels[2].kind, NodeKind::Extreme);
  EXPECT_EQ(labels[2].first_side, ExtremeSide::Interieur);
  EXPECT_EQ(labels[2].second_side, ExtremeSide::Exterieur);
}

TEST(ClassifyNodes, NoMiddle) {
  // 6 is not a square: no middle couple, so no sides.
  auto labels = classify_nodes(Arbre<Rational>{pt(0), cfg(pr(1, 6), pr(2, 3), pr(-1, -6))});
  for (const auto& l : labels) EXPECT_EQ(l, (NodeLabel{NodeKind::Extreme, std::nullopt, std::nullopt}));
}

TEST(ClassifyNodes, Rejections) {
  EXPECT_ERROR_KIND(classify_nodes(Arbre<Rational>{pt(0), cfg(pr(1, 6), pr(2, 3), pr(-1, -5))}),
                    ErrorKind::NotAnArbre);
}

TEST(Ordering, UnorderedFieldRejected) {
  auto r = [](long long v) { return ProjPoint<Residue>::finite(Residue(v, 97)); };
  PointPair<Residue> a{r(1), r(6)}, b{r(2), r(3)};
  EXPECT_ERROR_KIND(is_engaged(r(0), a), ErrorKind::UnorderedField);
  EXPECT_ERROR_KIND(mingled(a, b), ErrorKind::UnorderedField);
  EXPECT_ERROR_KIND(middle_pairs(Residue(0, 97), Residue(4, 97)), ErrorKind::UnorderedField);
}
