#include "helpers.hpp"
#include "oracles.hpp"

using namespace desargues;

TEST(Properties, AllPassOverRationals) {
  auto r = dsl::random_suite(FieldSpec::rationals(), 100, 42);
  for (const auto& p : r.properties) {
    EXPECT_EQ(p.status, PropertyStatus::Passed) << p.name << ": " << p.first_failure;
    EXPECT_EQ(p.passed, 100u) << p.name;
  }
  EXPECT_TRUE(r.pass());
}

TEST(Properties, AllPassOverF97WithOrderedSkipped) {
  auto r = dsl::random_suite(FieldSpec::prime(97), 100, 42);
  std::size_t skipped = 0;
  for (const auto& p : r.properties) {
    if (p.status == PropertyStatus::SkippedUnordered) {
      ++skipped;
      continue;
    }
    EXPECT_EQ(p.status, PropertyStatus::Passed) << p.name << ": " << p.first_failure;
  }
  EXPECT_EQ(skipped, 3u);
  EXPECT_TRUE(r.pass());
  EXPECT_NE(r.to_text().find("SkippedUnordered"), std::string::npos);
}

TEST(Properties, Deterministic) {
  auto a = dsl::random_suite(FieldSpec::prime(101), 20, 7).to_json();
  auto b = dsl::random_suite(FieldSpec::prime(101), 20, 7).to_json();
  EXPECT_EQ(a, b);
  auto x = run_property<Rational>("agregativity", FieldSpec::rationals(), 30, 1);
  auto y = run_property<Rational>("agregativity", FieldSpec::rationals(), 30, 1);
  EXPECT_EQ(x.discarded, y.discarded);
}

TEST(Properties, Rejections) {
  EXPECT_ERROR_KIND(dsl::random_suite(FieldSpec::rationals(), 0, 1), ErrorKind::PreconditionViolated);
  EXPECT_ERROR_KIND(run_property<Rational>("nope", FieldSpec::rationals(), 1, 1), ErrorKind::PreconditionViolated);
  EXPECT_ERROR_KIND(FieldSpec::prime(2), ErrorKind::InvalidField);
}

TEST(Census, MatchesMatrixEnumeration) {
  for (long long p : {5, 7, 11, 13}) {
    auto counts = oracle::involution_fixed_counts(p);
    std::size_t zero = std::count(counts.begin(), counts.end(), 0);
    std::size_t two = std::count(counts.begin(), counts.end(), 2);
    auto census = fixed_point_census(static_cast<std::uint64_t>(p));
    EXPECT_EQ(census[0], zero) << p;
    EXPECT_EQ(census[1], 0u) << p;
    EXPECT_EQ(census[2], two) << p;
    EXPECT_EQ(census[3], 0u) << p;
    // Hyperbolic classes: one per unordered pair of distinct points.
    EXPECT_EQ(two, static_cast<std::size_t>(p * (p + 1) / 2)) << p;
  }
}
