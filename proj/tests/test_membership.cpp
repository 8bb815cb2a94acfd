#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <vector>

#include "fuzzscore/linguistic_variable.hpp"
#include "fuzzscore/sampled_set.hpp"
#include "oracle.hpp"

using namespace fuzzscore;

namespace {

LinguisticVariable defaultItem() { return successPartition("item", 1.0, 5.0); }

}  // namespace

TEST_CASE("triangular membership evaluates its linear pieces") {
  const auto mf = MembershipFunction::triangular(1, 3, 5);
  CHECK(mf(3.0) == 1.0);
  CHECK(mf(0.5) == 0.0);
  CHECK(mf(2.0) == 0.5);
  CHECK(mf(5.0) == 0.0);
  CHECK(mf(1.0) == 0.0);
  CHECK(mf(4.0) == 0.5);
}

TEST_CASE("shouldered triangles peak at the universe edge") {
  const auto left = MembershipFunction::triangular(1, 1, 3);
  CHECK(left(1.0) == 1.0);
  CHECK(left(2.0) == 0.5);
  CHECK(left(3.0) == 0.0);
  const auto right = MembershipFunction::triangular(3, 5, 5);
  CHECK(right(5.0) == 1.0);
  CHECK(right(4.0) == 0.5);
}

TEST_CASE("trapezoid holds its core at one") {
  const auto mf = MembershipFunction::trapezoidal(1, 2, 4, 5);
  CHECK(mf(2.0) == 1.0);
  CHECK(mf(3.0) == 1.0);
  CHECK(mf(4.0) == 1.0);
  CHECK(mf(1.5) == 0.5);
  CHECK(mf(4.5) == 0.5);
  CHECK(mf(0.9) == 0.0);
  CHECK(mf(5.1) == 0.0);
}

TEST_CASE("malformed shape parameters are rejected") {
  CHECK_THROWS_AS(MembershipFunction::triangular(3, 2, 5), ConfigError);
  CHECK_THROWS_AS(MembershipFunction::triangular(2, 2, 2), ConfigError);
  CHECK_THROWS_AS(MembershipFunction::trapezoidal(1, 3, 2, 5), ConfigError);
  CHECK_THROWS_AS(MembershipFunction::trapezoidal(4, 4, 4, 4), ConfigError);
}

TEST_CASE("membership stays within [0,1] and is unimodal on a grid") {
  const auto shapes = {MembershipFunction::triangular(1, 3, 5),
                       MembershipFunction::triangular(1, 1, 3),
                       MembershipFunction::trapezoidal(1, 2, 4, 5)};
  for (const auto& mf : shapes) {
    double prev = 0.0;
    bool falling = false;
    for (int i = 0; i <= 2000; ++i) {
      const double x = 1.0 + 4.0 * i / 2000.0;
      const double mu = mf(x);
      CHECK(mu >= 0.0);
      CHECK(mu <= 1.0);
      if (mu < prev - 1e-12) falling = true;
      if (falling) CHECK(mu <= prev + 1e-12);
      prev = mu;
    }
  }
}

TEST_CASE("membership slope is bounded by its linear pieces") {
  const auto mf = MembershipFunction::triangular(1, 3, 5);  // slopes +-1/2
  for (int i = 0; i < 2000; ++i) {
    const double x = 1.0 + 4.0 * i / 2000.0;
    const double step = 4.0 / 2000.0;
    CHECK(std::abs(mf(x + step) - mf(x)) <= 0.5 * step + 1e-12);
  }
}

TEST_CASE("fuzzify returns one membership per label") {
  const auto item = defaultItem();

  const Eigen::ArrayXd atFailure = fuzzify(item, 1.0);
  CHECK(atFailure[0] == 1.0);
  CHECK(atFailure[1] == 0.0);
  CHECK(atFailure[2] == 0.0);

  const Eigen::ArrayXd atFour = fuzzify(item, 4.0);
  CHECK(atFour[0] == 0.0);
  CHECK(atFour[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(atFour[2] == doctest::Approx(0.5).epsilon(1e-12));

  // (5-4.2)/2 and (4.2-3)/2
  const Eigen::ArrayXd interior = fuzzify(item, 4.2);
  CHECK(interior[0] == 0.0);
  CHECK(interior[1] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(interior[2] == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("fuzzify outside the universe names the variable") {
  const auto item = successPartition("item_07", 1.0, 5.0);
  CHECK_THROWS_WITH_AS(fuzzify(item, 5.5),
                       doctest::Contains("item_07"), DataError);
  CHECK_THROWS_AS(fuzzify(item, 0.0), DataError);
}

TEST_CASE("default partitions are Ruspini on a dense grid") {
  const auto vars = {successPartition("item", 1.0, 5.0), successPartition("dim", 1.0, 7.0),
                     levelPartition("out5", 1.0, 5.0), levelPartition("out7", 1.0, 7.0)};
  for (const auto& var : vars) {
    const Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(10001, var.lo(), var.hi());
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
      double sum = 0.0;
      for (Eigen::Index j = 0; j < var.labelCount(); ++j) sum += var.labelMf(j)(xs[i]);
      CHECK(std::abs(sum - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("variables reject bad label layouts") {
  using Labels = std::vector<LinguisticVariable::Label>;
  // support outside the universe
  CHECK_THROWS_AS(LinguisticVariable("v", 1, 5,
                                     Labels{{"wide", MembershipFunction::triangular(0, 3, 5)}}),
                  ConfigError);
  // coverage hole over (3, 5]
  CHECK_THROWS_AS(LinguisticVariable("v", 1, 5,
                                     Labels{{"lo", MembershipFunction::triangular(1, 2, 3)}}),
                  ConfigError);
  // duplicate label name
  CHECK_THROWS_AS(LinguisticVariable("v", 1, 5,
                                     Labels{{"a", MembershipFunction::triangular(1, 1, 5)},
                                            {"a", MembershipFunction::triangular(1, 5, 5)}}),
                  ConfigError);
}

TEST_CASE("clip is identity at one and annihilates at zero") {
  const auto set = SampledFuzzySet::sample(MembershipFunction::triangular(1, 3, 5), 1, 5, 1001);
  CHECK((clip(set, 1.0).mu() == set.mu()).all());
  CHECK((clip(set, 0.0).mu() == 0.0).all());
}

TEST_CASE("clipping a triangle leaves a plateau over its level set") {
  const auto set = SampledFuzzySet::sample(MembershipFunction::triangular(1, 3, 5), 1, 5, 1001);
  const auto clipped = clip(set, 0.5);
  const Eigen::ArrayXd xs = clipped.grid();
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    if (xs[i] >= 2.0 && xs[i] <= 4.0)
      CHECK(clipped.mu()[i] == 0.5);
    else
      CHECK(clipped.mu()[i] == set.mu()[i]);
  }
}

TEST_CASE("product-scale implication scales pointwise") {
  const auto set = SampledFuzzySet::sample(MembershipFunction::triangular(1, 3, 5), 1, 5, 101);
  const auto scaled = clip(set, 0.5, Implication::ProductScale);
  CHECK((scaled.mu() == set.mu() * 0.5).all());
}

TEST_CASE("aggregate of one set is the set; zero sets are absorbed") {
  const auto set = SampledFuzzySet::sample(MembershipFunction::triangular(1, 3, 5), 1, 5, 1001);
  const std::vector<SampledFuzzySet> single = {set};
  CHECK((aggregate(single).mu() == set.mu()).all());

  const std::vector<SampledFuzzySet> withZero = {set, SampledFuzzySet::zeros(1, 5, 1001)};
  CHECK((aggregate(withZero).mu() == set.mu()).all());
}

TEST_CASE("aggregating disjoint clipped triangles gives their envelope") {
  const auto low = clip(
      SampledFuzzySet::sample(MembershipFunction::triangular(1, 1, 2), 1, 5, 1001), 0.7);
  const auto high = clip(
      SampledFuzzySet::sample(MembershipFunction::triangular(4, 5, 5), 1, 5, 1001), 0.4);
  const std::vector<SampledFuzzySet> sets = {low, high};
  const auto agg = aggregate(sets);
  for (Eigen::Index i = 0; i < agg.resolution(); ++i)
    CHECK(agg.mu()[i] == std::max(low.mu()[i], high.mu()[i]));
}

TEST_CASE("aggregate rejects an empty list") {
  const std::vector<SampledFuzzySet> none;
  CHECK_THROWS_WITH_AS(aggregate(none), doctest::Contains("no activated consequents"), Error);
}

TEST_CASE("centroid matches the analytic value for single shapes") {
  struct Case {
    MembershipFunction mf;
    double expected;
  };
  const Case cases[] = {
      {MembershipFunction::triangular(1, 3, 5), 3.0},
      {MembershipFunction::triangular(3, 5, 5), oracle::analyticTriangleCentroid(3, 5, 5)},
      {MembershipFunction::triangular(1, 1, 3), oracle::analyticTriangleCentroid(1, 1, 3)},
      {MembershipFunction::trapezoidal(1, 2, 4, 5), 3.0},
  };
  CHECK(oracle::analyticTriangleCentroid(3, 5, 5) == doctest::Approx(13.0 / 3.0).epsilon(1e-12));
  CHECK(oracle::analyticTriangleCentroid(1, 1, 3) == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  for (const Case& c : cases) {
    const auto at1001 = SampledFuzzySet::sample(c.mf, 1, 5, 1001);
    const auto at2001 = SampledFuzzySet::sample(c.mf, 1, 5, 2001);
    CHECK(std::abs(centroid(at1001) - c.expected) < 1e-4);
    CHECK(std::abs(centroid(at2001) - c.expected) < 1e-4);
    CHECK(std::abs(centroid(at2001) - centroid(at1001)) < 1e-4);
  }
}

TEST_CASE("symmetric shapes defuzzify to their axis") {
  const auto set = SampledFuzzySet::sample(MembershipFunction::triangular(1, 3, 5), 1, 5, 1001);
  CHECK(std::abs(centroid(set) - 3.0) < 1e-6);
}

TEST_CASE("an all-zero set has no centroid") {
  const auto empty = SampledFuzzySet::zeros(1, 5, 1001);
  CHECK_THROWS_WITH_AS(centroid(empty), doctest::Contains("empty aggregate"), Error);
}

TEST_CASE("clip then aggregate is order independent down to the bit") {
  const auto out = levelPartition("out", 1, 5);
  std::vector<SampledFuzzySet> sets;
  const double strengths[] = {0.3, 0.8, 0.5, 0.1, 0.9};
  for (Eigen::Index j = 0; j < out.labelCount(); ++j)
    sets.push_back(clip(SampledFuzzySet::sample(out.labelMf(j), 1, 5, 1001), strengths[j]));

  const auto forward = aggregate(sets);
  std::vector<SampledFuzzySet> reversed(sets.rbegin(), sets.rend());
  const auto backward = aggregate(reversed);
  CHECK((forward.mu() == backward.mu()).all());
  CHECK(centroid(forward) == centroid(backward));
}
