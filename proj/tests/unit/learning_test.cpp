#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "listcomb/algebra.hpp"
#include "listcomb/dims.hpp"
#include "listcomb/learning.hpp"
#include "listcomb/random.hpp"
#include "listcomb/verify.hpp"

namespace listcomb {
namespace {

using testing::digits;
using testing::full;
using testing::pairs;

DiscreteDistribution uniform_labeled(const ListConcept& c, std::size_t n) {
  Marginal m;
  for (std::size_t x = 0; x < n; ++x) m.weights.emplace_back(static_cast<PointIndex>(x), 1.0 / n);
  return labeled_by(m, c);
}

TEST(Erm, Examples) {
  const ConceptClass c = digits({"00", "01", "11"}, 2);
  const LearningRule a = erm(c);
  EXPECT_EQ(a(pairs({{1, 1}})).to_concept(), c[1]);
  EXPECT_EQ(a(Sample{}).to_concept(), c[0]);
  // Second concept misses one pair fewer.
  EXPECT_EQ(a(pairs({{0, 1}, {1, 1}, {0, 0}})).to_concept(), c[1]);
  const ConceptClass one = digits({"10"}, 2);
  EXPECT_EQ(erm(one)(pairs({{0, 0}})).to_concept(), one[0]);
  const ConceptClass empty(Domain::numbered(1), LabelSpace::numbered(2), 1, {});
  EXPECT_THROW(erm(empty), DomainError);
}

TEST(Erm, LossEqualsClassMinimum) {
  const ConceptClass c = digits({"012", "210", "111", "000"}, 3);
  const LearningRule a = erm(c);
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = make_stream(40, {t});
    Sample s;
    for (int i = 0; i < 6; ++i)
      s.push_back({static_cast<PointIndex>(uniform_below(rng, 3)), static_cast<LabelIndex>(uniform_below(rng, 3))});
    EXPECT_EQ(empirical_loss(a(s), s), min_empirical_loss(c, s));
  }
}

TEST(Erm, PartialWinnerIsFilled) {
  const ConceptClass c = digits({"0*"}, 3);
  const ListHypothesis h = erm(c)(Sample{});
  EXPECT_EQ(h.value(1), LabelSet{0});
}

TEST(Curve, SingletonIsZero) {
  const ConceptClass one = digits({"01"}, 2);
  const auto pts = learning_curve(erm(one), uniform_labeled(one[0], 2), {1, 5, 20}, 50, 3);
  for (const auto& p : pts) EXPECT_EQ(p.estimate, 0.0);
}

TEST(Curve, ExactMatchesMonteCarlo) {
  const ConceptClass c = digits({"00", "11"}, 2);
  const DiscreteDistribution d = uniform_labeled(c[1], 2);
  const auto exact = learning_curve(erm(c), d, {1}, 0, 0, CurveMode::kExact);
  ASSERT_EQ(exact.size(), 1u);
  // Every pair is labeled 1, so a single draw already rules out "00".
  EXPECT_EQ(exact[0].trials, 0u);
  const auto mc = learning_curve(erm(c), d, {1}, 4000, 17);
  EXPECT_LE(std::abs(mc[0].estimate - exact[0].estimate), 3 * mc[0].std_error + 1e-12);

  // A target that ERM's tie rule does not prefer.
  const ConceptClass c2 = digits({"00", "01", "11"}, 2);
  const DiscreteDistribution d2 = uniform_labeled(c2[2], 2);
  const auto e2 = learning_curve(erm(c2), d2, {1, 2}, 0, 0, CurveMode::kExact);
  // n=1: seeing x0->1 yields "11"; seeing x1->1 yields "01" (loss 1/2).
  EXPECT_NEAR(e2[0].estimate, 0.25, 1e-12);
  const auto m2 = learning_curve(erm(c2), d2, {1, 2}, 4000, 5);
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_LE(std::abs(m2[i].estimate - e2[i].estimate), 3 * m2[i].std_error + 1e-12);
}

TEST(Curve, ExactCapacity) {
  const ConceptClass c = full(3, 2);
  const DiscreteDistribution d = uniform_labeled(c[0], 3);
  EXPECT_THROW(learning_curve(erm(c), d, {20}, 0, 0, CurveMode::kExact), CapacityError);
  EXPECT_NO_THROW(learning_curve(erm(c), d, {20}, 10, 0, CurveMode::kAuto));
}

TEST(Curve, Reproducible) {
  const ConceptClass c = digits({"012", "111", "210"}, 3);
  const DiscreteDistribution d = uniform_labeled(c[2], 3);
  EXPECT_EQ(curve_csv(learning_curve(erm(c), d, {3, 9}, 300, 12)),
            curve_csv(learning_curve(erm(c), d, {3, 9}, 300, 12)));
  EXPECT_EQ(curve_csv(learning_curve(erm(c), d, {3}, 10, 1)).substr(0, 29), "n,estimate,stderr,trials,seed");
}

TEST(Curve, ProductLearnerSubadditive) {
  const ConceptClass f = digits({"00", "01", "11"}, 2);
  const ConceptClass g = digits({"0", "1", "2"}, 3);
  const ProductClass p = product(f, g);
  const DiscreteDistribution df = uniform_labeled(f[2], 2);
  const DiscreteDistribution dg = uniform_labeled(g[1], 1);
  // Product distribution: independent coordinates.
  std::vector<WeightedPair> support;
  for (const auto& a : df.support())
    for (const auto& b : dg.support())
      support.push_back({p.layout.point(a.point, b.point), p.layout.label(a.label, b.label),
                         a.probability * b.probability});
  const DiscreteDistribution dp(support);
  const std::vector<std::size_t> ns{1, 2, 4};
  const auto cf = learning_curve(erm(f), df, ns, 2000, 1);
  const auto cg = learning_curve(erm(g), dg, ns, 2000, 1);
  const auto cp = learning_curve(product_learner(erm(f), erm(g), p.layout), dp, ns, 2000, 1);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double sigma = cp[i].std_error + cf[i].std_error + cg[i].std_error;
    EXPECT_LE(cp[i].estimate, cf[i].estimate + cg[i].estimate + 3 * sigma);
  }
}

TEST(UniformConvergence, SingletonPointMass) {
  const ConceptClass one = digits({"0"}, 2);
  const DiscreteDistribution d({{0, 1, 1.0}});
  EXPECT_EQ(uniform_convergence_rate(one, d, 10, 50, 0).estimate, 0.0);
}

TEST(UniformConvergence, VanishesAndHasSqrtShape) {
  for (std::uint64_t t = 0; t < 5; ++t) {
    auto rng = make_stream(41, {t});
    const ConceptClass c = random_class(rng, {4, 3, 10, 1, 2}, false, 1);
    const std::size_t g = graph_dimension(c).value;
    if (g == 0) continue;
    std::vector<WeightedPair> support;
    const std::size_t n = c.domain().size(), m = c.labels().size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < m; ++y)
        support.push_back({static_cast<PointIndex>(x), static_cast<LabelIndex>(y), 1.0 / static_cast<double>(n * m)});
    const DiscreteDistribution d(support);
    const auto small = uniform_convergence_rate(c, d, 25, 400, 2);
    const auto large = uniform_convergence_rate(c, d, 400, 400, 2);
    EXPECT_LT(large.estimate, small.estimate);
    for (const auto& p : {small, large}) {
      const double ratio = p.estimate / std::sqrt(static_cast<double>(g) / static_cast<double>(p.n));
      EXPECT_GE(ratio, 0.1);
      EXPECT_LE(ratio, 10.0);
    }
  }
}

TEST(FixedMarginal, SingletonAndWorstCase) {
  const ConceptClass one = digits({"10"}, 2);
  const Marginal m{{{0, 0.5}, {1, 0.5}}};
  for (const auto& p : fixed_marginal_curve(one, m, {1, 4}, 100, 0)) EXPECT_EQ(p.point.estimate, 0.0);

  const ConceptClass c = digits({"00", "01", "11"}, 2);
  const auto worst = fixed_marginal_curve(c, m, {1, 3}, 500, 6);
  for (std::size_t i = 0; i < worst.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const auto single = learning_curve(erm(c), labeled_by(m, c[j]), {worst[i].point.n}, 500, 6);
      EXPECT_LE(single[0].estimate, worst[i].point.estimate + 1e-12);
    }
  }
}

TEST(FixedMarginal, PowerUnionBound) {
  const ConceptClass c = digits({"00", "01", "11"}, 2);
  const Marginal m{{{0, 0.7}, {1, 0.3}}};
  const std::vector<std::size_t> ns{1, 3};
  const auto base = fixed_marginal_curve(c, m, ns, 1500, 8);
  const ProductClass p = product(c, c);
  Marginal m2;
  for (auto [x, wx] : m.weights)
    for (auto [y, wy] : m.weights) m2.weights.emplace_back(p.layout.point(x, y), wx * wy);
  const LearningRule rule = product_learner(erm(c), erm(c), p.layout);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    double worst = 0, sigma = 0;
    for (const auto& target : p.materialized) {
      const auto pt = learning_curve(rule, labeled_by(m2, target), {ns[i]}, 1500, 8);
      if (pt[0].estimate > worst) {
        worst = pt[0].estimate;
        sigma = pt[0].std_error;
      }
    }
    EXPECT_LE(worst, 2 * base[i].point.estimate + 3 * (sigma + 2 * base[i].point.std_error));
  }
}

TEST(Stats, MeanAndStderr) {
  const auto e = mean_and_stderr({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(e.mean, 2.5);
  EXPECT_NEAR(e.std_error, std::sqrt(5.0 / 3.0) / 2.0, 1e-12);
}

}  // namespace
}  // namespace listcomb
