#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "listcomb/compression.hpp"
#include "listcomb/random.hpp"
#include "listcomb/verify.hpp"

namespace listcomb {
namespace {

using testing::digits;
using testing::full;
using testing::pairs;

TEST(Bounds, PlugIns) {
  const auto a = generalization_bound(2, 100, 0.5);
  EXPECT_NEAR(a.prob_bound, 2 * std::exp(2 * std::log(100.0) - 25), 1e-18);
  EXPECT_NEAR(a.prob_bound, 2.78e-7, 0.01e-7);
  const auto b = generalization_bound(0, 100, 1.0);
  EXPECT_NEAR(b.curve_bound, 0.2346, 5e-5);
  EXPECT_NEAR(b.prob_bound, 2 * std::exp(-100.0), 1e-50);
  EXPECT_THROW(generalization_bound(1, 1, 0.5), DomainError);
  EXPECT_THROW(generalization_bound(1, 10, 0.0), DomainError);
  EXPECT_THROW(generalization_bound(1, 10, 1.5), DomainError);
}

TEST(Bounds, BlockCount) {
  EXPECT_EQ(block_count(10, 0.1), static_cast<std::size_t>(std::ceil(std::log(30.0) / 0.01)));
  EXPECT_DOUBLE_EQ(default_epsilon(1), 1.0 / 8);
  EXPECT_DOUBLE_EQ(default_epsilon(2), 1.0 / 12);
}

TEST(Subsequence, Basics) {
  const Sample t = pairs({{0, 1}, {1, 0}, {0, 1}});
  EXPECT_TRUE(is_subsequence(pairs({{0, 1}, {0, 1}}), t));
  EXPECT_FALSE(is_subsequence(pairs({{1, 0}, {1, 0}}), t));
  EXPECT_EQ(distinct_subsequences(t, 2).size(), 3u);  // 01/10, 01/01, 10/01
  EXPECT_EQ(enumerate_samples(2, 2, 2).size(), 16u);
  EXPECT_THROW(enumerate_samples(3, 3, 9, 1000), CapacityError);
}

TEST(Game, MatchingPennies) {
  // Two rows, two columns; each row misses one column.
  const auto sol = solve_loss_game({{1, 0}, {0, 1}});
  EXPECT_TRUE(sol.exact);
  EXPECT_NEAR(sol.value, 0.5, 1e-12);
  EXPECT_NEAR(sol.row_mix[0], 0.5, 1e-12);
}

TEST(Game, DominantRowAndMwFallback) {
  const std::vector<std::vector<std::uint8_t>> loss{{1, 1, 0}, {0, 0, 0}, {1, 0, 1}};
  const auto lp = solve_loss_game(loss);
  EXPECT_NEAR(lp.value, 0.0, 1e-12);
  const auto mw = solve_loss_game(loss, 0);
  EXPECT_FALSE(mw.exact);
  // Regret bound 2 sqrt(ln 4 / 200000) ~ 0.005.
  EXPECT_LE(mw.value, 0.006);
  EXPECT_NEAR(lp.row_mix[1], 1.0, 1e-12);

  const std::vector<std::vector<std::uint8_t>> rps{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  EXPECT_NEAR(solve_loss_game(rps).value, 2.0 / 3, 1e-9);
  EXPECT_NEAR(solve_loss_game(rps, 0).value, 2.0 / 3, 1e-3);
}

TEST(Validate, ConstantFullListAlwaysValid) {
  const ConceptClass c = full(2, 2);
  CompressionScheme s;
  s.k = 2;
  s.compress = [](const Sample&) { return Sample{}; };
  s.reconstruct = [](const Sample&) { return ListHypothesis(2, {{0, 1}, {0, 1}}); };
  s.size_profile = [](std::size_t) { return 0; };
  const auto r = validate_scheme(s, c, ValidationMode::kRealizable, enumerate_samples(2, 2, 2));
  EXPECT_TRUE(r.ok());
  // Four of the 16 put both labels on one point.
  EXPECT_EQ(r.checked, 12u);
  EXPECT_EQ(r.skipped, 4u);
}

TEST(Validate, IgnoringInputFails) {
  const ConceptClass c = digits({"0", "1"}, 2);
  CompressionScheme s;
  s.compress = [](const Sample&) { return Sample{}; };
  s.reconstruct = [](const Sample&) { return ListHypothesis(1, {{0}}); };
  s.size_profile = [](std::size_t) { return 0; };
  const auto r = validate_scheme(s, c, ValidationMode::kRealizable, {pairs({{0, 1}})});
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.loss_violations, std::vector<std::size_t>{0});
}

TEST(ConsistentSubsample, RealizableAndFixedSize) {
  const ConceptClass c = digits({"0011", "0111", "0001", "1111"}, 2);
  const auto scheme = consistent_subsample_scheme(c);
  ASSERT_TRUE(scheme.fixed_size);
  EXPECT_EQ(*scheme.fixed_size, 3u);
  std::vector<Sample> samples;
  for (std::size_t len = 1; len <= 3; ++len)
    for (const auto& s : enumerate_samples(4, 2, len)) samples.push_back(s);
  const auto r = validate_scheme(scheme, c, ValidationMode::kRealizable, samples);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.skipped, 0u);
  for (const auto& s : samples)
    if (!s.empty()) EXPECT_EQ(scheme.compress(s).size(), 3u);
}

TEST(Agnostic, MislabeledConstant) {
  const ConceptClass zero = digits({"0"}, 2);
  const auto scheme = consistent_subsample_scheme(zero);
  const Sample s = pairs({{0, 0}, {0, 1}, {0, 0}, {0, 0}});
  const auto r = agnostic_from_realizable(scheme, zero, s);
  EXPECT_EQ(r.loss, Rational(1, 4));
  EXPECT_EQ(r.best, Rational(1, 4));
  const Sample clean = pairs({{0, 0}});
  EXPECT_EQ(agnostic_from_realizable(scheme, zero, clean).loss, Rational(0));
}

TEST(Boost, SingletonClass) {
  const ConceptClass one = digits({"01"}, 2);
  const LearningRule rule = erm(one);
  BoostConfig cfg;
  cfg.seed = 4;
  const Sample s = pairs({{0, 0}, {1, 1}, {0, 0}});
  const auto r = boost_compress(rule, one, s, cfg);
  EXPECT_EQ(miss_count(r.reconstruction, s), 0u);
  EXPECT_EQ(r.compressed.size(), r.d * r.blocks);
  EXPECT_EQ(r.blocks, block_count(s.size(), default_epsilon(1)));
}

TEST(Boost, VoteCountsSumToKT) {
  const ConceptClass c = digits({"0011", "0111", "0001", "1111", "0000"}, 2);
  const LearningRule rule = erm(c);
  const Sample s = pairs({{0, 0}, {3, 1}, {2, 0}, {1, 0}});
  BoostConfig cfg;
  cfg.epsilon = default_epsilon(1);
  cfg.seed = 9;
  const auto d = minimal_block_length(rule, s, cfg.epsilon, s.size(), cfg);
  ASSERT_TRUE(d);
  cfg.d = *d;
  const auto r = boost_compress(rule, c, s, cfg);
  EXPECT_EQ(miss_count(r.reconstruction, s), 0u);
  const auto phi = vote_counts(rule, r.compressed, r.d, 4, 2);
  for (const auto& per_point : phi) {
    std::size_t total = 0;
    for (auto v : per_point) total += v;
    EXPECT_EQ(total, r.blocks);
  }
  for (const auto& p : r.compressed) EXPECT_NE(std::find(s.begin(), s.end(), p), s.end());
}

TEST(Boost, RejectsBadInputs) {
  const ConceptClass c = digits({"0"}, 2);
  BoostConfig cfg;
  cfg.epsilon = 0.3;
  EXPECT_THROW(boost_compress(erm(c), c, pairs({{0, 0}}), cfg), DomainError);
  cfg.epsilon = 0.1;
  EXPECT_THROW(boost_compress(erm(c), c, pairs({{0, 1}}), cfg), DomainError);
  EXPECT_TRUE(boost_compress(erm(c), c, Sample{}, cfg).compressed.empty());
}

TEST(Boost, MajorityVoteTieGoesToSmallerLabel) {
  // Two blocks voting 1 and 0 at x0: tie, k = 1 keeps label 0.
  const ConceptClass c = digits({"0", "1"}, 2);
  const ListHypothesis h = majority_vote(erm(c), pairs({{0, 1}, {0, 0}}), 1, 1, 1, 2);
  EXPECT_EQ(h.value(0), LabelSet{0});
}

TEST(Json, CompressedRoundTrip) {
  const ConceptClass c = digits({"01"}, 2);
  const SchemeDescriptor d{"boost", 1, 2, 5, 0, 77};
  const io::Json j = compressed_to_json(d, pairs({{0, 0}, {1, 1}}), c);
  const SchemeDescriptor back = descriptor_from_json(j);
  EXPECT_EQ(back.kind, "boost");
  EXPECT_EQ(back.d, 2u);
  EXPECT_EQ(back.block_count, 5u);
  EXPECT_EQ(back.seed, 77u);
  EXPECT_EQ(io::sample_from_json(j, c), pairs({{0, 0}, {1, 1}}));
  EXPECT_THROW(descriptor_from_json(io::parse_json(R"({"scheme": {"kind": 3}})")), FormatError);
}

}  // namespace
}  // namespace listcomb
