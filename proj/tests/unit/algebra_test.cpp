#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "listcomb/algebra.hpp"
#include "listcomb/compression.hpp"
#include "listcomb/dims.hpp"
#include "listcomb/learning.hpp"

namespace listcomb {
namespace {

using testing::digits;
using testing::full;
using testing::lists;
using testing::pairs;

TEST(PairCodec, RoundTripsAwkwardNames) {
  for (auto [l, r] : std::vector<std::pair<std::string, std::string>>{
           {"a", "b"}, {"(x|y)", "z"}, {"\\", "|"}, {"", ")("}, {"(a|(b|c))", "d\\|"}}) {
    EXPECT_EQ(decode_pair(encode_pair(l, r)), std::make_pair(l, r));
  }
  EXPECT_EQ(encode_pair("a", "b"), "(a|b)");
  EXPECT_THROW(decode_pair("a|b"), FormatError);
  EXPECT_THROW(decode_pair("(a|b|c)"), FormatError);
  EXPECT_THROW(decode_pair("(ab)"), FormatError);
}

TEST(Product, Sizes) {
  const ConceptClass one = digits({"0"}, 2);
  EXPECT_EQ(product(one, one).materialized.size(), 1u);
  const ConceptClass f = digits({"01", "10"}, 2);
  const ConceptClass g = digits({"0", "1", "2"}, 3);
  const ProductClass p = product(f, g);
  EXPECT_EQ(p.materialized.size(), 6u);
  EXPECT_EQ(p.materialized.domain().size(), 2u);
  EXPECT_EQ(p.materialized.labels().size(), 6u);
  EXPECT_EQ(p.materialized.domain().name(1), "(x1|x0)");
  for (std::size_t i = 0; i < p.materialized.size(); ++i) {
    const auto [a, b] = p.factors[i];
    EXPECT_EQ(product_concept(f[a], g[b], p.layout), p.materialized[i]);
  }
}

TEST(Product, StarPropagates) {
  const ConceptClass f = digits({"0"}, 2);
  const ConceptClass g = digits({"1*"}, 2);
  const ProductClass p = product(f, g);
  const ListConcept& c = p.materialized[0];
  EXPECT_TRUE(c.defined(p.layout.point(0, 0)));
  EXPECT_FALSE(c.defined(p.layout.point(0, 1)));
  EXPECT_EQ(c.label(p.layout.point(0, 0)), p.layout.label(0, 1));
}

TEST(Product, ListSizesMultiply) {
  const ConceptClass f = lists({{{0, 1}}}, 3, 2);
  const ConceptClass g = lists({{{0, 2}}}, 3, 2);
  const ProductClass p = product(f, g);
  EXPECT_EQ(p.materialized.k(), 4u);
  EXPECT_EQ(p.materialized[0].value(0)->size(), 4u);
}

TEST(Product, Capacity) {
  const ConceptClass big = full(3, 2);
  Caps caps;
  caps.product_domain = 8;
  EXPECT_THROW(product(big, big, caps), CapacityError);
  caps = {};
  caps.product_concepts = 10;
  EXPECT_THROW(product(big, big, caps), CapacityError);
}

TEST(Power, Basics) {
  const ConceptClass c = digits({"01", "11", "00"}, 2);
  EXPECT_EQ(power(c, 1).concepts(), c.concepts());
  EXPECT_EQ(power(c, 2).size(), 9u);
  EXPECT_EQ(power(c, 3).size(), 27u);
  EXPECT_EQ(power(c, 3).domain().name(0), R"((\(x0\|x0\)|x0))");
  EXPECT_EQ(decode_pair(power(c, 3).domain().name(0)).first, "(x0|x0)");
  EXPECT_THROW(power(c, 0), DomainError);
}

TEST(Power, DsSquareBoundOnExamples) {
  // Product bound with a -1 on a class whose square stays small enough.
  const ConceptClass c = digits({"0", "1"}, 2);
  EXPECT_GE(ds_dimension(power(c, 2), 1).value + 1, 2 * ds_dimension(c, 1).value);
}

TEST(Disambiguation, Free) {
  const ConceptClass total = full(2, 2);
  EXPECT_EQ(free_disambiguation(total).labels().size(), 2u);
  const ConceptClass c = digits({"0*", "*1", "01"}, 2);
  const ConceptClass f = free_disambiguation(c);
  EXPECT_EQ(f.labels().size(), 4u);
  EXPECT_EQ(f.size(), c.size());
  EXPECT_TRUE(f.is_total());
  EXPECT_EQ(f.labels().name(2), "ŷ#0");
  EXPECT_EQ(f.labels().name(3), "ŷ#1");
}

TEST(Disambiguation, Minimal) {
  const ConceptClass c = digits({"0*", "*1"}, 2);
  const ConceptClass m = minimal_disambiguation(c);
  EXPECT_EQ(m.labels().size(), 3u);
  EXPECT_EQ(m.labels().name(2), kMinimalStarLabel);
  EXPECT_EQ(minimal_star_index(c, m), std::optional<LabelIndex>(2));
  EXPECT_TRUE(m.is_total());
  EXPECT_EQ(minimal_disambiguation(full(2, 2)).labels().size(), 2u);
  EXPECT_FALSE(minimal_star_index(full(2, 2), full(2, 2)));
}

TEST(Disambiguation, FreshLabelCollision) {
  ConceptClass c(Domain::numbered(1), LabelSpace({"a", "y⋆"}), 1,
                 {ListConcept::from_partial_labels(std::vector<std::optional<LabelIndex>>{std::nullopt})});
  const ConceptClass m = minimal_disambiguation(c);
  EXPECT_EQ(m.labels().size(), 3u);
  EXPECT_NE(m.labels().name(2), "y⋆");
}

TEST(Selection, Basics) {
  const ConceptClass c = digits({"01", "10"}, 2);
  EXPECT_EQ(selection_class(c).concepts(), c.concepts());
  const ConceptClass l = lists({{{0, 1}, {1, 2}}}, 3, 2);
  EXPECT_EQ(selection_class(l).size(), 4u);
  Caps caps;
  caps.selection = 3;
  EXPECT_THROW(selection_class(l, caps), CapacityError);
  EXPECT_THROW(selection_class(digits({"0*"}, 2)), UnsupportedClassError);
}

TEST(Selection, RealizabilityMatches) {
  const ConceptClass l = lists({{{0, 1}, {1, 2}}, {{0, 2}, {0, 1}}}, 3, 2);
  const ConceptClass f = selection_class(l);
  // Agreement needs one label per point; a list can hold two labels at once.
  for (const auto& s : enumerate_samples(2, 3, 3)) {
    bool single = true;
    for (const auto& a : s)
      for (const auto& b : s) single = single && (a.point != b.point || a.label == b.label);
    if (single) EXPECT_EQ(is_realizable(s, l).realizable, is_realizable(s, f).realizable);
  }
}

TEST(Covers, Relation) {
  const ConceptClass consts = digits({"0", "1", "2"}, 3);
  const ListHypothesis h01(2, {{0, 1}});
  EXPECT_FALSE(covers(std::vector<ListHypothesis>{h01}, consts));
  const ListHypothesis all(3, {{0, 1, 2}});
  EXPECT_TRUE(covers(std::vector<ListHypothesis>{all}, consts));
  const ConceptClass partial = digits({"0*", "*1"}, 2);
  const ListHypothesis h(1, {{0}, {1}});
  EXPECT_TRUE(covers(std::vector<ListHypothesis>{h}, partial));
  const ConceptClass m = minimal_disambiguation(partial);
  EXPECT_TRUE(covers(m, m));
}

TEST(ProductLearner, SingletonsAndProjection) {
  const ConceptClass f = digits({"01"}, 2);
  const ConceptClass g = digits({"2"}, 3);
  const ProductClass p = product(f, g);
  const LearningRule rule = product_learner(erm(f), erm(g), p.layout);
  EXPECT_EQ(rule.k, 1u);
  const Sample s = pairs({{p.layout.point(1, 0), p.layout.label(1, 2)}});
  const ListHypothesis h = rule(s);
  EXPECT_EQ(miss_count(h, s), 0u);
  EXPECT_EQ(h.to_concept(), p.materialized[0]);

  const Sample mixed = pairs({{p.layout.point(0, 0), p.layout.label(0, 1)}, {p.layout.point(1, 0), p.layout.label(1, 2)}});
  EXPECT_EQ(project_left(mixed, p.layout), pairs({{0, 0}, {1, 1}}));
  EXPECT_EQ(project_right(mixed, p.layout), pairs({{0, 1}, {0, 2}}));
  const auto [l, r] = project_by_name(mixed, p.layout);
  EXPECT_EQ(l, project_left(mixed, p.layout));
  EXPECT_EQ(r, project_right(mixed, p.layout));
}

TEST(ProductScheme, SizesAdd) {
  const ConceptClass f = digits({"01", "10", "11"}, 2);
  const ConceptClass g = digits({"0", "1"}, 2);
  const auto sf = consistent_subsample_scheme(f);
  const auto sg = consistent_subsample_scheme(g);
  const ProductClass p = product(f, g);
  const auto sp = product_scheme(sf, sg, p.layout);
  ASSERT_TRUE(sp.fixed_size);
  EXPECT_EQ(*sp.fixed_size, *sf.fixed_size + *sg.fixed_size);
  std::vector<Sample> samples;
  for (std::size_t len = 1; len <= 2; ++len)
    for (const auto& s : enumerate_samples(p.materialized.domain().size(), p.materialized.labels().size(), len))
      samples.push_back(s);
  EXPECT_TRUE(validate_scheme(sp, p.materialized, ValidationMode::kRealizable, samples).ok());
}

}  // namespace
}  // namespace listcomb
