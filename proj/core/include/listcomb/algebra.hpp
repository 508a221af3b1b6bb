#pragma once

// Class constructions: products and powers, free/minimal disambiguation, the
// selection class of a list class, and the cover relation.
//
// Product layout: point (u, v) has index u * |V| + v and label (y, z) has
// index y * |Z| + z. Identifiers are "(" + left + "|" + right + ")" with '\',
// '|', '(' and ')' escaped by a backslash inside each component.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "listcomb/core.hpp"
#include "listcomb/learning.hpp"

namespace listcomb {

struct Caps {
  std::size_t product_domain = 4096;
  std::size_t product_concepts = 1'000'000;
  std::size_t selection = 1'000'000;
  std::size_t exact_cover = 24;
};

std::string encode_pair(const std::string& left, const std::string& right);
// Inverse of encode_pair; FormatError on anything it could not have produced.
std::pair<std::string, std::string> decode_pair(const std::string& encoded);

// Index bookkeeping shared by product classes, hypotheses and learners.
struct ProductLayout {
  Domain left_domain, right_domain, domain;
  LabelSpace left_labels, right_labels, labels;

  static ProductLayout make(const Domain& u, const LabelSpace& y, const Domain& v, const LabelSpace& z);

  PointIndex point(PointIndex u, PointIndex v) const {
    return static_cast<PointIndex>(u * right_domain.size() + v);
  }
  LabelIndex label(LabelIndex y, LabelIndex z) const {
    return static_cast<LabelIndex>(y * right_labels.size() + z);
  }
  std::pair<PointIndex, PointIndex> split_point(PointIndex p) const {
    const auto w = static_cast<PointIndex>(right_domain.size());
    return {p / w, p % w};
  }
  std::pair<LabelIndex, LabelIndex> split_label(LabelIndex l) const {
    const auto w = static_cast<LabelIndex>(right_labels.size());
    return {l / w, l % w};
  }
};

struct ProductClass {
  ConceptClass left;
  ConceptClass right;
  ConceptClass materialized;
  ProductLayout layout;
  // Source pair (i, j) of every materialized concept.
  std::vector<std::pair<std::size_t, std::size_t>> factors;
};

ListConcept product_concept(const ListConcept& f, const ListConcept& g, const ProductLayout& layout);
ListHypothesis product_hypothesis(const ListHypothesis& h1, const ListHypothesis& h2,
                                  const ProductLayout& layout);

// CapacityError when the product domain or concept count exceeds the caps.
ProductClass product(const ConceptClass& a, const ConceptClass& b, const Caps& caps = {});
// Left-associated r-fold product; r >= 1.
ConceptClass power(const ConceptClass& a, std::size_t r, const Caps& caps = {});

// Fresh label "ŷ#<i>" for every concept i with an undefined point.
ConceptClass free_disambiguation(const ConceptClass& c);
inline const std::string kMinimalStarLabel = "y⋆";
// One shared label "y⋆" appended when any concept is partial.
ConceptClass minimal_disambiguation(const ConceptClass& c);
// Index of the shared label in minimal_disambiguation(c), if it was added.
std::optional<LabelIndex> minimal_star_index(const ConceptClass& original, const ConceptClass& disambiguated);

// All 1-list selections of a total class; CapacityError past caps.selection.
ConceptClass selection_class(const ConceptClass& c, const Caps& caps = {});

// c is covered by h: c(x) within h(x) at every defined point (for a k-list c
// every label of c(x)).
bool covers(const ListHypothesis& h, const ListConcept& c);
bool covers(const std::vector<ListHypothesis>& hs, const ListConcept& c);
bool covers(const std::vector<ListHypothesis>& hs, const ConceptClass& cls);
bool covers(const ConceptClass& hs, const ConceptClass& cls);

// Coordinate projections of a product sample.
Sample project_left(const Sample& s, const ProductLayout& layout);
Sample project_right(const Sample& s, const ProductLayout& layout);
// Projection through identifiers: decodes every point and label name of the
// product spaces and looks the components up by name. FormatError on a
// malformed or unknown identifier.
std::pair<Sample, Sample> project_by_name(const Sample& s, const ProductLayout& layout);

// (A1 x A2)(S) = A1(pi1 S) x A2(pi2 S) on the product layout.
LearningRule product_learner(const LearningRule& a1, const LearningRule& a2, const ProductLayout& layout);

}  // namespace listcomb
