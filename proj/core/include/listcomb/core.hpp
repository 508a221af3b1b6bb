#pragma once

// Data model for finite list-learning problems: domains, label spaces,
// (partial) k-list concepts, concept classes, samples and finite-support
// distributions, plus the basic losses and realizability predicates.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

#include "listcomb/errors.hpp"

namespace listcomb {

using PointIndex = std::uint32_t;
using LabelIndex = std::uint32_t;

// Sorted, duplicate-free set of label indices.
using LabelSet = std::vector<LabelIndex>;

using Rational = boost::rational<std::int64_t>;

namespace detail {

// Ordered list of distinct identifiers with a reverse lookup table.
class Identifiers {
 public:
  Identifiers() = default;
  explicit Identifiers(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::uint32_t> find(std::string_view name) const;
  std::uint32_t at(std::string_view name) const;

  bool operator==(const Identifiers& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace detail

class Domain : public detail::Identifiers {
 public:
  Domain() = default;
  explicit Domain(std::vector<std::string> points) : Identifiers(std::move(points)) {}
  // Points named "x0", "x1", ...
  static Domain numbered(std::size_t n, std::string_view prefix = "x");
};

class LabelSpace : public detail::Identifiers {
 public:
  LabelSpace() = default;
  // Throws FormatError when empty or when labels repeat.
  explicit LabelSpace(std::vector<std::string> labels);
  // Labels named "0", "1", ...
  static LabelSpace numbered(std::size_t m);
};

// A k-list concept over a domain of fixed size. A missing value is the
// undefined symbol (star); a defined value holds exactly k labels.
class ListConcept {
 public:
  using Value = std::optional<LabelSet>;

  ListConcept() = default;
  ListConcept(std::size_t k, std::vector<Value> values, std::string name = {});

  // 1-list total concept from one label per point.
  static ListConcept from_labels(std::span<const LabelIndex> labels, std::string name = {});
  // 1-list partial concept; nullopt entries are undefined.
  static ListConcept from_partial_labels(std::span<const std::optional<LabelIndex>> labels,
                                         std::string name = {});

  std::size_t k() const { return k_; }
  std::size_t domain_size() const { return values_.size(); }
  const Value& value(PointIndex x) const { return values_.at(x); }
  const std::vector<Value>& values() const { return values_; }
  const std::string& name() const { return name_; }

  bool defined(PointIndex x) const { return values_.at(x).has_value(); }
  bool is_total() const;
  // True iff x is in the support and y is in the list at x.
  bool contains(PointIndex x, LabelIndex y) const;
  // Single label of a 1-list concept at a defined point.
  LabelIndex label(PointIndex x) const;

  // Equality ignores the display name.
  bool operator==(const ListConcept& other) const {
    return k_ == other.k_ && values_ == other.values_;
  }

 private:
  std::size_t k_ = 1;
  std::vector<Value> values_;
  std::string name_;
};

struct ListConceptHash {
  std::size_t operator()(const ListConcept& c) const;
};

// Total k-list function: the output type of reconstructors and covers.
class ListHypothesis {
 public:
  ListHypothesis() = default;
  ListHypothesis(std::size_t k, std::vector<LabelSet> values);

  std::size_t k() const { return k_; }
  std::size_t domain_size() const { return values_.size(); }
  const LabelSet& value(PointIndex x) const { return values_.at(x); }
  const std::vector<LabelSet>& values() const { return values_; }
  bool contains(PointIndex x, LabelIndex y) const;

  ListConcept to_concept(std::string name = {}) const;
  // Throws UnsupportedClassError if the concept is partial.
  static ListHypothesis from_concept(const ListConcept& c);

  bool operator==(const ListHypothesis& other) const = default;

 private:
  std::size_t k_ = 1;
  std::vector<LabelSet> values_;
};

struct ListHypothesisHash {
  std::size_t operator()(const ListHypothesis& h) const;
};

// Finite set of k-list concepts sharing a domain, label space and list size.
// Concepts are deduplicated on construction (first occurrence wins).
class ConceptClass {
 public:
  ConceptClass() = default;
  ConceptClass(Domain domain, LabelSpace labels, std::size_t k, std::vector<ListConcept> concepts,
               std::string name = {});

  const Domain& domain() const { return domain_; }
  const LabelSpace& labels() const { return labels_; }
  std::size_t k() const { return k_; }
  const std::vector<ListConcept>& concepts() const { return concepts_; }
  const ListConcept& operator[](std::size_t i) const { return concepts_.at(i); }
  std::size_t size() const { return concepts_.size(); }
  bool empty() const { return concepts_.empty(); }
  const std::string& name() const { return name_; }
  bool is_total() const;

  auto begin() const { return concepts_.begin(); }
  auto end() const { return concepts_.end(); }

 private:
  Domain domain_;
  LabelSpace labels_;
  std::size_t k_ = 1;
  std::vector<ListConcept> concepts_;
  std::string name_;
};

struct LabeledPoint {
  PointIndex point = 0;
  LabelIndex label = 0;
  bool operator==(const LabeledPoint&) const = default;
};

// Ordered sequence of labeled points; repetitions allowed.
using Sample = std::vector<LabeledPoint>;

// Throws IndexError if any index is out of range for the class.
void check_sample(const ConceptClass& cls, const Sample& s);

struct WeightedPair {
  PointIndex point = 0;
  LabelIndex label = 0;
  double probability = 0.0;
};

// Distribution over domain x labels with finite support.
class DiscreteDistribution {
 public:
  static constexpr double kNormalizationTolerance = 1e-12;

  DiscreteDistribution() = default;
  // Throws DomainError on negative weights or a total off 1 by more than
  // kNormalizationTolerance.
  explicit DiscreteDistribution(std::vector<WeightedPair> support);

  const std::vector<WeightedPair>& support() const { return support_; }

  LabeledPoint draw(std::mt19937_64& rng) const;
  Sample draw_sample(std::size_t n, std::mt19937_64& rng) const;

 private:
  std::vector<WeightedPair> support_;
  std::vector<double> cumulative_;
};

// Uniform double in [0, 1) from the top 53 bits of one engine output; gives
// identical streams across standard library implementations.
double unit_uniform(std::mt19937_64& rng);
// Uniform integer in [0, n) by rejection; portable like unit_uniform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

ConceptClass restrict(const ConceptClass& cls, std::span<const PointIndex> subset);

Rational empirical_loss(const ListHypothesis& h, const Sample& s);
// Undefined points count as misses.
Rational empirical_loss(const ListConcept& c, const Sample& s);
// Number of pairs (x, y) with y outside c(x) or x outside the support.
std::size_t miss_count(const ListConcept& c, const Sample& s);
std::size_t miss_count(const ListHypothesis& h, const Sample& s);

double population_loss(const ListHypothesis& h, const DiscreteDistribution& d);
double population_loss(const ListConcept& c, const DiscreteDistribution& d);

bool realizes(const ListConcept& c, const Sample& s);

struct Realizability {
  bool realizable = false;
  std::optional<std::size_t> witness;  // index into the class
};

Realizability is_realizable(const Sample& s, const ConceptClass& cls);

// Longest subsequence of s realizable by the class; ties go to the earliest
// concept in class order.
Sample max_realizable_subsample(const Sample& s, const ConceptClass& cls);

// Minimum empirical loss over the class (the agnostic benchmark).
Rational min_empirical_loss(const ConceptClass& cls, const Sample& s);

}  // namespace listcomb
