#include "listcomb/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace listcomb {

namespace detail {

Identifiers::Identifiers(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto [it, inserted] = index_.emplace(names_[i], static_cast<std::uint32_t>(i));
    if (!inserted) throw FormatError("duplicate identifier '" + names_[i] + "'");
  }
}

std::optional<std::uint32_t> Identifiers::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Identifiers::at(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw IndexError("unknown identifier '" + std::string(name) + "'");
  return *idx;
}

}  // namespace detail

Domain Domain::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Domain(std::move(names));
}

LabelSpace::LabelSpace(std::vector<std::string> labels) : Identifiers(std::move(labels)) {
  if (size() == 0) throw FormatError("label space must contain at least one label");
}

LabelSpace LabelSpace::numbered(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 0; i < m; ++i) names.push_back(std::to_string(i));
  return LabelSpace(std::move(names));
}

ListConcept::ListConcept(std::size_t k, std::vector<Value> values, std::string name)
    : k_(k), values_(std::move(values)), name_(std::move(name)) {
  if (k_ == 0) throw FormatError("list size must be at least 1");
  for (auto& v : values_) {
    if (!v) continue;
    std::sort(v->begin(), v->end());
    if (std::adjacent_find(v->begin(), v->end()) != v->end())
      throw FormatError("list value repeats a label");
    if (v->size() != k_)
      throw FormatError("list value has " + std::to_string(v->size()) + " labels, expected " +
                        std::to_string(k_));
  }
}

ListConcept ListConcept::from_labels(std::span<const LabelIndex> labels, std::string name) {
  std::vector<Value> values;
  values.reserve(labels.size());
  for (LabelIndex y : labels) values.emplace_back(LabelSet{y});
  return ListConcept(1, std::move(values), std::move(name));
}

ListConcept ListConcept::from_partial_labels(std::span<const std::optional<LabelIndex>> labels,
                                             std::string name) {
  std::vector<Value> values;
  values.reserve(labels.size());
  for (const auto& y : labels) {
    if (y) {
      values.emplace_back(LabelSet{*y});
    } else {
      values.emplace_back(std::nullopt);
    }
  }
  return ListConcept(1, std::move(values), std::move(name));
}

bool ListConcept::is_total() const {
  return std::all_of(values_.begin(), values_.end(), [](const Value& v) { return v.has_value(); });
}

bool ListConcept::contains(PointIndex x, LabelIndex y) const {
  const Value& v = values_.at(x);
  return v && std::binary_search(v->begin(), v->end(), y);
}

LabelIndex ListConcept::label(PointIndex x) const {
  const Value& v = values_.at(x);
  if (!v) throw IndexError("concept undefined at point " + std::to_string(x));
  return v->front();
}

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::size_t ListConceptHash::operator()(const ListConcept& c) const {
  std::size_t h = c.k();
  for (const auto& v : c.values()) {
    if (!v) {
      h = hash_combine(h, 0xffffffffULL);
      continue;
    }
    for (LabelIndex y : *v) h = hash_combine(h, y);
    h = hash_combine(h, 0xfffffffeULL);
  }
  return h;
}

ListHypothesis::ListHypothesis(std::size_t k, std::vector<LabelSet> values)
    : k_(k), values_(std::move(values)) {
  if (k_ == 0) throw FormatError("list size must be at least 1");
  for (auto& v : values_) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw FormatError("hypothesis value repeats a label");
    if (v.size() != k_) throw FormatError("hypothesis value has the wrong list size");
  }
}

bool ListHypothesis::contains(PointIndex x, LabelIndex y) const {
  const LabelSet& v = values_.at(x);
  return std::binary_search(v.begin(), v.end(), y);
}

ListConcept ListHypothesis::to_concept(std::string name) const {
  std::vector<ListConcept::Value> values(values_.begin(), values_.end());
  return ListConcept(k_, std::move(values), std::move(name));
}

ListHypothesis ListHypothesis::from_concept(const ListConcept& c) {
  std::vector<LabelSet> values;
  values.reserve(c.domain_size());
  for (const auto& v : c.values()) {
    if (!v) throw UnsupportedClassError("hypotheses must be total");
    values.push_back(*v);
  }
  return ListHypothesis(c.k(), std::move(values));
}

std::size_t ListHypothesisHash::operator()(const ListHypothesis& h) const {
  std::size_t seed = h.k();
  for (const auto& v : h.values()) {
    for (LabelIndex y : v) seed = hash_combine(seed, y);
    seed = hash_combine(seed, 0xfffffffeULL);
  }
  return seed;
}

ConceptClass::ConceptClass(Domain domain, LabelSpace labels, std::size_t k,
                           std::vector<ListConcept> concepts, std::string name)
    : domain_(std::move(domain)), labels_(std::move(labels)), k_(k), name_(std::move(name)) {
  if (k_ == 0) throw FormatError("list size must be at least 1");
  if (k_ > labels_.size())
    throw FormatError("list size " + std::to_string(k_) + " exceeds label count " +
                      std::to_string(labels_.size()));
  std::unordered_set<ListConcept, ListConceptHash> seen;
  concepts_.reserve(concepts.size());
  for (auto& c : concepts) {
    if (c.k() != k_) throw FormatError("concept list size differs from the class list size");
    if (c.domain_size() != domain_.size())
      throw FormatError("concept is defined over a domain of the wrong size");
    for (const auto& v : c.values()) {
      if (v && v->back() >= labels_.size()) throw IndexError("concept uses an unknown label");
    }
    if (seen.insert(c).second) concepts_.push_back(std::move(c));
  }
}

bool ConceptClass::is_total() const {
  return std::all_of(concepts_.begin(), concepts_.end(),
                     [](const ListConcept& c) { return c.is_total(); });
}

void check_sample(const ConceptClass& cls, const Sample& s) {
  for (const auto& p : s) {
    if (p.point >= cls.domain().size()) throw IndexError("sample point index out of range");
    if (p.label >= cls.labels().size()) throw IndexError("sample label index out of range");
  }
}

DiscreteDistribution::DiscreteDistribution(std::vector<WeightedPair> support)
    : support_(std::move(support)) {
  double total = 0.0;
  cumulative_.reserve(support_.size());
  for (const auto& w : support_) {
    if (!(w.probability >= 0.0)) throw DomainError("distribution weights must be nonnegative");
    total += w.probability;
    cumulative_.push_back(total);
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance)
    throw DomainError("distribution weights sum to " + std::to_string(total) + ", expected 1");
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw DomainError("uniform_below requires n > 0");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

LabeledPoint DiscreteDistribution::draw(std::mt19937_64& rng) const {
  if (support_.empty()) throw DomainError("cannot sample from an empty distribution");
  const double u = unit_uniform(rng) * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
  if (i >= support_.size()) i = support_.size() - 1;
  // Skip zero-weight entries that share a cumulative value with a neighbour.
  while (support_[i].probability == 0.0 && i + 1 < support_.size()) ++i;
  return {support_[i].point, support_[i].label};
}

Sample DiscreteDistribution::draw_sample(std::size_t n, std::mt19937_64& rng) const {
  Sample s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.push_back(draw(rng));
  return s;
}

ConceptClass restrict(const ConceptClass& cls, std::span<const PointIndex> subset) {
  if (subset.empty()) throw IndexError("restriction needs a nonempty subset");
  std::vector<bool> used(cls.domain().size(), false);
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (PointIndex x : subset) {
    if (x >= cls.domain().size()) throw IndexError("restriction index out of range");
    if (used[x]) throw IndexError("restriction indices must be distinct");
    used[x] = true;
    names.push_back(cls.domain().name(x));
  }
  std::vector<ListConcept> restricted;
  restricted.reserve(cls.size());
  for (const auto& c : cls) {
    std::vector<ListConcept::Value> values;
    values.reserve(subset.size());
    for (PointIndex x : subset) values.push_back(c.value(x));
    restricted.emplace_back(cls.k(), std::move(values), c.name());
  }
  return ConceptClass(Domain(std::move(names)), cls.labels(), cls.k(), std::move(restricted),
                      cls.name());
}

std::size_t miss_count(const ListConcept& c, const Sample& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [&](const LabeledPoint& p) { return !c.contains(p.point, p.label); }));
}

std::size_t miss_count(const ListHypothesis& h, const Sample& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [&](const LabeledPoint& p) { return !h.contains(p.point, p.label); }));
}

Rational empirical_loss(const ListHypothesis& h, const Sample& s) {
  if (s.empty()) throw EmptySampleError();
  return Rational(static_cast<std::int64_t>(miss_count(h, s)), static_cast<std::int64_t>(s.size()));
}

Rational empirical_loss(const ListConcept& c, const Sample& s) {
  if (s.empty()) throw EmptySampleError();
  return Rational(static_cast<std::int64_t>(miss_count(c, s)), static_cast<std::int64_t>(s.size()));
}

double population_loss(const ListHypothesis& h, const DiscreteDistribution& d) {
  double loss = 0.0;
  for (const auto& w : d.support()) {
    if (!h.contains(w.point, w.label)) loss += w.probability;
  }
  return loss;
}

double population_loss(const ListConcept& c, const DiscreteDistribution& d) {
  double loss = 0.0;
  for (const auto& w : d.support()) {
    if (!c.contains(w.point, w.label)) loss += w.probability;
  }
  return loss;
}

bool realizes(const ListConcept& c, const Sample& s) {
  return std::all_of(s.begin(), s.end(),
                     [&](const LabeledPoint& p) { return c.contains(p.point, p.label); });
}

Realizability is_realizable(const Sample& s, const ConceptClass& cls) {
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (realizes(cls[i], s)) return {true, i};
  }
  return {false, std::nullopt};
}

Sample max_realizable_subsample(const Sample& s, const ConceptClass& cls) {
  std::size_t best_hits = 0;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const std::size_t hits = s.size() - miss_count(cls[i], s);
    if (!best || hits > best_hits) {
      best = i;
      best_hits = hits;
    }
  }
  Sample out;
  if (!best) return out;
  out.reserve(best_hits);
  for (const auto& p : s) {
    if (cls[*best].contains(p.point, p.label)) out.push_back(p);
  }
  return out;
}

Rational min_empirical_loss(const ConceptClass& cls, const Sample& s) {
  if (s.empty()) throw EmptySampleError();
  if (cls.empty()) return Rational(1);
  std::size_t best = s.size();
  for (const auto& c : cls) best = std::min(best, miss_count(c, s));
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(s.size()));
}

}  // namespace listcomb
