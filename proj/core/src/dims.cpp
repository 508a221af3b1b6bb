#include "listcomb/dims.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace listcomb {

PseudoCubeResult max_pseudocube(std::span<const LabelTuple> tuples, std::size_t k) {
  if (k == 0) throw DomainError("pseudo-cube rank must be at least 1");
  PseudoCubeResult result;
  if (tuples.empty()) return result;
  const std::size_t n = tuples.front().size();
  if (n == 0) throw ArityError("label tuples must have arity at least 1");
  LabelIndex max_label = 0;
  for (const auto& t : tuples) {
    if (t.size() != n) throw ArityError("label tuples of mixed arity");
    for (LabelIndex y : t) max_label = std::max(max_label, y);
  }
  const TupleCodec codec(n, static_cast<std::size_t>(max_label) + 1);

  std::vector<std::uint64_t> codes;
  codes.reserve(tuples.size());
  for (const auto& t : tuples) codes.push_back(codec.encode(t));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  const std::size_t count = codes.size();

  // line_of[t * n + i]: the direction-i line (tuples agreeing off coordinate i)
  // containing tuple t. Degree of t in direction i is the line size minus one.
  std::vector<std::size_t> line_of(count * n);
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> alive_in_line;
  for (std::size_t i = 0; i < n; ++i) {
    std::unordered_map<std::uint64_t, std::size_t> line_ids;
    for (std::size_t t = 0; t < count; ++t) {
      const std::uint64_t key = codes[t] - codec.digit(codes[t], i) * codec.weight(i);
      auto [it, inserted] = line_ids.emplace(key, members.size());
      if (inserted) {
        members.emplace_back();
        alive_in_line.push_back(0);
      }
      members[it->second].push_back(t);
      ++alive_in_line[it->second];
      line_of[t * n + i] = it->second;
    }
  }

  std::vector<bool> alive(count, true);
  std::vector<bool> queued(count, false);
  std::deque<std::size_t> queue;
  auto deficient = [&](std::size_t t) {
    for (std::size_t i = 0; i < n; ++i) {
      if (alive_in_line[line_of[t * n + i]] < k + 1) return true;
    }
    return false;
  };
  for (std::size_t t = 0; t < count; ++t) {
    if (deficient(t)) {
      queued[t] = true;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    const std::size_t t = queue.front();
    queue.pop_front();
    alive[t] = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t line = line_of[t * n + i];
      --alive_in_line[line];
      if (alive_in_line[line] >= k + 1) continue;
      for (std::size_t u : members[line]) {
        if (alive[u] && !queued[u]) {
          queued[u] = true;
          queue.push_back(u);
        }
      }
    }
  }

  for (std::size_t t = 0; t < count; ++t) {
    if (alive[t]) result.subset.push_back(codec.decode(codes[t]));
  }
  std::sort(result.subset.begin(), result.subset.end());
  result.rank = result.subset.empty() ? 0 : k;
  return result;
}

namespace {

std::size_t size_cap(const ConceptClass& cls, SearchLimits limits) {
  const std::size_t n = cls.domain().size();
  return limits.max_size == 0 ? n : std::min(n, limits.max_size);
}

void require_total_one_list(const ConceptClass& cls, const char* what) {
  if (cls.k() != 1) throw UnsupportedClassError(std::string(what) + " requires a 1-list class");
  if (!cls.is_total()) throw UnsupportedClassError(std::string(what) + " requires a total class");
}

// Graph shattering search on one subset: pick pivots coordinate by coordinate
// and keep only branches in which the membership patterns so far are all
// distinct prefixes of a full cube.
class GraphSearch {
 public:
  GraphSearch(const ConceptClass& cls, std::span<const PointIndex> subset)
      : cls_(cls), subset_(subset), concepts_(concepts_total_on(cls, subset)) {}

  std::optional<ShatterWitness> run() {
    const std::size_t n = subset_.size();
    if (n >= 63 || concepts_.size() < (std::size_t{1} << n)) return std::nullopt;
    candidates_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      // A pivot label only matters through membership; labels present in
      // every list (or in none) give a constant coordinate.
      std::map<LabelIndex, std::size_t> hits;
      for (std::size_t ci : concepts_) {
        for (LabelIndex y : *cls_[ci].value(subset_[i])) ++hits[y];
      }
      for (auto [y, h] : hits) {
        if (h < concepts_.size()) candidates_[i].push_back(y);
      }
      if (candidates_[i].empty()) return std::nullopt;
    }
    patterns_.assign(concepts_.size(), 0);
    pivot_.assign(n, 0);
    if (!extend(0)) return std::nullopt;

    ShatterWitness w;
    w.points.assign(subset_.begin(), subset_.end());
    w.pivot = pivot_;
    w.selectors.assign(std::size_t{1} << n, 0);
    std::vector<bool> filled(w.selectors.size(), false);
    for (std::size_t j = 0; j < concepts_.size(); ++j) {
      if (!filled[patterns_[j]]) {
        filled[patterns_[j]] = true;
        w.selectors[patterns_[j]] = concepts_[j];
      }
    }
    return w;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == subset_.size()) return true;
    const PointIndex x = subset_[depth];
    const std::vector<std::uint64_t> saved = patterns_;
    for (LabelIndex y : candidates_[depth]) {
      std::vector<bool> seen(std::size_t{1} << (depth + 1), false);
      std::size_t distinct = 0;
      for (std::size_t j = 0; j < concepts_.size(); ++j) {
        const bool member = cls_[concepts_[j]].contains(x, y);
        patterns_[j] = saved[j] | (static_cast<std::uint64_t>(member) << depth);
        if (!seen[patterns_[j]]) {
          seen[patterns_[j]] = true;
          ++distinct;
        }
      }
      if (distinct == seen.size()) {
        pivot_[depth] = y;
        if (extend(depth + 1)) return true;
      }
    }
    patterns_ = saved;
    return false;
  }

  const ConceptClass& cls_;
  std::span<const PointIndex> subset_;
  std::vector<std::size_t> concepts_;
  std::vector<std::vector<LabelIndex>> candidates_;
  std::vector<std::uint64_t> patterns_;
  LabelTuple pivot_;
};

// Natarajan shattering of a tuple set: the set must contain a product of
// two-element label sets. Peels coordinates one at a time; for a label pair
// (a, b) at the first coordinate the remaining coordinates must be shattered
// by the intersection of the two fibres.
bool natarajan_shatters(const std::vector<LabelTuple>& tuples, std::size_t remaining,
                        std::vector<std::pair<LabelIndex, LabelIndex>>& pairs) {
  if (remaining == 0) return !tuples.empty();
  if (remaining < 63 && tuples.size() < (std::size_t{1} << remaining)) return false;
  std::map<LabelIndex, std::vector<LabelTuple>> fibres;
  for (const auto& t : tuples) fibres[t.front()].emplace_back(t.begin() + 1, t.end());
  for (auto& [label, fibre] : fibres) std::sort(fibre.begin(), fibre.end());
  for (auto a = fibres.begin(); a != fibres.end(); ++a) {
    for (auto b = std::next(a); b != fibres.end(); ++b) {
      std::vector<LabelTuple> common;
      std::set_intersection(a->second.begin(), a->second.end(), b->second.begin(), b->second.end(),
                            std::back_inserter(common));
      pairs.emplace_back(a->first, b->first);
      if (natarajan_shatters(common, remaining - 1, pairs)) return true;
      pairs.pop_back();
    }
  }
  return false;
}

std::optional<std::size_t> concept_with_values(const ConceptClass& cls, std::span<const PointIndex> points,
                                               const LabelTuple& labels) {
  for (std::size_t ci = 0; ci < cls.size(); ++ci) {
    bool match = true;
    for (std::size_t i = 0; i < points.size() && match; ++i)
      match = cls[ci].defined(points[i]) && cls[ci].label(points[i]) == labels[i];
    if (match) return ci;
  }
  return std::nullopt;
}

using Members = std::vector<std::uint64_t>;

struct MembersHash {
  std::size_t operator()(const Members& m) const {
    std::size_t h = 0;
    for (std::uint64_t w : m) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class LittlestoneSolver {
 public:
  explicit LittlestoneSolver(const ConceptClass& cls) : cls_(cls), words_((cls.size() + 63) / 64) {}

  std::size_t solve_all() {
    Members all(words_, 0);
    for (std::size_t i = 0; i < cls_.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    return solve(all);
  }

 private:
  static std::size_t population(const Members& m) {
    std::size_t c = 0;
    for (std::uint64_t w : m) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  std::size_t solve(const Members& members) {
    const std::size_t size = population(members);
    if (size <= 1) return 0;
    if (auto it = memo_.find(members); it != memo_.end()) return it->second;
    // A shattered tree of depth d needs 2^d distinct concepts.
    std::size_t ceiling = 0;
    while ((std::size_t{1} << (ceiling + 1)) <= size) ++ceiling;

    std::size_t best = 0;
    for (PointIndex x = 0; x < cls_.domain().size() && best < ceiling; ++x) {
      std::map<LabelIndex, Members> split;
      for (std::size_t i = 0; i < cls_.size(); ++i) {
        if (!(members[i / 64] >> (i % 64) & 1)) continue;
        auto [it, inserted] = split.try_emplace(cls_[i].label(x), words_, 0);
        it->second[i / 64] |= std::uint64_t{1} << (i % 64);
      }
      if (split.size() < 2) continue;
      // min over a label pair is maximised by the two deepest branches.
      std::size_t first = 0;
      std::size_t second = 0;
      for (const auto& [y, branch] : split) {
        const std::size_t depth = solve(branch);
        if (depth > first) {
          second = first;
          first = depth;
        } else if (depth > second) {
          second = depth;
        }
      }
      best = std::max(best, 1 + second);
    }
    memo_.emplace(members, best);
    return best;
  }

  const ConceptClass& cls_;
  std::size_t words_;
  std::unordered_map<Members, std::size_t, MembersHash> memo_;
};

}  // namespace

DimensionResult ds_dimension(const ConceptClass& cls, std::size_t k, SearchLimits limits) {
  if (k == 0) throw DomainError("DS dimension needs k >= 1");
  DimensionResult result;
  const std::size_t cap = size_cap(cls, limits);
  for (std::size_t n = 1; n <= cap; ++n) {
    std::optional<ShatterWitness> found;
    for_each_combination(cls.domain().size(), n, [&](std::span<const PointIndex> subset) {
      const auto tuples = selection_tuples(cls, subset);
      if (tuples.size() < k + 1) return false;
      auto cube = max_pseudocube(tuples, k);
      if (cube.subset.empty()) return false;
      ShatterWitness w;
      w.points.assign(subset.begin(), subset.end());
      w.cube = std::move(cube.subset);
      found = std::move(w);
      return true;
    });
    if (!found) break;
    result.value = n;
    result.witness = std::move(found);
  }
  return result;
}

DimensionResult graph_dimension(const ConceptClass& cls, SearchLimits limits) {
  DimensionResult result;
  const std::size_t cap = size_cap(cls, limits);
  for (std::size_t n = 1; n <= cap; ++n) {
    std::optional<ShatterWitness> found;
    for_each_combination(cls.domain().size(), n, [&](std::span<const PointIndex> subset) {
      found = GraphSearch(cls, subset).run();
      return found.has_value();
    });
    if (!found) break;
    result.value = n;
    result.witness = std::move(found);
  }
  return result;
}

DimensionResult natarajan_dimension(const ConceptClass& cls, SearchLimits limits) {
  require_total_one_list(cls, "Natarajan dimension");
  DimensionResult result;
  const std::size_t cap = size_cap(cls, limits);
  for (std::size_t n = 1; n <= cap; ++n) {
    std::optional<ShatterWitness> found;
    for_each_combination(cls.domain().size(), n, [&](std::span<const PointIndex> subset) {
      std::vector<std::pair<LabelIndex, LabelIndex>> pairs;
      if (!natarajan_shatters(selection_tuples(cls, subset), n, pairs)) return false;
      ShatterWitness w;
      w.points.assign(subset.begin(), subset.end());
      w.label_pairs = pairs;
      w.selectors.assign(std::size_t{1} << n, 0);
      for (std::size_t b = 0; b < w.selectors.size(); ++b) {
        LabelTuple labels(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = (b >> i & 1) ? pairs[i].second : pairs[i].first;
        w.selectors[b] = *concept_with_values(cls, subset, labels);
      }
      found = std::move(w);
      return true;
    });
    if (!found) break;
    result.value = n;
    result.witness = std::move(found);
  }
  return result;
}

std::size_t littlestone_dimension(const ConceptClass& cls) {
  require_total_one_list(cls, "Littlestone dimension");
  return LittlestoneSolver(cls).solve_all();
}

namespace {

bool valid_points(const ConceptClass& cls, const std::vector<PointIndex>& points) {
  std::set<PointIndex> distinct(points.begin(), points.end());
  return !points.empty() && distinct.size() == points.size() &&
         *distinct.rbegin() < cls.domain().size();
}

}  // namespace

bool validate_graph_witness(const ConceptClass& cls, const ShatterWitness& w) {
  if (!valid_points(cls, w.points) || !w.pivot || w.pivot->size() != w.points.size()) return false;
  const std::size_t n = w.points.size();
  if (n >= 63 || w.selectors.size() != (std::size_t{1} << n)) return false;
  for (std::size_t b = 0; b < w.selectors.size(); ++b) {
    if (w.selectors[b] >= cls.size()) return false;
    const auto& c = cls[w.selectors[b]];
    for (std::size_t i = 0; i < n; ++i) {
      if (!c.defined(w.points[i])) return false;
      if (c.contains(w.points[i], (*w.pivot)[i]) != static_cast<bool>(b >> i & 1)) return false;
    }
  }
  return true;
}

bool validate_ds_witness(const ConceptClass& cls, std::size_t k, const ShatterWitness& w) {
  if (!valid_points(cls, w.points) || w.cube.empty()) return false;
  const std::size_t n = w.points.size();
  for (const auto& t : w.cube) {
    if (t.size() != n) return false;
    const bool realized = std::any_of(cls.begin(), cls.end(), [&](const ListConcept& c) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!c.contains(w.points[i], t[i])) return false;
      }
      return true;
    });
    if (!realized) return false;
  }
  for (const auto& t : w.cube) {
    for (std::size_t i = 0; i < n; ++i) {
      std::set<LabelIndex> neighbours;
      for (const auto& u : w.cube) {
        bool neighbour = u[i] != t[i];
        for (std::size_t j = 0; j < n && neighbour; ++j) neighbour = (j == i) || u[j] == t[j];
        if (neighbour) neighbours.insert(u[i]);
      }
      if (neighbours.size() < k) return false;
    }
  }
  return true;
}

bool validate_natarajan_witness(const ConceptClass& cls, const ShatterWitness& w) {
  if (!valid_points(cls, w.points)) return false;
  const std::size_t n = w.points.size();
  if (w.label_pairs.size() != n || n >= 63 || w.selectors.size() != (std::size_t{1} << n)) return false;
  for (const auto& [a, b] : w.label_pairs) {
    if (a == b) return false;
  }
  for (std::size_t b = 0; b < w.selectors.size(); ++b) {
    if (w.selectors[b] >= cls.size()) return false;
    const auto& c = cls[w.selectors[b]];
    for (std::size_t i = 0; i < n; ++i) {
      const LabelIndex want = (b >> i & 1) ? w.label_pairs[i].second : w.label_pairs[i].first;
      if (!c.defined(w.points[i]) || c.k() != 1 || c.label(w.points[i]) != want) return false;
    }
  }
  return true;
}

}  // namespace listcomb
