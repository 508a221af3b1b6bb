#include "listcomb/covers.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "listcomb/dims.hpp"

namespace listcomb {

namespace {

// Per-point label sets of the concepts assigned to each open group.
class GroupState {
 public:
  GroupState(const std::vector<std::vector<std::int64_t>>& labels, std::size_t points, std::size_t k)
      : labels_(labels), points_(points), k_(k) {}

  std::size_t groups() const { return sets_.size(); }

  void open() { sets_.emplace_back(points_); }
  void close() { sets_.pop_back(); }

  // Adds concept c to group g when compatible; returns false (and leaves
  // the group untouched) otherwise.
  bool add(std::size_t g, std::size_t c) {
    auto& group = sets_[g];
    const std::size_t mark = log_.size();
    for (std::size_t x = 0; x < points_; ++x) {
      const std::int64_t y = labels_[c][x];
      if (y < 0) continue;
      auto& set = group[x];
      if (std::find(set.begin(), set.end(), static_cast<LabelIndex>(y)) != set.end()) continue;
      if (set.size() == k_) {
        undo_to(g, mark);
        return false;
      }
      set.push_back(static_cast<LabelIndex>(y));
      log_.push_back(x);
    }
    marks_.push_back(mark);
    return true;
  }

  void remove_last(std::size_t g) {
    undo_to(g, marks_.back());
    marks_.pop_back();
  }

 private:
  void undo_to(std::size_t g, std::size_t mark) {
    while (log_.size() > mark) {
      sets_[g][log_.back()].pop_back();
      log_.pop_back();
    }
  }

  const std::vector<std::vector<std::int64_t>>& labels_;
  std::size_t points_;
  std::size_t k_;
  std::vector<std::vector<LabelSet>> sets_;
  std::vector<std::size_t> log_;
  std::vector<std::size_t> marks_;
};

std::vector<std::vector<std::int64_t>> label_table(const ConceptClass& cls) {
  std::vector<std::vector<std::int64_t>> table(cls.size(), std::vector<std::int64_t>(cls.domain().size(), -1));
  for (std::size_t c = 0; c < cls.size(); ++c)
    for (PointIndex x = 0; x < cls.domain().size(); ++x)
      if (cls[c].defined(x)) table[c][x] = cls[c].label(x);
  return table;
}

std::vector<std::vector<std::size_t>> groups_from(const std::vector<std::size_t>& assignment, std::size_t count) {
  std::vector<std::vector<std::size_t>> groups(count);
  for (std::size_t c = 0; c < assignment.size(); ++c) groups[assignment[c]].push_back(c);
  return groups;
}

CoverResult finish(const ConceptClass& cls, std::size_t k, std::vector<std::size_t> assignment, std::size_t count,
                   bool optimal) {
  // Renumber groups by their first concept so output order is canonical.
  std::vector<std::size_t> rename(count, count);
  std::size_t next = 0;
  for (auto& a : assignment) {
    if (rename[a] == count) rename[a] = next++;
    a = rename[a];
  }
  CoverResult r;
  r.size = count;
  r.optimal = optimal;
  for (const auto& group : groups_from(assignment, count)) r.hypotheses.push_back(group_hypothesis(cls, group, k));
  r.assignment = std::move(assignment);
  return r;
}

std::vector<std::size_t> greedy_assignment(const std::vector<std::vector<std::int64_t>>& labels, std::size_t points,
                                           std::size_t k, std::size_t& count) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> assignment(n, n);
  GroupState state(labels, points, k);
  count = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (assignment[c] != n) continue;
    state.open();
    state.add(count, c);
    assignment[c] = count;
    for (std::size_t o = c + 1; o < n; ++o)
      if (assignment[o] == n && state.add(count, o)) assignment[o] = count;
    ++count;
  }
  return assignment;
}

class ExactCover {
 public:
  ExactCover(const std::vector<std::vector<std::int64_t>>& labels, std::size_t points, std::size_t k,
             std::vector<std::size_t> order, std::size_t upper, std::size_t lower)
      : state_(labels, points, k), order_(std::move(order)), best_(upper), lower_(lower),
        current_(labels.size(), 0) {}

  bool run() {
    search(0);
    return improved_;
  }
  std::size_t best() const { return best_; }
  const std::vector<std::size_t>& assignment() const { return best_assignment_; }

 private:
  bool search(std::size_t i) {
    if (state_.groups() >= best_) return false;
    if (i == order_.size()) {
      best_ = state_.groups();
      best_assignment_ = current_;
      improved_ = true;
      return best_ <= lower_;
    }
    const std::size_t c = order_[i];
    for (std::size_t g = 0; g < state_.groups(); ++g) {
      if (!state_.add(g, c)) continue;
      current_[c] = g;
      const bool done = search(i + 1);
      state_.remove_last(g);
      if (done) return true;
    }
    if (state_.groups() + 1 < best_) {
      const std::size_t g = state_.groups();
      state_.open();
      state_.add(g, c);
      current_[c] = g;
      const bool done = search(i + 1);
      state_.remove_last(g);
      state_.close();
      if (done) return true;
    }
    return false;
  }

  GroupState state_;
  std::vector<std::size_t> order_;
  std::size_t best_;
  std::size_t lower_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_assignment_;
  bool improved_ = false;
};

LabelSet pad(LabelSet set, std::size_t k, std::size_t label_count) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (LabelIndex y = 0; set.size() < k && y < label_count; ++y)
    if (!std::binary_search(set.begin(), set.end(), y)) set.insert(std::upper_bound(set.begin(), set.end(), y), y);
  if (set.size() > k) set.resize(k);
  return set;
}

void push_unique(std::vector<ListHypothesis>& out, std::unordered_set<ListHypothesis, ListHypothesisHash>& seen,
                 ListHypothesis h) {
  if (seen.insert(h).second) out.push_back(std::move(h));
}

void require_one_list(const ConceptClass& cls, const char* what) {
  if (cls.k() != 1) throw UnsupportedClassError(std::string(what) + " needs a 1-list class");
}

// Core of the direct-sum extraction with F over U (k) and G over V (k').
ProductCoverExtraction extract(const ConceptClass& f, const ConceptClass& g, const std::vector<ListHypothesis>& hs,
                               const ProductLayout& layout, std::size_t k, std::size_t kp) {
  const std::size_t nu = f.domain().size();
  const std::size_t nv = g.domain().size();
  const std::size_t my = f.labels().size();
  const std::size_t mz = g.labels().size();
  ProductCoverExtraction out;

  auto covered = [&](const ListHypothesis& h, const ListConcept& fc, const ListConcept& gc) {
    for (PointIndex u = 0; u < nu; ++u) {
      if (!fc.defined(u)) continue;
      for (PointIndex v = 0; v < nv; ++v) {
        if (gc.defined(v) && !h.contains(layout.point(u, v), layout.label(fc.label(u), gc.label(v)))) return false;
      }
    }
    return true;
  };
  // h_{g,v}(u) = { y : (y, g(v)) in h(u, v) }.
  auto slice = [&](const ListHypothesis& h, PointIndex u, PointIndex v, LabelIndex z) {
    LabelSet ys;
    for (LabelIndex l : h.value(layout.point(u, v))) {
      const auto [y, zz] = layout.split_label(l);
      if (zz == z) ys.push_back(y);
    }
    return ys;
  };

  for (std::size_t gi = 0; gi < g.size(); ++gi) {
    const ListConcept& gc = g[gi];
    std::vector<PointIndex> supp;
    for (PointIndex v = 0; v < nv; ++v)
      if (gc.defined(v)) supp.push_back(v);
    bool good = true;
    std::vector<bool> used(hs.size(), false);
    for (std::size_t hi = 0; hi < hs.size() && good; ++hi) {
      for (const auto& fc : f) {
        if (!covered(hs[hi], fc, gc)) continue;
        used[hi] = true;
        for (PointIndex u = 0; u < nu && good; ++u) {
          if (!fc.defined(u)) continue;
          good = std::any_of(supp.begin(), supp.end(),
                             [&](PointIndex v) { return slice(hs[hi], u, v, gc.label(v)).size() <= k; });
        }
        if (!good) break;
      }
    }
    if (!good) continue;

    out.side = Side::kLeft;
    out.good_concept = gi;
    std::unordered_set<ListHypothesis, ListHypothesisHash> seen;
    for (std::size_t hi = 0; hi < hs.size(); ++hi) {
      if (!used[hi]) continue;
      std::vector<LabelSet> values(nu);
      for (PointIndex u = 0; u < nu; ++u) {
        LabelSet meet(my);
        std::iota(meet.begin(), meet.end(), LabelIndex{0});
        for (PointIndex v : supp) {
          const LabelSet ys = slice(hs[hi], u, v, gc.label(v));
          LabelSet next;
          std::set_intersection(meet.begin(), meet.end(), ys.begin(), ys.end(), std::back_inserter(next));
          meet = std::move(next);
        }
        values[u] = pad(std::move(meet), k, my);
      }
      push_unique(out.cover, seen, ListHypothesis(k, std::move(values)));
    }
    return out;
  }

  // No good concept: project every (h, u) onto the right factor.
  out.side = Side::kRight;
  std::unordered_set<ListHypothesis, ListHypothesisHash> seen;
  for (const auto& h : hs) {
    for (PointIndex u = 0; u < nu; ++u) {
      std::vector<LabelSet> values(nv);
      for (PointIndex v = 0; v < nv; ++v) {
        LabelSet zs;
        for (LabelIndex l : h.value(layout.point(u, v))) zs.push_back(layout.split_label(l).second);
        std::sort(zs.begin(), zs.end());
        zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
        if (zs.size() > kp) zs.clear();
        values[v] = pad(std::move(zs), kp, mz);
      }
      push_unique(out.cover, seen, ListHypothesis(kp, std::move(values)));
    }
  }
  return out;
}

}  // namespace

ListHypothesis group_hypothesis(const ConceptClass& cls, std::span<const std::size_t> group, std::size_t k) {
  std::vector<LabelSet> values(cls.domain().size());
  for (PointIndex x = 0; x < cls.domain().size(); ++x) {
    LabelSet set;
    for (std::size_t c : group)
      if (cls[c].defined(x)) set.push_back(cls[c].label(x));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.size() > k) throw InvalidCoverError("group is not k-compatible");
    values[x] = pad(std::move(set), k, cls.labels().size());
  }
  return ListHypothesis(k, std::move(values));
}

CoverResult min_cover(const ConceptClass& cls, std::size_t k, CoverMode mode, const Caps& caps) {
  require_one_list(cls, "min_cover");
  if (k == 0 || k > cls.labels().size()) throw DomainError("cover list size must lie in [1, |Y|]");
  const std::size_t n = cls.size();
  const std::size_t points = cls.domain().size();
  if (n == 0) return CoverResult{{}, 0, true, {}};
  if (mode == CoverMode::kExact && n > caps.exact_cover)
    throw CapacityError("exact cover is capped at " + std::to_string(caps.exact_cover) + " concepts, class has " +
                        std::to_string(n));
  const auto labels = label_table(cls);

  std::size_t greedy_count = 0;
  auto greedy = greedy_assignment(labels, points, k, greedy_count);

  // Lower bounds: labels per point, and a greedy clique of pairwise
  // incompatible concepts (which must sit in distinct groups).
  std::size_t lower = 1;
  for (std::size_t x = 0; x < points; ++x) {
    std::vector<std::int64_t> seen;
    for (std::size_t c = 0; c < n; ++c)
      if (labels[c][x] >= 0 && std::find(seen.begin(), seen.end(), labels[c][x]) == seen.end())
        seen.push_back(labels[c][x]);
    lower = std::max(lower, (seen.size() + k - 1) / k);
  }
  std::vector<std::vector<bool>> conflict(n, std::vector<bool>(n, false));
  std::vector<std::size_t> degree(n, 0);
  {
    GroupState probe(labels, points, k);
    probe.open();
    for (std::size_t a = 0; a < n; ++a) {
      probe.add(0, a);
      for (std::size_t b = a + 1; b < n; ++b) {
        if (probe.add(0, b)) {
          probe.remove_last(0);
        } else {
          conflict[a][b] = conflict[b][a] = true;
          ++degree[a];
          ++degree[b];
        }
      }
      probe.remove_last(0);
    }
  }
  std::vector<std::size_t> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), std::size_t{0});
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  std::vector<std::size_t> clique;
  for (std::size_t c : by_degree)
    if (std::all_of(clique.begin(), clique.end(), [&](std::size_t o) { return conflict[c][o]; })) clique.push_back(c);
  lower = std::max(lower, clique.size());

  if (mode == CoverMode::kGreedy || greedy_count <= lower)
    return finish(cls, k, std::move(greedy), greedy_count, greedy_count <= lower);

  std::vector<std::size_t> order = clique;
  for (std::size_t c : by_degree)
    if (std::find(clique.begin(), clique.end(), c) == clique.end()) order.push_back(c);
  ExactCover search(labels, points, k, std::move(order), greedy_count, lower);
  if (!search.run()) return finish(cls, k, std::move(greedy), greedy_count, true);
  return finish(cls, k, search.assignment(), search.best(), true);
}

std::size_t covering_size(const ConceptClass& cls, std::size_t n, std::size_t k, CoverMode mode, const Caps& caps) {
  if (n == 0 || n > cls.domain().size()) throw DomainError("covering size needs 1 <= n <= |X|");
  std::size_t worst = 0;
  for_each_combination(cls.domain().size(), n, [&](std::span<const PointIndex> subset) {
    worst = std::max(worst, min_cover(restrict(cls, subset), k, mode, caps).size);
    return false;
  });
  return worst;
}

ProductCoverExtraction cover_from_product_cover(const ConceptClass& f, const ConceptClass& g,
                                                const std::vector<ListHypothesis>& h, std::size_t k,
                                                std::size_t k_prime) {
  require_one_list(f, "cover_from_product_cover");
  require_one_list(g, "cover_from_product_cover");
  if (k == 0 || k > f.labels().size() || k_prime == 0 || k_prime > g.labels().size())
    throw DomainError("list sizes must fit the factor label spaces");
  const ProductClass fg = product(f, g);
  for (const auto& hyp : h) {
    if (hyp.k() != k + k_prime || hyp.domain_size() != fg.layout.domain.size())
      throw InvalidCoverError("cover hypotheses must be (k+k')-lists over the product domain");
  }
  if (!covers(h, fg.materialized)) throw InvalidCoverError("hypotheses do not cover the product class");

  const std::size_t nu = f.domain().size();
  const std::size_t nv = g.domain().size();
  ProductCoverExtraction out;
  if (nu <= nv) {
    out = extract(f, g, h, fg.layout, k, k_prime);
  } else {
    // Mirror so the projection case pays the smaller factor.
    const ProductLayout mirror = ProductLayout::make(g.domain(), g.labels(), f.domain(), f.labels());
    std::vector<ListHypothesis> transposed;
    transposed.reserve(h.size());
    for (const auto& hyp : h) {
      std::vector<LabelSet> values(nu * nv);
      for (PointIndex u = 0; u < nu; ++u) {
        for (PointIndex v = 0; v < nv; ++v) {
          LabelSet set;
          for (LabelIndex l : hyp.value(fg.layout.point(u, v))) {
            const auto [y, z] = fg.layout.split_label(l);
            set.push_back(mirror.label(z, y));
          }
          std::sort(set.begin(), set.end());
          values[mirror.point(v, u)] = std::move(set);
        }
      }
      transposed.emplace_back(hyp.k(), std::move(values));
    }
    out = extract(g, f, transposed, mirror, k_prime, k);
    out.side = out.side == Side::kLeft ? Side::kRight : Side::kLeft;
  }
  out.bound = std::min(nu, nv) * h.size();
  const bool ok = out.side == Side::kLeft ? covers(out.cover, f) : covers(out.cover, g);
  if (!ok) throw InvalidCoverError("extracted cover failed re-verification");
  return out;
}

DisambiguationCoverExtraction cover_from_minimal_disambiguation(const ConceptClass& f,
                                                                const std::vector<ListHypothesis>& hbar,
                                                                std::size_t k) {
  require_one_list(f, "cover_from_minimal_disambiguation");
  const std::size_t m = f.labels().size();
  if (k == 0 || k > m) throw DomainError("list size must lie in [1, |Y|]");
  const ConceptClass fbar = minimal_disambiguation(f);
  const auto star = minimal_star_index(f, fbar);
  for (const auto& h : hbar) {
    if (h.k() != k + 1 || h.domain_size() != f.domain().size())
      throw InvalidCoverError("disambiguation cover must consist of (k+1)-lists over the domain");
  }
  if (!covers(hbar, fbar)) throw InvalidCoverError("hypotheses do not cover the minimal disambiguation");

  auto complete = [&](const ListConcept& c) {
    std::vector<ListConcept::Value> values = c.values();
    for (auto& v : values)
      if (!v) v = LabelSet{*star};
    return ListConcept(1, std::move(values));
  };
  // A_y = {y} plus the k-1 smallest other labels.
  std::vector<LabelSet> a(m);
  for (LabelIndex y = 0; y < m; ++y) a[y] = pad(LabelSet{y}, k, m);

  const std::size_t n = f.domain().size();
  DisambiguationCoverExtraction out;
  std::unordered_set<ListHypothesis, ListHypothesisHash> seen;
  for (const auto& h : hbar) {
    std::vector<bool> in_x(n);
    for (PointIndex x = 0; x < n; ++x) in_x[x] = !star || !h.contains(x, *star);
    std::vector<std::vector<LabelIndex>> restrictions;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!covers(h, complete(f[i]))) continue;
      std::vector<LabelIndex> key;
      for (PointIndex x = 0; x < n; ++x)
        if (in_x[x]) key.push_back(f[i].label(x));  // defined: y* is not listed on X_h
      if (std::find(restrictions.begin(), restrictions.end(), key) != restrictions.end()) continue;
      restrictions.push_back(key);
      std::vector<LabelSet> values(n);
      std::size_t pos = 0;
      for (PointIndex x = 0; x < n; ++x) {
        if (in_x[x]) {
          values[x] = a[key[pos++]];
        } else {
          for (LabelIndex y : h.value(x))
            if (y != *star) values[x].push_back(y);
        }
      }
      push_unique(out.cover, seen, ListHypothesis(k, std::move(values)));
    }
  }
  out.d = ds_dimension(f, 1).value;
  out.bound = power(BigInt(m * n), out.d) * BigInt(hbar.size());
  if (!covers(out.cover, f)) throw InvalidCoverError("extracted cover failed re-verification");
  return out;
}

CompressionCoverExtraction cover_from_compression(const CompressionScheme& scheme, const ConceptClass& cls,
                                                  std::span<const PointIndex> subset) {
  if (!scheme.fixed_size) throw InvalidSchemeError("cover extraction needs a fixed-size scheme");
  const ConceptClass restricted = restrict(cls, subset);
  const std::size_t n = subset.size();
  const std::size_t m = cls.labels().size();
  const std::size_t d = *scheme.fixed_size;
  CompressionCoverExtraction out;
  out.d = d;
  out.bound = power(BigInt(n * m), d);
  if (out.bound > BigInt(1'000'000)) throw CapacityError("compression cover enumeration exceeds 10^6 sequences");
  const std::size_t count = out.bound.convert_to<std::size_t>();

  std::unordered_set<ListHypothesis, ListHypothesisHash> seen;
  std::vector<std::size_t> digits(d, 0);
  Sample seq(d);
  for (std::size_t idx = 0; idx < count; ++idx) {
    for (std::size_t i = 0; i < d; ++i)
      seq[i] = {subset[digits[i] / m], static_cast<LabelIndex>(digits[i] % m)};
    const ListHypothesis full = scheme.reconstruct(seq);
    std::vector<LabelSet> values;
    values.reserve(n);
    for (PointIndex x : subset) values.push_back(full.value(x));
    push_unique(out.cover, seen, ListHypothesis(full.k(), std::move(values)));
    for (std::size_t i = d; i-- > 0;) {
      if (++digits[i] < n * m) break;
      digits[i] = 0;
    }
  }
  if (!covers(out.cover, restricted)) throw InvalidSchemeError("reconstructions do not cover the restricted class");
  return out;
}

}  // namespace listcomb
