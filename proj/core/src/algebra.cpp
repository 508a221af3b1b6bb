#include "listcomb/algebra.hpp"

#include <algorithm>

namespace listcomb {

namespace {

bool needs_escape(char ch) { return ch == '\\' || ch == '|' || ch == '(' || ch == ')'; }

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (needs_escape(ch)) out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

std::string fresh_label(const LabelSpace& labels, const std::vector<std::string>& taken, std::string base) {
  auto used = [&](const std::string& name) {
    return labels.find(name).has_value() || std::find(taken.begin(), taken.end(), name) != taken.end();
  };
  if (!used(base)) return base;
  for (std::size_t counter = 1;; ++counter) {
    std::string candidate = base + "_" + std::to_string(counter);
    if (!used(candidate)) return candidate;
  }
}

bool has_undefined(const ListConcept& c) { return !c.is_total(); }

void require_one_list(const ConceptClass& c, const char* what) {
  if (c.k() != 1) throw UnsupportedClassError(std::string(what) + " is defined for 1-list classes");
}

}  // namespace

std::string encode_pair(const std::string& left, const std::string& right) {
  return "(" + escape(left) + "|" + escape(right) + ")";
}

std::pair<std::string, std::string> decode_pair(const std::string& encoded) {
  auto bad = [&] { return FormatError("malformed pair identifier '" + encoded + "'"); };
  if (encoded.size() < 3 || encoded.front() != '(' || encoded.back() != ')') throw bad();
  std::string parts[2];
  int part = 0;
  for (std::size_t i = 1; i + 1 < encoded.size(); ++i) {
    const char ch = encoded[i];
    if (ch == '\\') {
      if (i + 2 >= encoded.size() || !needs_escape(encoded[i + 1])) throw bad();
      parts[part].push_back(encoded[++i]);
    } else if (ch == '|') {
      if (part == 1) throw bad();
      part = 1;
    } else if (ch == '(' || ch == ')') {
      throw bad();
    } else {
      parts[part].push_back(ch);
    }
  }
  if (part != 1) throw bad();
  return {parts[0], parts[1]};
}

ProductLayout ProductLayout::make(const Domain& u, const LabelSpace& y, const Domain& v, const LabelSpace& z) {
  std::vector<std::string> points;
  points.reserve(u.size() * v.size());
  for (const auto& a : u.names())
    for (const auto& b : v.names()) points.push_back(encode_pair(a, b));
  std::vector<std::string> labels;
  labels.reserve(y.size() * z.size());
  for (const auto& a : y.names())
    for (const auto& b : z.names()) labels.push_back(encode_pair(a, b));
  return {u, v, Domain(std::move(points)), y, z, LabelSpace(std::move(labels))};
}

ListConcept product_concept(const ListConcept& f, const ListConcept& g, const ProductLayout& layout) {
  std::vector<ListConcept::Value> values;
  values.reserve(f.domain_size() * g.domain_size());
  for (PointIndex u = 0; u < f.domain_size(); ++u) {
    for (PointIndex v = 0; v < g.domain_size(); ++v) {
      const auto& fu = f.value(u);
      const auto& gv = g.value(v);
      if (!fu || !gv) {
        values.emplace_back(std::nullopt);
        continue;
      }
      LabelSet set;
      set.reserve(fu->size() * gv->size());
      for (LabelIndex y : *fu)
        for (LabelIndex z : *gv) set.push_back(layout.label(y, z));
      values.emplace_back(std::move(set));
    }
  }
  std::string name;
  if (!f.name().empty() || !g.name().empty()) name = encode_pair(f.name(), g.name());
  return ListConcept(f.k() * g.k(), std::move(values), std::move(name));
}

ListHypothesis product_hypothesis(const ListHypothesis& h1, const ListHypothesis& h2,
                                  const ProductLayout& layout) {
  return ListHypothesis::from_concept(product_concept(h1.to_concept(), h2.to_concept(), layout));
}

ProductClass product(const ConceptClass& a, const ConceptClass& b, const Caps& caps) {
  const std::size_t points = a.domain().size() * b.domain().size();
  if (points > caps.product_domain)
    throw CapacityError("product domain has " + std::to_string(points) + " points, cap is " +
                        std::to_string(caps.product_domain));
  if (a.size() * b.size() > caps.product_concepts)
    throw CapacityError("product class has " + std::to_string(a.size() * b.size()) + " concepts, cap is " +
                        std::to_string(caps.product_concepts));
  ProductClass out{a, b, {}, ProductLayout::make(a.domain(), a.labels(), b.domain(), b.labels()), {}};
  std::vector<ListConcept> concepts;
  concepts.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      concepts.push_back(product_concept(a[i], b[j], out.layout));
      out.factors.emplace_back(i, j);
    }
  }
  std::string name;
  if (!a.name().empty() || !b.name().empty()) name = encode_pair(a.name(), b.name());
  out.materialized = ConceptClass(out.layout.domain, out.layout.labels, a.k() * b.k(), std::move(concepts),
                                  std::move(name));
  if (out.materialized.size() != out.factors.size()) {
    // Partial concepts can collide (e.g. two pairs undefined everywhere);
    // keep the first pair for each surviving concept.
    std::vector<std::pair<std::size_t, std::size_t>> kept;
    std::size_t next = 0;
    for (std::size_t idx = 0; idx < out.factors.size() && next < out.materialized.size(); ++idx) {
      const auto [i, j] = out.factors[idx];
      if (product_concept(a[i], b[j], out.layout) == out.materialized[next]) {
        kept.push_back(out.factors[idx]);
        ++next;
      }
    }
    out.factors = std::move(kept);
  }
  return out;
}

ConceptClass power(const ConceptClass& a, std::size_t r, const Caps& caps) {
  if (r == 0) throw DomainError("power needs r >= 1");
  ConceptClass acc = a;
  for (std::size_t i = 1; i < r; ++i) acc = product(acc, a, caps).materialized;
  return acc;
}

ConceptClass free_disambiguation(const ConceptClass& c) {
  require_one_list(c, "free disambiguation");
  std::vector<std::string> names = c.labels().names();
  std::vector<std::string> fresh;
  std::vector<ListConcept> concepts;
  concepts.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ListConcept& f = c[i];
    if (!has_undefined(f)) {
      concepts.push_back(f);
      continue;
    }
    const std::string label = fresh_label(c.labels(), fresh, "ŷ#" + std::to_string(i));
    fresh.push_back(label);
    const auto y = static_cast<LabelIndex>(names.size());
    names.push_back(label);
    std::vector<ListConcept::Value> values = f.values();
    for (auto& v : values)
      if (!v) v = LabelSet{y};
    concepts.emplace_back(1, std::move(values), f.name());
  }
  return ConceptClass(c.domain(), LabelSpace(std::move(names)), 1, std::move(concepts), c.name());
}

ConceptClass minimal_disambiguation(const ConceptClass& c) {
  require_one_list(c, "minimal disambiguation");
  if (c.is_total()) return c;
  std::vector<std::string> names = c.labels().names();
  const auto star = static_cast<LabelIndex>(names.size());
  names.push_back(fresh_label(c.labels(), {}, kMinimalStarLabel));
  std::vector<ListConcept> concepts;
  concepts.reserve(c.size());
  for (const auto& f : c) {
    std::vector<ListConcept::Value> values = f.values();
    for (auto& v : values)
      if (!v) v = LabelSet{star};
    concepts.emplace_back(1, std::move(values), f.name());
  }
  return ConceptClass(c.domain(), LabelSpace(std::move(names)), 1, std::move(concepts), c.name());
}

std::optional<LabelIndex> minimal_star_index(const ConceptClass& original, const ConceptClass& disambiguated) {
  if (disambiguated.labels().size() == original.labels().size()) return std::nullopt;
  return static_cast<LabelIndex>(original.labels().size());
}

ConceptClass selection_class(const ConceptClass& c, const Caps& caps) {
  if (!c.is_total()) throw UnsupportedClassError("selection class needs a total class");
  const std::size_t n = c.domain().size();
  std::size_t per = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (per > caps.selection / c.k()) throw CapacityError("selection class exceeds the cap");
    per *= c.k();
  }
  if (c.size() > 0 && per > caps.selection / c.size()) throw CapacityError("selection class exceeds the cap");
  std::vector<ListConcept> concepts;
  concepts.reserve(per * c.size());
  std::vector<std::size_t> digit(n);
  std::vector<LabelIndex> labels(n);
  for (const auto& h : c) {
    std::fill(digit.begin(), digit.end(), 0);
    for (std::size_t idx = 0; idx < per; ++idx) {
      for (std::size_t x = 0; x < n; ++x) labels[x] = (*h.value(static_cast<PointIndex>(x)))[digit[x]];
      concepts.push_back(ListConcept::from_labels(labels));
      for (std::size_t x = n; x-- > 0;) {
        if (++digit[x] < c.k()) break;
        digit[x] = 0;
      }
    }
  }
  return ConceptClass(c.domain(), c.labels(), 1, std::move(concepts), c.name());
}

bool covers(const ListHypothesis& h, const ListConcept& c) {
  if (h.domain_size() != c.domain_size()) return false;
  for (PointIndex x = 0; x < c.domain_size(); ++x) {
    const auto& v = c.value(x);
    if (!v) continue;
    for (LabelIndex y : *v)
      if (!h.contains(x, y)) return false;
  }
  return true;
}

bool covers(const std::vector<ListHypothesis>& hs, const ListConcept& c) {
  return std::any_of(hs.begin(), hs.end(), [&](const ListHypothesis& h) { return covers(h, c); });
}

bool covers(const std::vector<ListHypothesis>& hs, const ConceptClass& cls) {
  return std::all_of(cls.begin(), cls.end(), [&](const ListConcept& c) { return covers(hs, c); });
}

bool covers(const ConceptClass& hs, const ConceptClass& cls) {
  std::vector<ListHypothesis> hyps;
  hyps.reserve(hs.size());
  for (const auto& h : hs) hyps.push_back(ListHypothesis::from_concept(h));
  return covers(hyps, cls);
}

Sample project_left(const Sample& s, const ProductLayout& layout) {
  Sample out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back({layout.split_point(p.point).first, layout.split_label(p.label).first});
  return out;
}

Sample project_right(const Sample& s, const ProductLayout& layout) {
  Sample out;
  out.reserve(s.size());
  for (const auto& p : s)
    out.push_back({layout.split_point(p.point).second, layout.split_label(p.label).second});
  return out;
}

std::pair<Sample, Sample> project_by_name(const Sample& s, const ProductLayout& layout) {
  auto lookup = [](const detail::Identifiers& ids, const std::string& name) {
    auto idx = ids.find(name);
    if (!idx) throw FormatError("pair component '" + name + "' is not a known identifier");
    return *idx;
  };
  std::pair<Sample, Sample> out;
  out.first.reserve(s.size());
  out.second.reserve(s.size());
  for (const auto& p : s) {
    if (p.point >= layout.domain.size() || p.label >= layout.labels.size())
      throw IndexError("sample index outside the product spaces");
    const auto [u, v] = decode_pair(layout.domain.name(p.point));
    const auto [y, z] = decode_pair(layout.labels.name(p.label));
    out.first.push_back({lookup(layout.left_domain, u), lookup(layout.left_labels, y)});
    out.second.push_back({lookup(layout.right_domain, v), lookup(layout.right_labels, z)});
  }
  return out;
}

LearningRule product_learner(const LearningRule& a1, const LearningRule& a2, const ProductLayout& layout) {
  LearningRule rule;
  rule.name = a1.name + "x" + a2.name;
  rule.k = a1.k * a2.k;
  rule.exact = a1.exact && a2.exact;
  rule.apply = [a1, a2, layout](const Sample& s) {
    const auto [left, right] = project_by_name(s, layout);
    return product_hypothesis(a1(left), a2(right), layout);
  };
  return rule;
}

}  // namespace listcomb
