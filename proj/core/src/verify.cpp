#include "listcomb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "listcomb/algebra.hpp"
#include "listcomb/combinatorics.hpp"
#include "listcomb/covers.hpp"
#include "listcomb/io.hpp"
#include "listcomb/random.hpp"

namespace listcomb {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string str(const BigInt& v) { return v.str(); }

VerificationReport make(std::string id, const std::string& instance, const BigInt& lhs, const BigInt& rhs, bool pass,
                        Clock::time_point start) {
  return {std::move(id), instance, str(lhs), str(rhs), pass, false, ms_since(start)};
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(uniform_below(rng, hi - lo + 1));
}

LabelSet random_subset(std::mt19937_64& rng, std::size_t m, std::size_t k) {
  std::vector<LabelIndex> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<LabelIndex>(i);
  for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + uniform_below(rng, m - i)]);
  LabelSet out(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::string hash_of(const ConceptClass& cls) {
  const std::string text = io::dump(io::class_to_json(cls));
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string describe(const ConceptClass& cls) {
  return "n=" + std::to_string(cls.domain().size()) + " m=" + std::to_string(cls.labels().size()) +
         " k=" + std::to_string(cls.k()) + " |C|=" + std::to_string(cls.size()) + " #" + hash_of(cls).substr(0, 8);
}

std::string trial_tag(std::size_t t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "t%04zu", t);
  return buf;
}

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

// Shared stream ids: the SSP and graph-vs-DS checks run on one corpus.
std::uint64_t corpus_id(Family f) {
  switch (f) {
    case Family::kSsp:
    case Family::kGraphDs:
      return 0;
    case Family::kCoding:
      return 1;
    case Family::kProductDims:
      return 2;
    case Family::kDirectSum:
      return 3;
    case Family::kDisambiguation:
      return 4;
  }
  return 99;
}

std::size_t least_k_with_zero_ds(const ConceptClass& cls) {
  for (std::size_t k = 1;; ++k)
    if (ds_dimension(cls, k).value == 0) return k;
}

}  // namespace

ConceptClass random_class(std::mt19937_64& rng, const GeneratorLimits& limits, bool partial, std::size_t k) {
  const std::size_t n = pick(rng, 1, limits.max_domain);
  std::size_t m = pick(rng, limits.min_labels, limits.max_labels);
  if (k == 0) k = pick(rng, 1, std::min(limits.max_k, m));
  m = std::max(m, k);
  const std::size_t size = pick(rng, 1, limits.max_class_size);
  std::vector<ListConcept> concepts;
  concepts.reserve(size);
  for (std::size_t c = 0; c < size; ++c) {
    std::vector<ListConcept::Value> values(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (partial && uniform_below(rng, 4) == 0) continue;
      values[x] = random_subset(rng, m, k);
    }
    if (partial && c + 1 == size) {
      const bool any_star = std::any_of(concepts.begin(), concepts.end(), [](const ListConcept& f) {
        return !f.is_total();
      }) || std::any_of(values.begin(), values.end(), [](const auto& v) { return !v.has_value(); });
      if (!any_star) values[uniform_below(rng, n)].reset();
    }
    concepts.emplace_back(k, std::move(values));
  }
  return ConceptClass(Domain::numbered(n), LabelSpace::numbered(m), k, std::move(concepts));
}

ShatteredInstance random_shattered_class(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t k) {
  if (m < k + 1) throw DomainError("shattered construction needs m >= k + 1");
  LabelTuple pivot(n);
  for (auto& p : pivot) p = static_cast<LabelIndex>(uniform_below(rng, m));
  std::vector<ListConcept> concepts;
  const std::size_t patterns = std::size_t{1} << n;
  for (std::size_t b = 0; b < patterns; ++b) {
    std::vector<ListConcept::Value> values(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Draw from the labels other than the pivot, then add the pivot back
      // when bit i is set.
      LabelSet others = random_subset(rng, m - 1, (b >> i & 1) ? k - 1 : k);
      for (auto& y : others)
        if (y >= pivot[i]) ++y;
      if (b >> i & 1) others.push_back(pivot[i]);
      std::sort(others.begin(), others.end());
      values[i] = std::move(others);
    }
    concepts.emplace_back(k, std::move(values));
  }
  ShatteredInstance out{ConceptClass(Domain::numbered(n), LabelSpace::numbered(m), k, concepts), {}};
  // Patterns are distinct, so no concept was dropped by deduplication.
  out.witness.points.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.witness.points[i] = static_cast<PointIndex>(i);
  out.witness.pivot = pivot;
  out.witness.selectors.resize(patterns);
  for (std::size_t b = 0; b < patterns; ++b) out.witness.selectors[b] = b;
  return out;
}

std::vector<VerificationReport> check_ssp(const ConceptClass& cls, const std::string& instance) {
  const auto start = Clock::now();
  if (!cls.is_total()) throw UnsupportedClassError("SSP check needs a total class");
  const std::size_t n = cls.domain().size();
  const std::size_t m = cls.labels().size();
  const std::size_t k = cls.k();
  std::vector<PointIndex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<PointIndex>(i);
  const BigInt size = selection_tuples(cls, all).size();
  const std::size_t d = ds_dimension(cls, k).value;
  BigInt sum = 0;
  const BigInt choose = binomial(m, k + 1);
  for (std::size_t i = 0; i <= d; ++i) sum += binomial(n, i) * power(choose, i);
  const BigInt tight = power(BigInt(k), n - d) * sum;
  const BigInt relaxed = power(BigInt(k), n) * power(BigInt(n), d) * power(BigInt(m), (k + 1) * d);
  const std::string inst = instance + " d=" + std::to_string(d);
  return {make("ssp.tight", inst, size, tight, size <= tight, start),
          make("ssp.relaxed", inst, size, relaxed, size <= relaxed, start)};
}

std::vector<VerificationReport> check_coding_bound(const ConceptClass& cls, const ShatterWitness& witness,
                                                   const std::string& instance) {
  const auto start = Clock::now();
  std::vector<VerificationReport> out;
  const bool valid = validate_graph_witness(cls, witness);
  out.push_back(make("coding.witness", instance, valid ? 1 : 0, 1, valid, start));
  if (!valid) return out;
  const std::size_t n = witness.points.size();
  const std::size_t k = cls.k();
  const std::size_t m = cls.labels().size();
  const std::size_t patterns = witness.selectors.size();
  auto value = [&](std::size_t b, std::size_t i) -> const LabelSet& {
    return *cls[witness.selectors[b]].value(witness.points[i]);
  };

  // Pairwise bound, exact: A_b is a product set so the intersection is the
  // product of coordinatewise intersections.
  BigInt worst_lhs = 0, worst_rhs = 1;
  bool pair_ok = true;
  for (std::size_t b = 0; b < patterns; ++b) {
    for (std::size_t c = b + 1; c < patterns; ++c) {
      BigInt inter = 1;
      for (std::size_t i = 0; i < n; ++i) {
        LabelSet both;
        std::set_intersection(value(b, i).begin(), value(b, i).end(), value(c, i).begin(), value(c, i).end(),
                              std::back_inserter(both));
        inter *= both.size();
      }
      const std::size_t dh = static_cast<std::size_t>(__builtin_popcountll(b ^ c));
      const BigInt lhs = inter * power(BigInt(k), dh);
      const BigInt rhs = power(BigInt(k), n) * power(BigInt(k - 1), dh);
      if (lhs > rhs || (pair_ok && lhs * worst_rhs > worst_lhs * rhs)) {
        worst_lhs = lhs;
        worst_rhs = rhs;
      }
      pair_ok = pair_ok && lhs <= rhs;
    }
  }
  out.push_back(make("coding.pairwise", instance, worst_lhs, worst_rhs, pair_ok, start));

  // Union by enumeration of every A_b.
  const TupleCodec codec(n, m);
  std::set<std::uint64_t> uni;
  LabelTuple tuple(n);
  for (std::size_t b = 0; b < patterns; ++b) {
    std::vector<std::size_t> digit(n, 0);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) tuple[i] = value(b, i)[digit[i]];
      uni.insert(codec.encode(tuple));
      std::size_t i = 0;
      while (i < n && ++digit[i] == k) digit[i++] = 0;
      if (i == n) break;
    }
  }
  const BigInt lhs = 4 * power(BigInt(2 * k - 1), n) * BigInt(uni.size());
  const BigInt rhs = power(BigInt(2 * k), n) * power(BigInt(k), n);
  out.push_back(make("coding.union", instance, lhs, rhs, lhs >= rhs, start));
  return out;
}

VerificationReport check_graph_vs_ds(const ConceptClass& cls, const std::string& instance) {
  const auto start = Clock::now();
  const std::size_t k = cls.k();
  const std::size_t m = cls.labels().size();
  const std::size_t g = graph_dimension(cls).value;
  const std::size_t d = ds_dimension(cls, k).value;
  // g^d with 0^0 = 1.
  const BigInt lhs = 4 * power(BigInt(g), d) * power(BigInt(m), (k + 1) * d) * power(BigInt(2 * k - 1), g);
  const BigInt rhs = power(BigInt(2 * k), g);
  return make("graph-vs-ds", instance + " g=" + std::to_string(g) + " d=" + std::to_string(d), lhs, rhs, lhs >= rhs,
              start);
}

std::vector<VerificationReport> check_product_dimensions(const ConceptClass& f, const ConceptClass& g, std::size_t k,
                                                         std::size_t k_prime, const std::string& instance) {
  auto start = Clock::now();
  const ConceptClass p = product(f, g).materialized;
  std::vector<VerificationReport> out;

  const auto nf = static_cast<long long>(natarajan_dimension(f).value);
  const auto ng = static_cast<long long>(natarajan_dimension(g).value);
  const auto np = static_cast<long long>(natarajan_dimension(p).value);
  out.push_back(make("product.natarajan-lower", instance, nf + ng - 2, np, nf + ng - 2 <= np, start));
  out.push_back(make("product.natarajan-upper", instance, np, nf + ng, np <= nf + ng, start));

  start = Clock::now();
  const auto lf = littlestone_dimension(f);
  const auto lg = littlestone_dimension(g);
  const auto lp = littlestone_dimension(p);
  out.push_back(make("product.littlestone", instance, lp, lf + lg, lp == lf + lg, start));

  start = Clock::now();
  const std::string ks = " k=" + std::to_string(k) + " k'=" + std::to_string(k_prime);
  const auto df = ds_dimension(f, k).value;
  const auto dg = ds_dimension(g, k_prime).value;
  const auto dp_prod = ds_dimension(p, k * k_prime).value;
  out.push_back(make("product.ds-min", instance + ks, dp_prod, std::min(df, dg), dp_prod >= std::min(df, dg), start));
  if (df >= 1 && dg >= 1) {
    start = Clock::now();
    const auto dp_min = ds_dimension(p, std::min(k, k_prime)).value;
    out.push_back(make("product.ds-sum", instance + ks, dp_min, df + dg - 1, dp_min >= df + dg - 1, start));
  }

  start = Clock::now();
  const auto kf = least_k_with_zero_ds(f);
  const auto kg = least_k_with_zero_ds(g);
  const auto kp = least_k_with_zero_ds(p);
  const bool k_ok = (kf - 1) * (kg - 1) <= kp && kp <= kf * kg;
  auto row = make("product.k-form", instance + " K=" + std::to_string(kf) + "," + std::to_string(kg), kp, kf * kg,
                  k_ok, start);
  row.informational = true;
  out.push_back(row);
  return out;
}

VerificationReport check_direct_sum_cover(const ConceptClass& f, const ConceptClass& g, std::size_t n,
                                          std::size_t n_prime, std::size_t k, std::size_t k_prime,
                                          const std::string& instance) {
  const auto start = Clock::now();
  const std::size_t cf = covering_size(f, n, k);
  const std::size_t cg = covering_size(g, n_prime, k_prime);
  const ConceptClass p = product(f, g).materialized;
  const std::size_t cp = covering_size(p, n * n_prime, k + k_prime);
  const BigInt lhs = std::min(cf, cg);
  const BigInt rhs = BigInt(std::min(n, n_prime)) * cp;
  const std::string inst = instance + " n=" + std::to_string(n) + " n'=" + std::to_string(n_prime) +
                           " k=" + std::to_string(k) + " k'=" + std::to_string(k_prime);
  return make("direct-sum.inequality", inst, lhs, rhs, lhs <= rhs, start);
}

VerificationReport check_product_cover_extraction(const ConceptClass& f, const ConceptClass& g, std::size_t k,
                                                  std::size_t k_prime, const std::string& instance) {
  const auto start = Clock::now();
  const std::string inst = instance + " k=" + std::to_string(k) + " k'=" + std::to_string(k_prime);
  const ConceptClass p = product(f, g).materialized;
  const auto cover = min_cover(p, k + k_prime).hypotheses;
  try {
    const auto ex = cover_from_product_cover(f, g, cover, k, k_prime);
    const bool ok = (ex.side == Side::kLeft ? covers(ex.cover, f) : covers(ex.cover, g)) &&
                    ex.cover.size() <= ex.bound;
    return make("direct-sum.extraction", inst + (ex.side == Side::kLeft ? " side=F" : " side=G"), ex.cover.size(),
                ex.bound, ok, start);
  } catch (const InvalidCoverError&) {
    return make("direct-sum.extraction", inst + " invalid", 1, 0, false, start);
  }
}

std::vector<VerificationReport> check_disambiguation_lemmas(const ConceptClass& f, std::size_t k,
                                                            std::size_t max_sample_length,
                                                            const std::string& instance) {
  std::vector<VerificationReport> out;
  const std::size_t n = f.domain().size();
  const std::size_t m = f.labels().size();
  const ConceptClass fbar = minimal_disambiguation(f);
  const std::string ks = " k=" + std::to_string(k);

  auto start = Clock::now();
  const std::size_t d = ds_dimension(f, 1).value;
  if (k + 1 <= fbar.labels().size() && k <= m) {
    for (std::size_t size = 1; size <= n; ++size) {
      start = Clock::now();
      const std::size_t cf = covering_size(f, size, k);
      const std::size_t cbar = covering_size(fbar, size, k + 1);
      const BigInt rhs = power(BigInt(m * size), d) * cbar;
      out.push_back(make("disambiguation.minimal-cover", instance + ks + " n=" + std::to_string(size) +
                                                             " d=" + std::to_string(d),
                         cf, rhs, BigInt(cf) <= rhs, start));
    }
    start = Clock::now();
    const auto hbar = min_cover(fbar, k + 1).hypotheses;
    try {
      const auto ex = cover_from_minimal_disambiguation(f, hbar, k);
      const bool ok = covers(ex.cover, f) && BigInt(ex.cover.size()) <= ex.bound;
      out.push_back(make("disambiguation.minimal-construct", instance + ks, ex.cover.size(), ex.bound, ok, start));
    } catch (const InvalidCoverError&) {
      out.push_back(make("disambiguation.minimal-construct", instance + ks + " invalid", 1, 0, false, start));
    }
  }

  // Realizability over the original labels is unchanged by free
  // disambiguation (fresh labels are appended after the originals).
  start = Clock::now();
  const ConceptClass fhat = free_disambiguation(f);
  std::size_t mismatches = 0;
  for (std::size_t len = 1; len <= max_sample_length; ++len) {
    for (const auto& s : enumerate_samples(n, m, len)) {
      if (is_realizable(s, f).realizable != is_realizable(s, fhat).realizable) ++mismatches;
    }
  }
  out.push_back(make("disambiguation.free-realizability", instance, mismatches, 0, mismatches == 0, start));

  // Wrapped learner: Bar A(S)(x) = A(S')(x) + {y*} with S' = S minus y*-pairs.
  start = Clock::now();
  const auto star = minimal_star_index(f, fbar);
  std::size_t violations = 0;
  if (star) {
    const LearningRule a = erm(f);
    const std::size_t len_cap = std::min<std::size_t>(max_sample_length, 3);
    for (std::size_t len = 1; len <= len_cap; ++len) {
      for (const auto& s : enumerate_samples(n, fbar.labels().size(), len)) {
        if (!is_realizable(s, fbar).realizable) continue;
        Sample reduced;
        for (const auto& p : s)
          if (p.label != *star) reduced.push_back(p);
        const ListHypothesis h = a(reduced);
        for (const auto& p : s) {
          if (p.label != *star && !h.contains(p.point, p.label)) {
            ++violations;
            break;
          }
        }
      }
    }
  }
  out.push_back(make("disambiguation.minimal-learner", instance, violations, 0, violations == 0, start));
  return out;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::kSsp:
      return "ssp";
    case Family::kCoding:
      return "coding";
    case Family::kGraphDs:
      return "graph-ds";
    case Family::kProductDims:
      return "product-dims";
    case Family::kDirectSum:
      return "direct-sum";
    case Family::kDisambiguation:
      return "disambiguation";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f : all_families())
    if (name == family_name(f)) return f;
  throw FormatError("unknown verification family '" + name + "'");
}

std::vector<Family> all_families() {
  return {Family::kSsp,         Family::kCoding,    Family::kGraphDs,
          Family::kProductDims, Family::kDirectSum, Family::kDisambiguation};
}

std::vector<VerificationReport> run_family(Family family, std::size_t trials, std::uint64_t seed) {
  std::vector<VerificationReport> out;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = make_stream(seed, {corpus_id(family), t});
    const std::string tag = trial_tag(t);
    switch (family) {
      case Family::kSsp: {
        const ConceptClass cls = random_class(rng, {}, false);
        append(out, check_ssp(cls, tag + " " + describe(cls)));
        break;
      }
      case Family::kGraphDs: {
        const ConceptClass cls = random_class(rng, {}, false);
        out.push_back(check_graph_vs_ds(cls, tag + " " + describe(cls)));
        break;
      }
      case Family::kCoding: {
        const std::size_t k = pick(rng, 1, 2);
        const std::size_t n = pick(rng, 1, 4);
        const std::size_t m = pick(rng, k + 1, 4);
        const auto inst = random_shattered_class(rng, n, m, k);
        append(out, check_coding_bound(inst.cls, inst.witness, tag + " " + describe(inst.cls)));
        break;
      }
      case Family::kProductDims: {
        const GeneratorLimits limits{3, 3, 6, 1, 2};
        const ConceptClass f = random_class(rng, limits, false, 1);
        const ConceptClass g = random_class(rng, limits, false, 1);
        const std::size_t k = pick(rng, 1, 2);
        const std::size_t kp = pick(rng, 1, 2);
        append(out, check_product_dimensions(f, g, k, kp, tag + " F:" + describe(f) + " G:" + describe(g)));
        break;
      }
      case Family::kDirectSum: {
        const ConceptClass f = random_class(rng, {3, 3, 3, 1, 2}, true, 1);
        const ConceptClass g = random_class(rng, {3, 3, 4, 1, 2}, true, 1);
        const std::size_t k = pick(rng, 1, f.labels().size());
        const std::size_t kp = pick(rng, 1, g.labels().size());
        const std::size_t n = pick(rng, 1, f.domain().size());
        const std::size_t np = pick(rng, 1, g.domain().size());
        const std::string inst = tag + " F:" + describe(f) + " G:" + describe(g);
        out.push_back(check_direct_sum_cover(f, g, n, np, k, kp, inst));
        out.push_back(check_product_cover_extraction(f, g, k, kp, inst));
        break;
      }
      case Family::kDisambiguation: {
        const ConceptClass f = random_class(rng, {4, 3, 8, 1, 2}, true, 1);
        const std::size_t k = pick(rng, 1, f.labels().size());
        append(out, check_disambiguation_lemmas(f, k, 4, tag + " " + describe(f)));
        break;
      }
    }
  }
  return out;
}

std::vector<VerificationReport> run_families(const std::vector<Family>& families, std::size_t trials,
                                             std::uint64_t seed) {
  std::vector<VerificationReport> out;
  for (Family f : families) append(out, run_family(f, trials, seed));
  sort_reports(out);
  return out;
}

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    if (a.lemma_id != b.lemma_id) return a.lemma_id < b.lemma_id;
    return a.instance < b.instance;
  });
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass || r.informational; });
}

std::string reports_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "lemma_id,instance,lhs,rhs,pass\n";
  for (const auto& r : reports) {
    out << r.lemma_id << ',' << r.instance << ',' << r.lhs << ',' << r.rhs << ','
        << (r.informational ? "info" : (r.pass ? "true" : "false")) << '\n';
  }
  return out.str();
}

std::string reports_summary(const std::vector<VerificationReport>& reports) {
  struct Tally {
    std::size_t pass = 0, fail = 0;
    bool informational = false;
  };
  std::map<std::string, Tally> tally;
  for (const auto& r : reports) {
    auto& t = tally[r.lemma_id];
    t.informational = t.informational || r.informational;
    (r.pass ? t.pass : t.fail) += 1;
  }
  std::ostringstream out;
  for (const auto& [id, t] : tally) {
    out << id << ": " << t.pass << "/" << (t.pass + t.fail) << " pass";
    if (t.informational) out << " (informational)";
    out << '\n';
  }
  for (const auto& r : reports) {
    if (!r.pass && !r.informational)
      out << "FAIL " << r.lemma_id << " [" << r.instance << "] lhs=" << r.lhs << " rhs=" << r.rhs << '\n';
  }
  out << (all_pass(reports) ? "all checks passed" : "verification FAILED") << '\n';
  return out.str();
}

}  // namespace listcomb
