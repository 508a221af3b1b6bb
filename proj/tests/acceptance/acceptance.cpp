// Acceptance run: one PASS/FAIL line per criterion, exit status from the
// set of failures (see --expect-fail).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "listcomb/compression.hpp"
#include "listcomb/dims.hpp"
#include "listcomb/learning.hpp"
#include "listcomb/random.hpp"
#include "listcomb/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace listcomb;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Tally of report rows by lemma id.
struct Tally {
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_id;  // passed, total
  std::string first_failure;

  void add(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs) {
      if (r.informational) continue;
      auto& [ok, total] = by_id[r.lemma_id];
      ++total;
      if (r.pass) {
        ++ok;
      } else if (first_failure.empty()) {
        first_failure = r.lemma_id + " " + r.instance + " lhs=" + r.lhs + " rhs=" + r.rhs;
      }
    }
  }
  bool all() const {
    for (const auto& [id, c] : by_id)
      if (c.first != c.second) return false;
    return !by_id.empty();
  }
  std::string text() const {
    std::string s;
    for (const auto& [id, c] : by_id) {
      if (!s.empty()) s += "; ";
      s += id + " " + std::to_string(c.first) + "/" + std::to_string(c.second);
    }
    if (!first_failure.empty()) s += "; first failure: " + first_failure;
    return s;
  }
};

Outcome from_tally(const Tally& t) { return {t.all(), t.text()}; }

Outcome timed(Outcome o, Clock::time_point t0, double limit_s) {
  const double s = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2f s, limit %.0f s)", s, limit_s);
  o.detail += buf;
  if (s >= limit_s) o.pass = false;
  return o;
}

// 1: peeling vs exhaustive subsets.
Outcome pseudocube_oracle() {
  const auto t0 = Clock::now();
  std::size_t agree = 0;
  const std::size_t trials = 500;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = make_stream(kSeed, {100, t});
    const std::size_t m = pick(rng, 2, 3);
    const std::size_t n = pick(rng, 1, 3);
    const std::size_t k = pick(rng, 1, m - 1);
    std::size_t space = 1;
    for (std::size_t i = 0; i < n; ++i) space *= m;
    const std::size_t count = pick(rng, 0, std::min<std::size_t>(12, space));
    // Random distinct tuples: shuffle the whole space and keep a prefix.
    std::vector<std::size_t> codes(space);
    for (std::size_t i = 0; i < space; ++i) codes[i] = i;
    std::shuffle(codes.begin(), codes.end(), rng);
    std::vector<LabelTuple> tuples;
    for (std::size_t i = 0; i < count; ++i) {
      LabelTuple tup;
      for (std::size_t j = 0, v = codes[i]; j < n; ++j, v /= m) tup.push_back(static_cast<LabelIndex>(v % m));
      tuples.push_back(tup);
    }
    std::vector<oracle::Tuple> plain(tuples.begin(), tuples.end());
    const auto got = max_pseudocube(tuples, k);
    const bool valid = got.subset.empty() || oracle::is_pseudocube({got.subset.begin(), got.subset.end()}, k);
    if (valid && got.subset.size() == oracle::max_pseudocube_size(plain, k)) ++agree;
  }
  return timed({agree == trials, std::to_string(agree) + "/" + std::to_string(trials) + " agree"}, t0, 10);
}

// 2: every positive witness re-validates.
Outcome witnesses() {
  std::size_t checked = 0, ok = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    auto rng = make_stream(kSeed, {101, t});
    const ConceptClass c = random_class(rng, {}, t % 4 == 3);
    const auto g = graph_dimension(c);
    if (g.value > 0) {
      ++checked;
      ok += validate_graph_witness(c, *g.witness);
    }
    const auto d = ds_dimension(c, c.k());
    if (d.value > 0) {
      ++checked;
      ok += validate_ds_witness(c, c.k(), *d.witness);
    }
    if (c.k() == 1 && c.is_total()) {
      const auto n = natarajan_dimension(c);
      if (n.value > 0) {
        ++checked;
        ok += validate_natarajan_witness(c, *n.witness);
      }
    }
  }
  return {checked > 0 && ok == checked, std::to_string(ok) + "/" + std::to_string(checked) + " witnesses valid"};
}

Outcome family(Family f, std::size_t trials, double limit_s = 0) {
  const auto t0 = Clock::now();
  Tally tally;
  tally.add(run_family(f, trials, kSeed));
  Outcome o = from_tally(tally);
  return limit_s > 0 ? timed(o, t0, limit_s) : o;
}

Sample realizable_sample(std::mt19937_64& rng, const ListConcept& target, std::size_t domain, std::size_t len) {
  Sample s;
  for (std::size_t i = 0; i < len; ++i) {
    const auto x = static_cast<PointIndex>(pick(rng, 0, domain - 1));
    const LabelSet& ys = *target.value(x);
    s.push_back({x, ys[pick(rng, 0, ys.size() - 1)]});
  }
  return s;
}

// 8: boosting with a pre-validated block length, and the agnostic reduction.
Outcome compression() {
  std::size_t runs = 0, zero_loss = 0, within_size = 0, failures = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    auto rng = make_stream(kSeed, {108, t});
    const std::size_t k = pick(rng, 1, 2);
    const ConceptClass c = random_class(rng, {4, 3, 8, 2, 2}, false, k);
    const Sample s = realizable_sample(rng, c[pick(rng, 0, c.size() - 1)], c.domain().size(), pick(rng, 1, 40));
    const LearningRule rule = erm(c);
    BoostConfig cfg;
    cfg.epsilon = default_epsilon(k);
    cfg.seed = derive_seed(kSeed, {108, t, 1});
    const auto d = minimal_block_length(rule, s, cfg.epsilon, s.size(), cfg);
    if (!d) {
      ++failures;  // ERM never reaches the margin; counts against the guarantee
      continue;
    }
    cfg.d = *d;
    try {
      const auto r = boost_compress(rule, c, s, cfg);
      ++runs;
      zero_loss += miss_count(r.reconstruction, s) == 0;
      within_size += r.compressed.size() <= cfg.d * block_count(s.size(), cfg.epsilon);
    } catch (const BoostFailure&) {
      ++failures;
    }
  }

  std::size_t agnostic_ok = 0;
  for (std::size_t t = 0; t < 500; ++t) {
    auto rng = make_stream(kSeed, {118, t});
    const ConceptClass c = random_class(rng, {4, 3, 6, 1, 2}, false, 1);
    Sample s = realizable_sample(rng, c[pick(rng, 0, c.size() - 1)], c.domain().size(), pick(rng, 1, 10));
    // Redraw roughly a quarter of the labels.
    for (auto& p : s)
      if (pick(rng, 0, 3) == 0) p.label = static_cast<LabelIndex>(pick(rng, 0, c.labels().size() - 1));
    const auto r = agnostic_from_realizable(consistent_subsample_scheme(c), c, s);
    agnostic_ok += r.loss <= r.best && r.best == min_empirical_loss(c, s);
  }

  std::ostringstream os;
  os << "boost: " << zero_loss << "/" << runs << " zero loss, " << within_size << "/" << runs << " within size, "
     << failures << " failures; agnostic: " << agnostic_ok << "/500";
  const bool pass = runs == 100 && zero_loss == runs && within_size == runs && failures == 0 && agnostic_ok == 500;
  return {pass, os.str()};
}

// 9: learning curve of a validated constant-size scheme against the bound.
Outcome generalization() {
  const auto t0 = Clock::now();
  const ConceptClass thresholds =
      testing::digits({"000000", "100000", "110000", "111000", "111100", "111110", "111111"}, 2);
  const CompressionScheme scheme = consistent_subsample_scheme(thresholds);
  std::vector<Sample> samples;
  for (std::size_t len = 1; len <= 3; ++len)
    for (const auto& s : enumerate_samples(6, 2, len)) samples.push_back(s);
  const auto valid = validate_scheme(scheme, thresholds, ValidationMode::kRealizable, samples);
  if (!valid.ok()) return {false, "scheme failed validation"};
  const std::size_t d = *scheme.fixed_size;

  const Marginal m{{{0, 0.3}, {1, 0.2}, {2, 0.15}, {3, 0.15}, {4, 0.1}, {5, 0.1}}};
  const auto dist = labeled_by(m, thresholds[3]);
  const auto curve = learning_curve(scheme_as_rule(scheme), dist, {25, 100, 400}, 2000, kSeed, CurveMode::kMonteCarlo);
  bool pass = true;
  std::ostringstream os;
  os << "d=" << d;
  for (const auto& p : curve) {
    const double bound = generalization_bound(d, p.n, 0.5).curve_bound;
    pass = pass && p.estimate <= bound + 3 * p.std_error;
    os << "; n=" << p.n << " loss " << p.estimate << " <= " << bound << " + 3*" << p.std_error;
  }
  return timed({pass, os.str()}, t0, 60);
}

// 11: two identical verify runs through the command-line entry point.
Outcome determinism() {
  std::string first;
  int code = 0;
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out, err;
    code = cli::dispatch({"verify", "all", "--seed", "7"}, out, err);
    const std::string all = out.str() + "\n--\n" + err.str();
    if (i == 0) {
      first = all;
    } else if (all != first) {
      return {false, "reports differ"};
    }
  }
  return {true, std::to_string(first.size()) + " bytes identical, verify exit " + std::to_string(code)};
}

std::set<int> parse_ids(const std::string& text) {
  std::set<int> ids;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) ids.insert(std::stoi(tok));
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"listcomb acceptance run"};
  std::string expect;
  app.add_option("--expect-fail", expect, "Comma-separated criteria that are known to fail");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> expected = parse_ids(expect);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pseudo-cube peeling matches exhaustive search", pseudocube_oracle},
      {"dimension witnesses re-validate", witnesses},
      {"SSP inequality on 200 random list classes", [] { return family(Family::kSsp, 200, 30); }},
      {"coding bounds on 100 shattered witnesses", [] { return family(Family::kCoding, 100); }},
      {"graph vs DS inequality", [] { return family(Family::kGraphDs, 200); }},
      {"product dimension propositions on 50 pairs", [] { return family(Family::kProductDims, 50); }},
      {"direct-sum cover inequality and extraction", [] { return family(Family::kDirectSum, 200); }},
      {"boosted and agnostic compression", compression},
      {"generalization curve below bound", generalization},
      {"disambiguation lemmas on 50 partial classes", [] { return family(Family::kDisambiguation, 50); }},
      {"verify all is deterministic", determinism},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failed.insert(id);
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed.size(), criteria.size());
  if (!expected.empty() && failed != expected) std::printf("failing set differs from --expect-fail\n");
  return failed == expected ? 0 : 1;
}
