#include "listcomb/compression.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "listcomb/random.hpp"

namespace listcomb {

namespace {

std::uint64_t pair_key(const LabeledPoint& p) { return (std::uint64_t{p.point} << 32) | p.label; }

bool contains_pair(const Sample& t, const LabeledPoint& p) { return std::find(t.begin(), t.end(), p) != t.end(); }

struct BlockPool {
  std::vector<Sample> representatives;  // first subsequence producing each hypothesis
  std::vector<ListHypothesis> hypotheses;
  Sample columns;                       // distinct pairs of the sample
  std::vector<std::vector<std::uint8_t>> loss;
};

BlockPool build_pool(const LearningRule& learner, const Sample& s, std::size_t d, std::size_t cap) {
  BlockPool pool;
  std::unordered_map<ListHypothesis, std::size_t, ListHypothesisHash> index;
  for (auto& sub : distinct_subsequences(s, d, cap)) {
    ListHypothesis h = learner(sub);
    if (index.emplace(h, pool.hypotheses.size()).second) {
      pool.hypotheses.push_back(std::move(h));
      pool.representatives.push_back(std::move(sub));
    }
  }
  for (const auto& p : s)
    if (!contains_pair(pool.columns, p)) pool.columns.push_back(p);
  pool.loss.assign(pool.hypotheses.size(), std::vector<std::uint8_t>(pool.columns.size(), 0));
  for (std::size_t j = 0; j < pool.hypotheses.size(); ++j)
    for (std::size_t i = 0; i < pool.columns.size(); ++i)
      pool.loss[j][i] = pool.hypotheses[j].contains(pool.columns[i].point, pool.columns[i].label) ? 0 : 1;
  return pool;
}

double mixture_value(const std::vector<std::vector<std::uint8_t>>& loss, const std::vector<double>& mix) {
  if (loss.empty()) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < loss[0].size(); ++i) {
    double v = 0.0;
    for (std::size_t j = 0; j < loss.size(); ++j) v += mix[j] * loss[j][i];
    worst = std::max(worst, v);
  }
  return worst;
}

// Row player's LP on the shifted matrix M' = loss + 1 > 0:
// max sum(y) s.t. sum_j y_j M'[j][i] <= 1 for every column i, y >= 0.
// The optimum is 1/(value + 1) and y / sum(y) is an optimal mixture.
GameSolution simplex_game(const std::vector<std::vector<std::uint8_t>>& loss) {
  constexpr double kTol = 1e-12;
  const std::size_t vars = loss.size();
  const std::size_t cons = loss[0].size();
  const std::size_t width = vars + cons + 1;
  std::vector<std::vector<double>> t(cons, std::vector<double>(width, 0.0));
  std::vector<double> obj(width, 0.0);
  std::vector<std::size_t> basis(cons);
  for (std::size_t i = 0; i < cons; ++i) {
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = 1.0 + loss[j][i];
    t[i][vars + i] = 1.0;
    t[i][width - 1] = 1.0;
    basis[i] = vars + i;
  }
  for (std::size_t j = 0; j < vars; ++j) obj[j] = -1.0;

  GameSolution sol;
  while (true) {
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (obj[c] < -kTol) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = cons;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < cons; ++r) {
      if (t[r][enter] <= kTol) continue;
      const double ratio = t[r][width - 1] / t[r][enter];
      if (leave == cons || ratio < best_ratio - kTol ||
          (std::abs(ratio - best_ratio) <= kTol && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // M' > 0 keeps the feasible region bounded, so a leaving row exists.
    const double pivot = t[leave][enter];
    for (double& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < cons; ++r) {
      if (r == leave || t[r][enter] == 0.0) continue;
      const double f = t[r][enter];
      for (std::size_t c = 0; c < width; ++c) t[r][c] -= f * t[leave][c];
    }
    const double f = obj[enter];
    for (std::size_t c = 0; c < width; ++c) obj[c] -= f * t[leave][c];
    basis[leave] = enter;
    ++sol.iterations;
  }
  sol.row_mix.assign(vars, 0.0);
  double total = 0.0;
  for (std::size_t r = 0; r < cons; ++r) {
    if (basis[r] >= vars) continue;
    sol.row_mix[basis[r]] = std::max(0.0, t[r][width - 1]);
    total += sol.row_mix[basis[r]];
  }
  for (double& v : sol.row_mix) v /= total;
  sol.value = mixture_value(loss, sol.row_mix);
  sol.exact = true;
  return sol;
}

GameSolution mw_game(const std::vector<std::vector<std::uint8_t>>& loss, double gap, std::size_t max_iterations) {
  const std::size_t rows = loss.size();
  const std::size_t cols = loss[0].size();
  const double eta = std::sqrt(std::log(static_cast<double>(rows) + 1.0) / static_cast<double>(max_iterations));
  std::vector<double> weights(rows, 1.0);
  std::vector<double> avg_rows(rows, 0.0);
  std::vector<double> avg_cols(cols, 0.0);
  GameSolution sol;
  sol.exact = false;
  std::vector<double> mix(rows);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (std::size_t j = 0; j < rows; ++j) mix[j] = weights[j] / total;
    // Adversary best response to the current mixture.
    std::size_t col = 0;
    double worst = -1.0;
    for (std::size_t i = 0; i < cols; ++i) {
      double v = 0.0;
      for (std::size_t j = 0; j < rows; ++j) v += mix[j] * loss[j][i];
      if (v > worst) {
        worst = v;
        col = i;
      }
    }
    for (std::size_t j = 0; j < rows; ++j) {
      avg_rows[j] += mix[j];
      if (loss[j][col]) weights[j] *= std::exp(-eta);
    }
    avg_cols[col] += 1.0;
    sol.iterations = it;
    if (it % 64 == 0 || it == max_iterations) {
      std::vector<double> rmix(rows), cmix(cols);
      for (std::size_t j = 0; j < rows; ++j) rmix[j] = avg_rows[j] / static_cast<double>(it);
      for (std::size_t i = 0; i < cols; ++i) cmix[i] = avg_cols[i] / static_cast<double>(it);
      const double upper = mixture_value(loss, rmix);
      double lower = 1.0;
      for (std::size_t j = 0; j < rows; ++j) {
        double v = 0.0;
        for (std::size_t i = 0; i < cols; ++i) v += cmix[i] * loss[j][i];
        lower = std::min(lower, v);
      }
      sol.row_mix = rmix;
      sol.value = upper;
      if (upper - lower <= gap) break;
    }
    // Keep weights in range.
    const double top = *std::max_element(weights.begin(), weights.end());
    if (top < 1e-200) {
      for (double& w : weights) w /= top;
    }
  }
  return sol;
}

std::size_t draw_index(const std::vector<double>& cumulative, std::mt19937_64& rng) {
  const double u = unit_uniform(rng) * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
  if (idx >= cumulative.size()) idx = cumulative.size() - 1;
  return idx;
}

}  // namespace

bool is_subsequence(const Sample& s, const Sample& t) {
  std::size_t j = 0;
  for (const auto& p : t) {
    if (j < s.size() && s[j] == p) ++j;
  }
  return j == s.size();
}

std::vector<Sample> enumerate_samples(std::size_t domain_size, std::size_t label_count, std::size_t length,
                                      std::size_t cap) {
  const std::size_t base = domain_size * label_count;
  std::size_t count = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (base != 0 && count > cap / base) throw CapacityError("sample enumeration exceeds the cap");
    count *= base;
  }
  if (base == 0 && length > 0) return {};
  std::vector<Sample> out;
  out.reserve(count);
  std::vector<std::size_t> digits(length, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    Sample s(length);
    for (std::size_t i = 0; i < length; ++i)
      s[i] = {static_cast<PointIndex>(digits[i] / label_count), static_cast<LabelIndex>(digits[i] % label_count)};
    out.push_back(std::move(s));
    for (std::size_t i = length; i-- > 0;) {
      if (++digits[i] < base) break;
      digits[i] = 0;
    }
  }
  return out;
}

ValidationReport validate_scheme(const CompressionScheme& scheme, const ConceptClass& cls, ValidationMode mode,
                                 const std::vector<Sample>& samples) {
  ValidationReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    check_sample(cls, s);
    if (mode == ValidationMode::kRealizable && !is_realizable(s, cls).realizable) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    const Sample compressed = scheme.compress(s);
    report.max_length = std::max(report.max_length, compressed.size());
    bool shape_ok = compressed.size() <= scheme.size_profile(s.size());
    if (scheme.subsequence_output) {
      shape_ok = shape_ok && is_subsequence(compressed, s);
    } else {
      for (const auto& p : compressed) shape_ok = shape_ok && contains_pair(s, p);
    }
    if (!shape_ok) report.shape_violations.push_back(i);
    const ListHypothesis h = scheme.reconstruct(compressed);
    bool loss_ok = true;
    if (mode == ValidationMode::kRealizable) {
      loss_ok = miss_count(h, s) == 0;
    } else if (!s.empty()) {
      loss_ok = empirical_loss(h, s) <= min_empirical_loss(cls, s);
    }
    if (!loss_ok) report.loss_violations.push_back(i);
  }
  return report;
}

GameSolution solve_loss_game(const std::vector<std::vector<std::uint8_t>>& loss, std::size_t lp_threshold,
                             double mw_gap, std::size_t mw_max_iterations) {
  if (loss.empty()) throw DomainError("game needs at least one row");
  if (loss[0].empty()) {
    GameSolution trivial;
    trivial.row_mix.assign(loss.size(), 0.0);
    trivial.row_mix[0] = 1.0;
    return trivial;
  }
  if (loss.size() <= lp_threshold) return simplex_game(loss);
  return mw_game(loss, mw_gap, mw_max_iterations);
}

double default_epsilon(std::size_t k) { return 1.0 / (4.0 * static_cast<double>(k + 1)); }

std::size_t block_count(std::size_t n, double epsilon) {
  if (n == 0) throw DomainError("block count needs n >= 1");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  return static_cast<std::size_t>(std::ceil(std::log(3.0 * static_cast<double>(n)) / (epsilon * epsilon)));
}

std::vector<Sample> distinct_subsequences(const Sample& s, std::size_t d, std::size_t cap) {
  std::vector<Sample> out;
  if (d > s.size()) return out;
  // Distinct pair values in first-occurrence order and next-occurrence table.
  std::vector<LabeledPoint> values;
  std::vector<std::size_t> code(s.size());
  std::unordered_map<std::uint64_t, std::size_t> ids;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto [it, inserted] = ids.emplace(pair_key(s[i]), values.size());
    if (inserted) values.push_back(s[i]);
    code[i] = it->second;
  }
  const std::size_t none = s.size();
  std::vector<std::vector<std::size_t>> next(s.size() + 1, std::vector<std::size_t>(values.size(), none));
  for (std::size_t i = s.size(); i-- > 0;) {
    next[i] = next[i + 1];
    next[i][code[i]] = i;
  }
  Sample current;
  current.reserve(d);
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == d) {
      if (out.size() >= cap) throw CapacityError("too many distinct block subsamples");
      out.push_back(current);
      return;
    }
    const std::size_t remaining = d - current.size();
    for (std::size_t v = 0; v < values.size(); ++v) {
      const std::size_t q = next[start][v];
      if (q == none || s.size() - q < remaining) continue;
      current.push_back(values[v]);
      self(self, q + 1);
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

GameSolution block_game(const LearningRule& learner, const Sample& s, std::size_t d, const BoostConfig& config) {
  if (d == 0 || d > s.size()) throw DomainError("block length must lie in [1, |S|]");
  const BlockPool pool = build_pool(learner, s, d, config.subsample_cap);
  return solve_loss_game(pool.loss, config.lp_threshold, config.mw_gap);
}

std::optional<std::size_t> minimal_block_length(const LearningRule& learner, const Sample& s, double epsilon,
                                                std::size_t max_d, const BoostConfig& config) {
  max_d = std::min(max_d, s.size());
  for (std::size_t d = 1; d <= max_d; ++d) {
    if (block_game(learner, s, d, config).value <= epsilon) return d;
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> vote_counts(const LearningRule& learner, const Sample& compressed,
                                                  std::size_t d, std::size_t domain_size, std::size_t label_count) {
  if (d == 0 ? !compressed.empty() : compressed.size() % d != 0)
    throw InvalidSchemeError("compressed length is not a multiple of the block length");
  std::vector<std::vector<std::size_t>> phi(domain_size, std::vector<std::size_t>(label_count, 0));
  const std::size_t blocks = d == 0 ? 0 : compressed.size() / d;
  for (std::size_t t = 0; t < blocks; ++t) {
    const Sample block(compressed.begin() + static_cast<std::ptrdiff_t>(t * d),
                       compressed.begin() + static_cast<std::ptrdiff_t>((t + 1) * d));
    const ListHypothesis h = learner(block);
    for (std::size_t x = 0; x < domain_size; ++x)
      for (LabelIndex y : h.value(static_cast<PointIndex>(x))) ++phi[x][y];
  }
  return phi;
}

ListHypothesis majority_vote(const LearningRule& learner, const Sample& compressed, std::size_t d, std::size_t k,
                             std::size_t domain_size, std::size_t label_count) {
  if (k > label_count) throw DomainError("list size exceeds the label count");
  const auto phi = vote_counts(learner, compressed, d, domain_size, label_count);
  std::vector<LabelSet> values(domain_size);
  std::vector<LabelIndex> order(label_count);
  for (std::size_t x = 0; x < domain_size; ++x) {
    std::iota(order.begin(), order.end(), LabelIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](LabelIndex a, LabelIndex b) { return phi[x][a] > phi[x][b]; });
    values[x].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(values[x].begin(), values[x].end());
  }
  return ListHypothesis(k, std::move(values));
}

BoostResult boost_compress(const LearningRule& learner, const ConceptClass& cls, const Sample& s,
                           const BoostConfig& config) {
  const std::size_t k = learner.k;
  const double eps = config.epsilon > 0.0 ? config.epsilon : default_epsilon(k);
  if (!(eps < 1.0 / (2.0 * static_cast<double>(k + 1))))
    throw DomainError("epsilon must be below 1/(2(k+1))");
  check_sample(cls, s);
  if (!is_realizable(s, cls).realizable) throw DomainError("boost_compress needs a realizable sample");
  BoostResult result;
  result.d = config.d;
  const std::size_t m = cls.labels().size();
  const std::size_t n = cls.domain().size();
  if (s.empty()) {
    result.reconstruction = majority_vote(learner, {}, config.d, k, n, m);
    return result;
  }
  if (config.d == 0 || config.d > s.size()) throw DomainError("block length must lie in [1, |S|]");

  const BlockPool pool = build_pool(learner, s, config.d, config.subsample_cap);
  const GameSolution game = solve_loss_game(pool.loss, config.lp_threshold, config.mw_gap);
  result.game_value = game.value;
  result.pool_size = pool.hypotheses.size();
  const std::size_t T = block_count(s.size(), eps);
  result.blocks = T;

  std::vector<double> cumulative(game.row_mix.size());
  std::partial_sum(game.row_mix.begin(), game.row_mix.end(), cumulative.begin());
  std::vector<std::size_t> drawn(T);
  std::vector<std::size_t> phi(pool.columns.size());
  for (std::size_t attempt = 0; attempt < config.retry_budget; ++attempt) {
    auto rng = make_stream(config.seed, {attempt});
    std::fill(phi.begin(), phi.end(), 0);
    for (std::size_t t = 0; t < T; ++t) {
      drawn[t] = draw_index(cumulative, rng);
      for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += pool.loss[drawn[t]][i] ? 0 : 1;
    }
    const bool margin = std::all_of(phi.begin(), phi.end(), [&](std::size_t v) { return (k + 1) * v > k * T; });
    if (!margin) continue;
    result.attempts = attempt + 1;
    result.seed = derive_seed(config.seed, {attempt});
    result.compressed.reserve(T * config.d);
    for (std::size_t t = 0; t < T; ++t) {
      const Sample& block = pool.representatives[drawn[t]];
      result.compressed.insert(result.compressed.end(), block.begin(), block.end());
    }
    result.reconstruction = majority_vote(learner, result.compressed, config.d, k, n, m);
    return result;
  }
  throw BoostFailure("no draw of " + std::to_string(T) + " blocks met the vote margin within " +
                     std::to_string(config.retry_budget) + " attempts (game value " + std::to_string(game.value) +
                     ")");
}

CompressionScheme boost_scheme(const LearningRule& learner, const ConceptClass& cls, const BoostConfig& config) {
  CompressionScheme scheme;
  scheme.name = "boost(" + learner.name + ")";
  scheme.k = learner.k;
  const double eps = config.epsilon > 0.0 ? config.epsilon : default_epsilon(learner.k);
  scheme.compress = [learner, cls, config](const Sample& s) {
    return boost_compress(learner, cls, s, config).compressed;
  };
  const std::size_t n = cls.domain().size();
  const std::size_t m = cls.labels().size();
  scheme.reconstruct = [learner, config, n, m](const Sample& c) {
    return majority_vote(learner, c, config.d, learner.k, n, m);
  };
  const std::size_t d = config.d;
  scheme.size_profile = [d, eps](std::size_t len) { return len == 0 ? 0 : d * block_count(len, eps); };
  scheme.subsequence_output = false;
  scheme.descriptor = {"boost", learner.k, d, 0, 0, config.seed};
  return scheme;
}

CompressionScheme consistent_subsample_scheme(const ConceptClass& cls) {
  if (cls.empty()) throw DomainError("scheme needs a nonempty class");
  const LearningRule rule = erm(cls);
  const std::size_t size = std::max<std::size_t>(cls.size() - 1, 1);
  CompressionScheme scheme;
  scheme.name = "consistent-subsample";
  scheme.k = cls.k();
  scheme.compress = [rule, size](const Sample& s) {
    if (s.empty()) return Sample{};
    std::vector<bool> chosen(s.size(), false);
    std::vector<std::size_t> order;
    while (true) {
      Sample sub;
      std::vector<std::size_t> sorted = order;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i : sorted) sub.push_back(s[i]);
      const ListHypothesis h = rule(sub);
      std::size_t missed = s.size();
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!chosen[i] && !h.contains(s[i].point, s[i].label)) {
          missed = i;
          break;
        }
      }
      if (missed == s.size()) {
        Sample out = sub;
        const LabeledPoint filler = out.empty() ? s.front() : out.back();
        while (out.size() < size) out.push_back(filler);
        return out;
      }
      chosen[missed] = true;
      order.push_back(missed);
    }
  };
  scheme.reconstruct = [rule](const Sample& c) { return rule(c); };
  scheme.size_profile = [size](std::size_t len) { return len == 0 ? 0 : size; };
  scheme.fixed_size = size;
  scheme.subsequence_output = false;
  scheme.descriptor = {"consistent-subsample", cls.k(), size, 0, 0, 0};
  return scheme;
}

CompressionScheme product_scheme(const CompressionScheme& left, const CompressionScheme& right,
                                 const ProductLayout& layout) {
  if (!left.fixed_size || !right.fixed_size)
    throw InvalidSchemeError("product schemes need fixed-size component schemes");
  const std::size_t d1 = *left.fixed_size;
  const std::size_t d2 = *right.fixed_size;
  CompressionScheme scheme;
  scheme.name = encode_pair(left.name, right.name);
  scheme.k = left.k * right.k;
  scheme.compress = [left, right, layout](const Sample& s) {
    if (s.empty()) return Sample{};
    const Sample l = project_left(s, layout);
    const Sample r = project_right(s, layout);
    Sample out;
    // Every compressed component pair is the projection of some pair of s;
    // emit the first such pair.
    for (const auto& p : left.compress(l)) {
      const auto it = std::find(l.begin(), l.end(), p);
      if (it == l.end()) throw InvalidSchemeError("left compressor emitted a pair outside its input");
      out.push_back(s[static_cast<std::size_t>(it - l.begin())]);
    }
    for (const auto& p : right.compress(r)) {
      const auto it = std::find(r.begin(), r.end(), p);
      if (it == r.end()) throw InvalidSchemeError("right compressor emitted a pair outside its input");
      out.push_back(s[static_cast<std::size_t>(it - r.begin())]);
    }
    return out;
  };
  scheme.reconstruct = [left, right, layout, d1, d2](const Sample& c) {
    if (!c.empty() && c.size() != d1 + d2) throw InvalidSchemeError("product compression has the wrong length");
    const Sample a(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.empty() ? 0 : d1));
    const Sample b(c.begin() + static_cast<std::ptrdiff_t>(c.empty() ? 0 : d1), c.end());
    return product_hypothesis(left.reconstruct(project_left(a, layout)), right.reconstruct(project_right(b, layout)),
                              layout);
  };
  scheme.size_profile = [d1, d2](std::size_t len) { return len == 0 ? 0 : d1 + d2; };
  scheme.fixed_size = d1 + d2;
  scheme.subsequence_output = false;
  scheme.descriptor = {"product", scheme.k, d1 + d2, 0, d1, 0};
  return scheme;
}

LearningRule scheme_as_rule(const CompressionScheme& scheme) {
  LearningRule rule;
  rule.name = scheme.name;
  rule.k = scheme.k;
  rule.apply = [scheme](const Sample& s) { return scheme.reconstruct(scheme.compress(s)); };
  return rule;
}

AgnosticResult agnostic_from_realizable(const CompressionScheme& scheme, const ConceptClass& cls, const Sample& s) {
  if (s.empty()) throw EmptySampleError();
  AgnosticResult r;
  r.subsample = max_realizable_subsample(s, cls);
  r.compressed = scheme.compress(r.subsample);
  r.hypothesis = scheme.reconstruct(r.compressed);
  r.loss = empirical_loss(r.hypothesis, s);
  r.best = min_empirical_loss(cls, s);
  return r;
}

GeneralizationBound generalization_bound(std::size_t d_n, std::size_t n, double eps) {
  if (n < 2) throw DomainError("generalization bound needs n >= 2");
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("generalization bound needs 0 < eps <= 1");
  const double nn = static_cast<double>(n);
  const double ln = std::log(nn);
  const double d = static_cast<double>(d_n);
  return {2.0 * std::exp(d * ln - eps * eps * nn), std::sqrt((d + 1.0) * ln / nn) + 2.0 / nn};
}

io::Json compressed_to_json(const SchemeDescriptor& descriptor, const Sample& compressed, const ConceptClass& cls) {
  io::Json j;
  j["scheme"] = {{"kind", descriptor.kind},   {"k", descriptor.k},         {"d", descriptor.d},
                 {"blocks", descriptor.block_count}, {"split", descriptor.split}, {"seed", descriptor.seed}};
  j["pairs"] = io::sample_to_json(compressed, cls)["pairs"];
  return j;
}

SchemeDescriptor descriptor_from_json(const io::Json& j) {
  try {
    const auto& h = j.at("scheme");
    return {h.at("kind").get<std::string>(), h.at("k").get<std::size_t>(),      h.at("d").get<std::size_t>(),
            h.at("blocks").get<std::size_t>(), h.at("split").get<std::size_t>(), h.at("seed").get<std::uint64_t>()};
  } catch (const io::Json::exception& e) {
    throw FormatError(std::string("bad scheme descriptor: ") + e.what());
  }
}

}  // namespace listcomb
