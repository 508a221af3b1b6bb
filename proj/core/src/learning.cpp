#include "listcomb/learning.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "listcomb/format.hpp"
#include "listcomb/random.hpp"

namespace listcomb {

namespace {

ListHypothesis fill_undefined(const ListConcept& c, const LabelSpace& labels) {
  LabelSet fallback;
  for (std::size_t y = 0; y < c.k() && y < labels.size(); ++y) fallback.push_back(static_cast<LabelIndex>(y));
  std::vector<LabelSet> values;
  values.reserve(c.domain_size());
  for (const auto& v : c.values()) values.push_back(v ? *v : fallback);
  return ListHypothesis(c.k(), std::move(values));
}

double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

LearningCurvePoint exact_point(const LearningRule& rule, const DiscreteDistribution& dist, std::size_t n) {
  const auto& support = dist.support();
  const std::size_t count = checked_power(support.size(), n, kExactCurveCap);
  if (count > kExactCurveCap)
    throw CapacityError("exact learning curve needs " + std::to_string(support.size()) + "^" +
                        std::to_string(n) + " samples, above the cap");
  std::vector<double> terms;
  terms.reserve(count);
  std::vector<std::size_t> digits(n, 0);
  Sample s(n);
  for (std::size_t idx = 0; idx < count; ++idx) {
    double p = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& w = support[digits[i]];
      s[i] = {w.point, w.label};
      p *= w.probability;
    }
    terms.push_back(p == 0.0 ? 0.0 : p * population_loss(rule(s), dist));
    for (std::size_t i = 0; i < n && ++digits[i] == support.size(); ++i) digits[i] = 0;
  }
  LearningCurvePoint point;
  point.n = n;
  point.estimate = pairwise_sum(terms.data(), terms.size());
  return point;
}

}  // namespace

LearningRule erm(const ConceptClass& cls) {
  if (cls.empty()) throw DomainError("ERM needs a nonempty class");
  LearningRule rule;
  rule.name = "erm";
  rule.k = cls.k();
  rule.apply = [cls](const Sample& s) {
    std::size_t best = 0;
    std::size_t best_misses = miss_count(cls[0], s);
    for (std::size_t i = 1; i < cls.size() && best_misses > 0; ++i) {
      const std::size_t misses = miss_count(cls[i], s);
      if (misses < best_misses) {
        best = i;
        best_misses = misses;
      }
    }
    return fill_undefined(cls[best], cls.labels());
  };
  return rule;
}

MeanEstimate mean_and_stderr(const std::vector<double>& values) {
  MeanEstimate e;
  if (values.empty()) return e;
  const double n = static_cast<double>(values.size());
  e.mean = pairwise_sum(values.data(), values.size()) / n;
  if (values.size() < 2) return e;
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - e.mean) * (values[i] - e.mean);
  const double variance = pairwise_sum(sq.data(), sq.size()) / (n - 1.0);
  e.std_error = std::sqrt(variance / n);
  return e;
}

std::vector<LearningCurvePoint> learning_curve(const LearningRule& rule, const DiscreteDistribution& dist,
                                               const std::vector<std::size_t>& ns, std::size_t trials,
                                               std::uint64_t seed, CurveMode mode) {
  std::vector<LearningCurvePoint> curve;
  curve.reserve(ns.size());
  for (std::size_t n : ns) {
    const bool fits = checked_power(dist.support().size(), n, kExactCurveCap) <= kExactCurveCap;
    if (mode == CurveMode::kExact || (mode == CurveMode::kAuto && fits)) {
      auto point = exact_point(rule, dist, n);
      point.seed = seed;
      curve.push_back(point);
      continue;
    }
    if (trials == 0) throw DomainError("Monte Carlo learning curve needs at least one trial");
    std::vector<double> losses(trials);
    for (std::size_t t = 0; t < trials; ++t) {
      auto rng = make_stream(seed, {n, t});
      losses[t] = population_loss(rule(dist.draw_sample(n, rng)), dist);
    }
    const auto e = mean_and_stderr(losses);
    curve.push_back({n, e.mean, e.std_error, trials, seed});
  }
  return curve;
}

LearningCurvePoint uniform_convergence_rate(const ConceptClass& cls, const DiscreteDistribution& dist,
                                            std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw DomainError("uniform convergence estimate needs at least one trial");
  if (n == 0) throw EmptySampleError();
  std::vector<double> population(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) population[i] = population_loss(cls[i], dist);
  std::vector<double> gaps(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = make_stream(seed, {n, t});
    const Sample s = dist.draw_sample(n, rng);
    double sup = 0.0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const double empirical = static_cast<double>(miss_count(cls[i], s)) / static_cast<double>(n);
      sup = std::max(sup, std::abs(population[i] - empirical));
    }
    gaps[t] = sup;
  }
  const auto e = mean_and_stderr(gaps);
  return {n, e.mean, e.std_error, trials, seed};
}

DiscreteDistribution labeled_by(const Marginal& marginal, const ListConcept& c) {
  if (c.k() != 1 || !c.is_total()) throw UnsupportedClassError("fixed-marginal targets must be total 1-list concepts");
  std::vector<WeightedPair> support;
  support.reserve(marginal.weights.size());
  for (const auto& [x, p] : marginal.weights) support.push_back({x, c.label(x), p});
  return DiscreteDistribution(std::move(support));
}

std::vector<FixedMarginalPoint> fixed_marginal_curve(const ConceptClass& cls, const Marginal& marginal,
                                                     const std::vector<std::size_t>& ns, std::size_t trials,
                                                     std::uint64_t seed) {
  if (cls.k() != 1 || !cls.is_total())
    throw UnsupportedClassError("fixed-marginal curves need a total 1-list class");
  const LearningRule rule = erm(cls);
  std::vector<FixedMarginalPoint> out(ns.size());
  for (std::size_t ci = 0; ci < cls.size(); ++ci) {
    const auto curve = learning_curve(rule, labeled_by(marginal, cls[ci]), ns, trials, seed);
    for (std::size_t j = 0; j < ns.size(); ++j) {
      if (ci == 0 || curve[j].estimate > out[j].point.estimate) out[j] = {curve[j], ci};
    }
  }
  return out;
}

std::string curve_csv(const std::vector<LearningCurvePoint>& points) {
  std::ostringstream out;
  out << "n,estimate,stderr,trials,seed\n";
  for (const auto& p : points) {
    out << p.n << ',' << format_number(p.estimate) << ',' << format_number(p.std_error) << ',' << p.trials
        << ',' << p.seed << '\n';
  }
  return out.str();
}

}  // namespace listcomb
