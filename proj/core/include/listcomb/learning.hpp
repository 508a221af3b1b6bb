#pragma once

// Learning rules, learning curves and uniform-convergence estimates.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "listcomb/core.hpp"

namespace listcomb {

struct LearningRule {
  std::string name;
  std::size_t k = 1;
  std::function<ListHypothesis(const Sample&)> apply;
  bool exact = true;

  ListHypothesis operator()(const Sample& s) const { return apply(s); }
};

// Empirical risk minimiser: first concept in class order with the fewest
// misses. Undefined points of a partial winner are filled with the k smallest
// labels so the output is total. Throws DomainError on an empty class.
LearningRule erm(const ConceptClass& cls);

struct LearningCurvePoint {
  std::size_t n = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;  // 0 for exact enumeration
  std::uint64_t seed = 0;
};

enum class CurveMode { kAuto, kExact, kMonteCarlo };

// Samples enumerated at most by the exact learning-curve mode.
inline constexpr std::size_t kExactCurveCap = 1'000'000;

// Expected population loss of rule(S) for S ~ D^n. Exact mode enumerates all
// |support|^n sequences (CapacityError past kExactCurveCap); auto picks exact
// whenever it fits.
std::vector<LearningCurvePoint> learning_curve(const LearningRule& rule, const DiscreteDistribution& dist,
                                               const std::vector<std::size_t>& ns, std::size_t trials,
                                               std::uint64_t seed, CurveMode mode = CurveMode::kMonteCarlo);

// Monte Carlo estimate of E_S sup_c |L_D(c) - L_S(c)|.
LearningCurvePoint uniform_convergence_rate(const ConceptClass& cls, const DiscreteDistribution& dist,
                                            std::size_t n, std::size_t trials, std::uint64_t seed);

struct Marginal {
  std::vector<std::pair<PointIndex, double>> weights;
};

// Distribution of (x, c(x)) for x drawn from the marginal; c must be total 1-list.
DiscreteDistribution labeled_by(const Marginal& marginal, const ListConcept& c);

struct FixedMarginalPoint {
  LearningCurvePoint point;
  std::size_t worst_concept = 0;
};

// Worst case over target concepts of the ERM learning curve under D_c.
// Every target shares the same per-(n, trial) random streams.
std::vector<FixedMarginalPoint> fixed_marginal_curve(const ConceptClass& cls, const Marginal& marginal,
                                                     const std::vector<std::size_t>& ns, std::size_t trials,
                                                     std::uint64_t seed);

// Mean and standard error with pairwise summation (order-stable).
struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};
MeanEstimate mean_and_stderr(const std::vector<double>& values);

// CSV with header "n,estimate,stderr,trials,seed".
std::string curve_csv(const std::vector<LearningCurvePoint>& points);

}  // namespace listcomb
