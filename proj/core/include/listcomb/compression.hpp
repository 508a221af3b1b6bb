#pragma once

// Sample compression schemes: representation and validation, the
// learner -> logarithmic-size scheme construction (min-max mixture over
// block hypotheses + majority vote), the realizable -> agnostic reduction and
// the generalization-bound formulas.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "listcomb/algebra.hpp"
#include "listcomb/core.hpp"
#include "listcomb/io.hpp"
#include "listcomb/learning.hpp"

namespace listcomb {

struct SchemeDescriptor {
  std::string kind;
  std::size_t k = 1;
  std::size_t d = 0;             // block length (boost) or fixed size
  std::size_t block_count = 0;   // T for boost outputs, 0 otherwise
  std::size_t split = 0;         // left part length for product schemes
  std::uint64_t seed = 0;
};

struct CompressionScheme {
  std::string name;
  std::size_t k = 1;
  std::function<Sample(const Sample&)> compress;
  std::function<ListHypothesis(const Sample&)> reconstruct;
  // Maximum compression length for inputs of length n.
  std::function<std::size_t(std::size_t)> size_profile;
  // Set when every nonempty input compresses to exactly this many pairs.
  std::optional<std::size_t> fixed_size;
  // Whether compress promises an order-preserving subsequence; otherwise
  // only membership of every output pair in the input is promised.
  bool subsequence_output = true;
  SchemeDescriptor descriptor;
};

enum class ValidationMode { kRealizable, kAgnostic };

struct ValidationReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;  // unrealizable samples in realizable mode
  // Indices (into the input list) of samples whose reconstruction lost.
  std::vector<std::size_t> loss_violations;
  // Output longer than size_profile, or containing pairs not from the input.
  std::vector<std::size_t> shape_violations;
  std::size_t max_length = 0;

  bool ok() const { return loss_violations.empty() && shape_violations.empty(); }
};

ValidationReport validate_scheme(const CompressionScheme& scheme, const ConceptClass& cls, ValidationMode mode,
                                 const std::vector<Sample>& samples);

// All |X|^len * |Y|^len sequences of a given length, in lexicographic order
// of (point, label) codes. CapacityError past `cap`.
std::vector<Sample> enumerate_samples(std::size_t domain_size, std::size_t label_count, std::size_t length,
                                      std::size_t cap = 1'000'000);

// Whether s is an order-preserving subsequence of t.
bool is_subsequence(const Sample& s, const Sample& t);

// ---- Zero-sum game -------------------------------------------------------

// loss[j][i] = 1 when row hypothesis j misses column pair i.
struct GameSolution {
  std::vector<double> row_mix;  // min-max distribution over rows
  double value = 0.0;           // max_i sum_j mu_j loss[j][i]
  bool exact = true;            // simplex (true) or multiplicative weights
  std::size_t iterations = 0;
};

// Exact simplex (Bland's rule) when rows <= lp_threshold, multiplicative
// weights to the given duality gap otherwise.
GameSolution solve_loss_game(const std::vector<std::vector<std::uint8_t>>& loss, std::size_t lp_threshold = 5000,
                             double mw_gap = 1e-6, std::size_t mw_max_iterations = 200'000);

// ---- Boosting to a logarithmic scheme -----------------------------------

struct BoostConfig {
  double epsilon = 0.0;  // 0 means the default 1/(4(k+1))
  std::size_t d = 1;     // block length
  std::uint64_t seed = 0;
  std::size_t retry_budget = 64;
  std::size_t lp_threshold = 5000;
  double mw_gap = 1e-6;
  std::size_t subsample_cap = 2'000'000;
};

double default_epsilon(std::size_t k);
// T = ceil(ln(3n) / eps^2).
std::size_t block_count(std::size_t n, double epsilon);

struct BoostResult {
  Sample compressed;  // T blocks of length d, concatenated
  std::size_t d = 0;
  std::size_t blocks = 0;
  std::uint64_t seed = 0;  // seed of the accepted draw
  std::size_t attempts = 0;
  double game_value = 0.0;
  std::size_t pool_size = 0;  // distinct block hypotheses
  ListHypothesis reconstruction;
};

// Distinct length-d subsequences of s, in first-occurrence DFS order.
std::vector<Sample> distinct_subsequences(const Sample& s, std::size_t d, std::size_t cap = 2'000'000);

// Game value of the pool {A(S') : S' a length-d subsequence of s}.
GameSolution block_game(const LearningRule& learner, const Sample& s, std::size_t d, const BoostConfig& config);

// Smallest d <= max_d whose game value is at most epsilon ("pre-validated"),
// or nullopt.
std::optional<std::size_t> minimal_block_length(const LearningRule& learner, const Sample& s, double epsilon,
                                                std::size_t max_d, const BoostConfig& config = {});

// BoostFailure when no draw within the retry budget meets the margin
// phi_x(y) > kT/(k+1) at every sample pair. DomainError for epsilon outside
// (0, 1/(2(k+1))).
BoostResult boost_compress(const LearningRule& learner, const ConceptClass& cls, const Sample& s,
                           const BoostConfig& config);

// phi[x][y]: number of blocks whose hypothesis lists y at x.
std::vector<std::vector<std::size_t>> vote_counts(const LearningRule& learner, const Sample& compressed,
                                                  std::size_t d, std::size_t domain_size, std::size_t label_count);
// Top-k labels by vote at every point; ties go to the smaller label index.
ListHypothesis majority_vote(const LearningRule& learner, const Sample& compressed, std::size_t d, std::size_t k,
                             std::size_t domain_size, std::size_t label_count);

CompressionScheme boost_scheme(const LearningRule& learner, const ConceptClass& cls, const BoostConfig& config);

// ---- Constant-size schemes ------------------------------------------------

// Greedy consistent subsample for the class's ERM: add the first pair the
// current ERM output misses until none is missed. Padded to exactly
// max(|C| - 1, 1) pairs by repeating the last chosen pair.
CompressionScheme consistent_subsample_scheme(const ConceptClass& cls);

// rho(S) = rho1(pi1 S1) x rho2(pi2 S2) with the first part of fixed length
// d1; compression length d1 + d2. Component schemes must have fixed sizes.
CompressionScheme product_scheme(const CompressionScheme& left, const CompressionScheme& right,
                                 const ProductLayout& layout);

// rho(kappa(S)) as a learning rule.
LearningRule scheme_as_rule(const CompressionScheme& scheme);

// ---- Agnostic reduction and bounds ---------------------------------------

struct AgnosticResult {
  Sample subsample;   // max realizable subsample
  Sample compressed;
  ListHypothesis hypothesis;
  Rational loss;      // L_S(rho(kappa(S')))
  Rational best;      // min over the class of L_S(c)
};

AgnosticResult agnostic_from_realizable(const CompressionScheme& scheme, const ConceptClass& cls, const Sample& s);

struct GeneralizationBound {
  double prob_bound = 0.0;   // 2 exp(d ln n - eps^2 n)
  double curve_bound = 0.0;  // sqrt((d + 1) ln n / n) + 2 / n
};

// DomainError unless n >= 2 and 0 < eps <= 1.
GeneralizationBound generalization_bound(std::size_t d_n, std::size_t n, double eps);

// Compressed output file: {"scheme": descriptor, "pairs": [...]}.
io::Json compressed_to_json(const SchemeDescriptor& descriptor, const Sample& compressed, const ConceptClass& cls);
SchemeDescriptor descriptor_from_json(const io::Json& j);

}  // namespace listcomb
