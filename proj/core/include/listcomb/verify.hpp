#pragma once

// Exact machine checks of the finite inequalities relating dimensions,
// covers and products, plus seeded random instance generators and a batch
// runner with CSV / text reporting.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "listcomb/core.hpp"
#include "listcomb/dims.hpp"

namespace listcomb {

struct VerificationReport {
  std::string lemma_id;
  std::string instance;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  // Informational rows are reported but never count as failures.
  bool informational = false;
  double elapsed_ms = 0.0;  // never serialized
};

struct GeneratorLimits {
  std::size_t max_domain = 5;
  std::size_t max_labels = 4;
  std::size_t max_class_size = 16;
  std::size_t max_k = 3;
  std::size_t min_labels = 2;
};

// Random k-list class; with `partial` each value is undefined with
// probability 1/4 and at least one concept has an undefined point.
ConceptClass random_class(std::mt19937_64& rng, const GeneratorLimits& limits, bool partial, std::size_t k = 0);

// Class {c_b : b in {0,1}^n} G_k-shattering all n points with a random
// pivot; the returned witness uses selector index b. Needs m >= k + 1.
struct ShatteredInstance {
  ConceptClass cls;
  ShatterWitness witness;
};
ShatteredInstance random_shattered_class(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t k);

// ---- Single checks --------------------------------------------------------

// |F| <= k^(n-d) sum_i C(n,i) C(m,k+1)^i  and  |F| <= k^n n^d m^((k+1)d)
// on the selection tuples F of a total k-list class over its whole domain.
std::vector<VerificationReport> check_ssp(const ConceptClass& cls, const std::string& instance = {});

// Pairwise |A_b & A_b'| k^dH <= k^n (k-1)^dH and the union bound
// 4 (2k-1)^n |U A_b| >= (2k)^n k^n for a graph-dimension witness.
std::vector<VerificationReport> check_coding_bound(const ConceptClass& cls, const ShatterWitness& witness,
                                                   const std::string& instance = {});

// 4 g^d m^((k+1)d) (2k-1)^g >= (2k)^g with g = G_k, d = DS_k.
VerificationReport check_graph_vs_ds(const ConceptClass& cls, const std::string& instance = {});

// Natarajan bounds, Littlestone additivity, both DS product bounds and the
// informational K-form, for total 1-list F and G.
std::vector<VerificationReport> check_product_dimensions(const ConceptClass& f, const ConceptClass& g, std::size_t k,
                                                         std::size_t k_prime, const std::string& instance = {});

// min(C_F(n,k), C_G(n',k')) <= min(n,n') C_FxG(nn', k+k').
VerificationReport check_direct_sum_cover(const ConceptClass& f, const ConceptClass& g, std::size_t n,
                                          std::size_t n_prime, std::size_t k, std::size_t k_prime,
                                          const std::string& instance = {});

// Extraction from an exact (k+k')-cover of F x G: the returned cover covers
// its side and respects min(|U|,|V|) |H|.
VerificationReport check_product_cover_extraction(const ConceptClass& f, const ConceptClass& g, std::size_t k,
                                                  std::size_t k_prime, const std::string& instance = {});

// Minimal-disambiguation covering inequality (and its constructive cover),
// free-disambiguation realizability equivalence on all samples up to
// `max_sample_length`, and consistency of the wrapped minimal learner.
std::vector<VerificationReport> check_disambiguation_lemmas(const ConceptClass& f, std::size_t k,
                                                            std::size_t max_sample_length = 4,
                                                            const std::string& instance = {});

// ---- Batch runner ---------------------------------------------------------

enum class Family { kSsp, kCoding, kGraphDs, kProductDims, kDirectSum, kDisambiguation };

const char* family_name(Family f);
// FormatError on an unknown name.
Family family_from_name(const std::string& name);
std::vector<Family> all_families();

// `trials` seeded instances of one family; instance i uses the stream
// derive_seed(seed, {family, i}).
std::vector<VerificationReport> run_family(Family family, std::size_t trials, std::uint64_t seed);
std::vector<VerificationReport> run_families(const std::vector<Family>& families, std::size_t trials,
                                             std::uint64_t seed);

// Sorted by lemma id, then instance; stable.
void sort_reports(std::vector<VerificationReport>& reports);
bool all_pass(const std::vector<VerificationReport>& reports);

// "lemma_id,instance,lhs,rhs,pass" (elapsed is deliberately omitted so
// reruns are byte-identical).
std::string reports_csv(const std::vector<VerificationReport>& reports);
// Per-lemma counts and every failing row.
std::string reports_summary(const std::vector<VerificationReport>& reports);

}  // namespace listcomb
