#pragma once

// Minimal k-list covers of (partial) 1-list classes, the covering-size
// function, and the constructive cover transforms for product classes,
// minimal disambiguations and compression schemes.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "listcomb/algebra.hpp"
#include "listcomb/combinatorics.hpp"
#include "listcomb/compression.hpp"
#include "listcomb/core.hpp"

namespace listcomb {

enum class CoverMode { kExact, kGreedy };

struct CoverResult {
  std::vector<ListHypothesis> hypotheses;
  std::size_t size = 0;
  bool optimal = false;
  std::vector<std::size_t> assignment;  // concept index -> hypothesis index
};

// A group of concepts is k-compatible when every point sees at most k
// distinct defined labels; each group becomes one padded hypothesis.
// Exact mode: branch and bound, CapacityError past caps.exact_cover
// concepts. DomainError when k exceeds the label count.
CoverResult min_cover(const ConceptClass& cls, std::size_t k, CoverMode mode = CoverMode::kExact,
                      const Caps& caps = {});

// Padded k-list hypothesis covering every concept in `group`.
ListHypothesis group_hypothesis(const ConceptClass& cls, std::span<const std::size_t> group, std::size_t k);

// C_F(n, k): maximum over n-point subsets of the minimal cover size.
std::size_t covering_size(const ConceptClass& cls, std::size_t n, std::size_t k, CoverMode mode = CoverMode::kExact,
                          const Caps& caps = {});

enum class Side { kLeft, kRight };

struct ProductCoverExtraction {
  Side side = Side::kLeft;
  // k-lists over F's spaces (left) or k'-lists over G's spaces (right).
  std::vector<ListHypothesis> cover;
  // Index of the good concept whose trimmed hypotheses formed the cover.
  std::optional<std::size_t> good_concept;
  // min(|U|, |V|) * |H|.
  std::size_t bound = 0;
};

// Extracts a k-cover of F or a k'-cover of G from a (k+k')-cover H of F x G
// laid out as in `product`. InvalidCoverError if H does not cover F x G.
ProductCoverExtraction cover_from_product_cover(const ConceptClass& f, const ConceptClass& g,
                                                const std::vector<ListHypothesis>& h, std::size_t k,
                                                std::size_t k_prime);

struct DisambiguationCoverExtraction {
  std::vector<ListHypothesis> cover;  // k-lists over F's labels
  std::size_t d = 0;                  // DS_1(F)
  BigInt bound;                       // (m n)^d |Hbar|
};

// k-cover of a partial 1-list class F from a (k+1)-cover of its minimal
// disambiguation. InvalidCoverError if hbar does not cover it.
DisambiguationCoverExtraction cover_from_minimal_disambiguation(const ConceptClass& f,
                                                                const std::vector<ListHypothesis>& hbar,
                                                                std::size_t k);

struct CompressionCoverExtraction {
  std::vector<ListHypothesis> cover;  // over the restricted domain
  std::size_t d = 0;
  BigInt bound;                       // (n m)^d
};

// {rho(T) restricted to the subset : T in (subset x Y)^d} with d the
// scheme's fixed size. InvalidSchemeError if the result misses a concept.
CompressionCoverExtraction cover_from_compression(const CompressionScheme& scheme, const ConceptClass& cls,
                                                  std::span<const PointIndex> subset);

}  // namespace listcomb
