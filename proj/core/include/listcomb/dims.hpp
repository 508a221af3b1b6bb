#pragma once

// Exact combinatorial dimensions of finite (list) concept classes: graph
// dimension, DS dimension via pseudo-cube peeling, Natarajan and Littlestone.
//
// Shattering is hereditary for all four notions, so the subset searches stop
// at the first size for which no subset is shattered.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "listcomb/combinatorics.hpp"
#include "listcomb/core.hpp"

namespace listcomb {

struct PseudoCubeResult {
  std::vector<LabelTuple> subset;  // sorted
  std::size_t rank = 0;            // requested rank, or 0 when subset is empty
};

// Largest subset of tuples in which every member has at least k distinct
// neighbours in every direction. Tuples differing only at coordinate i are
// i-neighbours. Throws ArityError on mixed arity, DomainError if k == 0.
PseudoCubeResult max_pseudocube(std::span<const LabelTuple> tuples, std::size_t k);

struct ShatterWitness {
  std::vector<PointIndex> points;
  // Graph dimension: the pivot label per point.
  std::optional<LabelTuple> pivot;
  // Graph / Natarajan: concept index realizing each pattern b, where bit i of
  // the index is b_i.
  std::vector<std::size_t> selectors;
  // Natarajan: the two labels offered at each point (first < second).
  std::vector<std::pair<LabelIndex, LabelIndex>> label_pairs;
  // DS: the peeled pseudo-cube.
  std::vector<LabelTuple> cube;
};

struct DimensionResult {
  std::size_t value = 0;
  std::optional<ShatterWitness> witness;  // present when value > 0
};

struct SearchLimits {
  // Largest subset size examined; 0 means the whole domain.
  std::size_t max_size = 0;
};

// DS_k: largest point set whose realizable tuples contain a rank-k
// pseudo-cube. For partial classes only concepts defined on the whole tested
// subset contribute.
DimensionResult ds_dimension(const ConceptClass& cls, std::size_t k, SearchLimits limits = {});

// G_k for a k-list class (any k). Partial classes: per-subset total subclass.
DimensionResult graph_dimension(const ConceptClass& cls, SearchLimits limits = {});

// Natarajan dimension of a total 1-list class; UnsupportedClassError otherwise.
DimensionResult natarajan_dimension(const ConceptClass& cls, SearchLimits limits = {});

// Littlestone dimension of a total 1-list class; UnsupportedClassError
// otherwise.
std::size_t littlestone_dimension(const ConceptClass& cls);

// Independent re-checks of witnesses straight from the definitions.
bool validate_graph_witness(const ConceptClass& cls, const ShatterWitness& w);
bool validate_ds_witness(const ConceptClass& cls, std::size_t k, const ShatterWitness& w);
bool validate_natarajan_witness(const ConceptClass& cls, const ShatterWitness& w);

}  // namespace listcomb
