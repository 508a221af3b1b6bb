#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "listcomb/core.hpp"

namespace listcomb {

using BigInt = boost::multiprecision::cpp_int;

// One label per coordinate of a restricted domain.
using LabelTuple = std::vector<LabelIndex>;

BigInt binomial(std::size_t n, std::size_t r);
BigInt power(const BigInt& base, std::size_t exponent);

// Calls visit(span<const PointIndex>) for every r-subset of {0..n-1} in
// lexicographic order; stops early when visit returns true. Returns whether
// it stopped early.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t r, Visit&& visit) {
  if (r > n) return false;
  std::vector<PointIndex> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = static_cast<PointIndex>(i);
  while (true) {
    if (visit(std::span<const PointIndex>(idx))) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Concepts of cls that are defined at every point of subset.
std::vector<std::size_t> concepts_total_on(const ConceptClass& cls, std::span<const PointIndex> subset);

// Realizable label tuples of the restriction to subset: every y with
// y_i in c(x_i) for some concept c defined on all of subset. Sorted, unique.
std::vector<LabelTuple> selection_tuples(const ConceptClass& cls, std::span<const PointIndex> subset);

// Mixed-radix packing of label tuples into 64-bit codes.
class TupleCodec {
 public:
  // Throws CapacityError if radix^arity does not fit in 64 bits.
  TupleCodec(std::size_t arity, std::size_t radix);

  std::size_t arity() const { return arity_; }
  std::size_t radix() const { return radix_; }
  std::uint64_t encode(std::span<const LabelIndex> tuple) const;
  LabelTuple decode(std::uint64_t code) const;
  LabelIndex digit(std::uint64_t code, std::size_t i) const {
    return static_cast<LabelIndex>((code / weights_[i]) % radix_);
  }
  std::uint64_t weight(std::size_t i) const { return weights_[i]; }

 private:
  std::size_t arity_;
  std::size_t radix_;
  std::vector<std::uint64_t> weights_;
};

}  // namespace listcomb
