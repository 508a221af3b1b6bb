#include "listcomb/combinatorics.hpp"

#include <algorithm>
#include <limits>

namespace listcomb {

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

BigInt power(const BigInt& base, std::size_t exponent) {
  BigInt result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::vector<std::size_t> concepts_total_on(const ConceptClass& cls, std::span<const PointIndex> subset) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const auto& c = cls[i];
    if (std::all_of(subset.begin(), subset.end(), [&](PointIndex x) { return c.defined(x); }))
      out.push_back(i);
  }
  return out;
}

std::vector<LabelTuple> selection_tuples(const ConceptClass& cls, std::span<const PointIndex> subset) {
  std::vector<LabelTuple> out;
  const std::size_t n = subset.size();
  const std::size_t k = cls.k();
  for (std::size_t ci : concepts_total_on(cls, subset)) {
    const auto& c = cls[ci];
    // Odometer over the k choices at each coordinate.
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      LabelTuple t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = (*c.value(subset[i]))[pick[i]];
      out.push_back(std::move(t));
      std::size_t i = 0;
      while (i < n && ++pick[i] == k) pick[i++] = 0;
      if (i == n) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TupleCodec::TupleCodec(std::size_t arity, std::size_t radix)
    : arity_(arity), radix_(std::max<std::size_t>(radix, 1)), weights_(arity) {
  std::uint64_t w = 1;
  for (std::size_t i = 0; i < arity_; ++i) {
    weights_[i] = w;
    if (w > std::numeric_limits<std::uint64_t>::max() / radix_)
      throw CapacityError("label tuples of arity " + std::to_string(arity_) + " over radix " +
                          std::to_string(radix_) + " exceed 64-bit codes");
    w *= radix_;
  }
}

std::uint64_t TupleCodec::encode(std::span<const LabelIndex> tuple) const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < arity_; ++i) code += weights_[i] * tuple[i];
  return code;
}

LabelTuple TupleCodec::decode(std::uint64_t code) const {
  LabelTuple t(arity_);
  for (std::size_t i = 0; i < arity_; ++i) t[i] = digit(code, i);
  return t;
}

}  // namespace listcomb
