#pragma once

#include <string>
#include <vector>

#include "listcomb/core.hpp"

namespace listcomb::testing {

// 1-list class from digit strings, one string per concept: "01*" means
// c(x0)=0, c(x1)=1, c(x2)=star.
inline ConceptClass digits(const std::vector<std::string>& rows, std::size_t m) {
  std::vector<ListConcept> cs;
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    std::vector<std::optional<LabelIndex>> v;
    for (char ch : row) {
      if (ch == '*') {
        v.emplace_back();
      } else {
        v.emplace_back(static_cast<LabelIndex>(ch - '0'));
      }
    }
    cs.push_back(ListConcept::from_partial_labels(v));
  }
  return ConceptClass(Domain::numbered(n), LabelSpace::numbered(m), 1, cs);
}

// Every function [n] -> [m].
inline ConceptClass full(std::size_t n, std::size_t m) {
  std::vector<std::string> rows;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  for (std::size_t c = 0; c < total; ++c) {
    std::string row;
    std::size_t v = c;
    for (std::size_t i = 0; i < n; ++i, v /= m) row.push_back(static_cast<char>('0' + v % m));
    rows.push_back(row);
  }
  return digits(rows, m);
}

// k-list class from explicit label sets.
inline ConceptClass lists(const std::vector<std::vector<LabelSet>>& rows, std::size_t m, std::size_t k) {
  std::vector<ListConcept> cs;
  for (const auto& row : rows) {
    std::vector<ListConcept::Value> v(row.begin(), row.end());
    cs.emplace_back(k, v);
  }
  return ConceptClass(Domain::numbered(rows.front().size()), LabelSpace::numbered(m), k, cs);
}

inline Sample pairs(std::initializer_list<std::pair<PointIndex, LabelIndex>> ps) {
  Sample s;
  for (auto [x, y] : ps) s.push_back({x, y});
  return s;
}

}  // namespace listcomb::testing
