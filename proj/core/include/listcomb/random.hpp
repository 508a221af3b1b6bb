#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace listcomb {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream splitting: the seed for (master, c0, c1, ...) depends
// only on those values, so results do not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> counters) {
  std::uint64_t s = splitmix64(master);
  for (std::uint64_t c : counters) s = splitmix64(s ^ splitmix64(c + 0x632be59bd9b4e019ULL));
  return s;
}

inline std::mt19937_64 make_stream(std::uint64_t master, std::initializer_list<std::uint64_t> counters) {
  return std::mt19937_64(derive_seed(master, counters));
}

}  // namespace listcomb
