#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace edrb {

// SplitMix64 finalizer. Used to derive independent per-task seeds from a
// master seed so results do not depend on how tasks are scheduled.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(master);
  for (std::uint64_t p : path) s = splitmix64(s ^ splitmix64(p + 1));
  return s;
}

using Rng = std::mt19937_64;

}  // namespace edrb
