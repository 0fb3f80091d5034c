#pragma once

#include <cstdint>
#include <string_view>

#include "rlr/ring.hpp"

namespace rlr {

// Deterministic generator for randomized trials.  Per-check streams are
// derived from a master seed and a stable label hash so that reports are
// byte-identical across runs and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

// FNV-1a; stable across platforms, unlike std::hash
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

inline SplitMix64 seeded_for(std::uint64_t master, std::string_view label) {
  return SplitMix64(master ^ fnv1a(label));
}

// Sparse random polynomial with up to max_terms terms; exponents are capped
// at p-1 in truncated rings and at max_exp otherwise.
RingElement random_ring_element(SplitMix64& rng, const RingSpec& spec, int max_terms = 2,
                                std::uint32_t max_exp = 2);

RingElement random_nonzero_ring_element(SplitMix64& rng, const RingSpec& spec,
                                        int max_terms = 2, std::uint32_t max_exp = 2);

}  // namespace rlr
