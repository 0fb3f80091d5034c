#pragma once

#include <cstdint>

namespace rlr {

// Residues are kept reduced to [0, p); p is a runtime prime small enough
// that products fit in 64 bits.
using Residue = std::uint32_t;

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Residue reduce_mod(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

inline Residue add_mod(Residue a, Residue b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  if (s >= p) s -= p;
  return static_cast<Residue>(s);
}

inline Residue sub_mod(Residue a, Residue b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<Residue>(a + p - b);
}

inline Residue mul_mod(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>(std::uint64_t(a) * b % p);
}

inline Residue neg_mod(Residue a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline Residue pow_mod(Residue a, std::uint64_t e, std::uint32_t p) {
  Residue r = 1 % p;
  Residue base = a;
  while (e) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

// p prime, a nonzero mod p
inline Residue inv_mod(Residue a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

}  // namespace rlr
