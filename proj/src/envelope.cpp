#include "rlr/envelope.hpp"

namespace rlr {

bool PBWMonomial::operator<(const PBWMonomial& o) const {
  std::uint32_t da = degree();
  std::uint32_t db = o.degree();
  if (da != db) return da < db;
  // lexicographic on the dense exponent vectors, mirroring the ring's
  // term order: a higher exponent on an earlier letter sorts later
  auto ia = factors.begin();
  auto ib = o.factors.begin();
  while (ia != factors.end() || ib != o.factors.end()) {
    int idx_a = ia != factors.end() ? ia->first : INT32_MAX;
    int idx_b = ib != o.factors.end() ? ib->first : INT32_MAX;
    int idx = std::min(idx_a, idx_b);
    std::uint32_t ea = idx_a == idx ? ia->second : 0;
    std::uint32_t eb = idx_b == idx ? ib->second : 0;
    if (ea != eb) return ea < eb;
    if (idx_a == idx) ++ia;
    if (idx_b == idx) ++ib;
  }
  return false;
}

std::vector<PBWMonomial> restricted_basis(int rank, std::uint32_t p) {
  std::vector<PBWMonomial> out;
  std::vector<std::uint32_t> exps(rank, 0);
  for (;;) {
    PBWMonomial m;
    for (int i = 0; i < rank; ++i)
      if (exps[i] > 0) m.factors.emplace_back(i, exps[i]);
    out.push_back(std::move(m));
    int i = rank - 1;
    while (i >= 0 && exps[i] == p - 1) exps[i--] = 0;
    if (i < 0) break;
    ++exps[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rlr
