#include "congrlab/curves.hpp"

namespace congrlab {

std::vector<uint8_t> square_table(uint64_t p) {
  std::vector<uint8_t> tab(p, 0);  // 0 -> chi = -1
  tab[0] = 1;                      // chi(0) = 0
  for (uint64_t x = 1; x <= (p - 1) / 2; x++) {
    tab[mulmod(x, x, p)] = 2;      // chi = +1
  }
  return tab;
}

int64_t jacobsthal_sum(const CubicCurve& c, uint64_t p, const std::vector<uint8_t>* tab) {
  std::vector<uint8_t> local;
  if (!tab) {
    local = square_table(p);
    tab = &local;
  }
  uint64_t m = smod(c.m, p), n = smod(c.n, p);
  int64_t s = 0;
  for (uint64_t x = 0; x < p; x++) {
    uint64_t v = mulmod(x, addmod(mulmod(x, x, p), m, p), p);  // x^3 + m x
    v = addmod(v, n, p);
    s += chi_from_table(*tab, v);
  }
  return s;
}

int64_t point_count(const CubicCurve& c, uint64_t p, const std::vector<uint8_t>* tab) {
  return static_cast<int64_t>(p) + 1 + jacobsthal_sum(c, p, tab);
}

QuadExt quartic_sum(uint64_t tsq, uint64_t p) {
  QuadExt acc(0, 0, tsq, p);
  uint64_t e = (p - 1) / 2;
  for (uint64_t n = 0; n < p; n++) {
    // n^3 + 4n^2 + 2n - 2n*w
    uint64_t n2 = mulmod(n, n, p);
    uint64_t a = addmod(mulmod(n2, n, p), mulmod(4 % p, n2, p), p);
    a = addmod(a, mulmod(2 % p, n, p), p);
    uint64_t b = p - mulmod(2 % p, n, p);
    if (b == p) b = 0;
    acc = acc + quadext_pow(QuadExt(a, b, tsq, p), e);
  }
  return acc.zero_like() - acc;
}

}  // namespace congrlab
