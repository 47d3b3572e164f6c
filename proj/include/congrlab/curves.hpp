// Character sums attached to y^2 = x^3 + m x + n over F_p.  The full sum is
// an exact (signed) integer, bounded by 2*sqrt(p) on nonsingular curves; the
// point count is p + 1 + that sum.
#pragma once

#include <cstdint>
#include <vector>

#include "congrlab/modmath.hpp"

namespace congrlab {

struct CubicCurve {
  int64_t m = 0;
  int64_t n = 0;
};

// chi[v] in {-1,0,+1} packed as 0,1,2: table of quadratic characters mod p.
std::vector<uint8_t> square_table(uint64_t p);
inline int chi_from_table(const std::vector<uint8_t>& tab, uint64_t v) {
  return static_cast<int>(tab[v]) - 1;
}

// sum_x ((x^3 + m x + n) / p), exact.  Pass a square_table(p) to amortize
// across many curves at the same prime.
int64_t jacobsthal_sum(const CubicCurve& c, uint64_t p, const std::vector<uint8_t>* tab = nullptr);

// |E(F_p)| including the point at infinity (also fine on singular cubics,
// where it just counts solutions).
int64_t point_count(const CubicCurve& c, uint64_t p, const std::vector<uint8_t>* tab = nullptr);

// -sum_n (n^3 + 4n^2 + 2(1-w)n)^((p-1)/2) in Z/pZ[w], w^2 = tsq: a quartic
// twist count that agrees with P_{[p/4]}(w) mod p.
QuadExt quartic_sum(uint64_t tsq, uint64_t p);

}  // namespace congrlab
