#include "congrlab/quadforms.hpp"

#include <cmath>
#include <stdexcept>

namespace congrlab {

namespace {

// integer square root via floating seed + correction
uint64_t isqrt_u64(uint64_t n) {
  if (n == 0) return 0;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool perfect_square(uint64_t n, uint64_t* root) {
  uint64_t r = isqrt_u64(n);
  if (r * r != n) return false;
  *root = r;
  return true;
}

// Cornacchia: p odd prime, 0 < d < p, returns x,y > 0 with x^2 + d y^2 = p
// when such a representation exists.
std::optional<FormRep> cornacchia(uint64_t d, uint64_t p) {
  auto r0 = sqrt_mod(static_cast<int64_t>(p - d % p), p);  // root of -d
  if (!r0) return std::nullopt;
  uint64_t b = *r0;
  if (2 * b < p) b = p - b;  // want the root in (p/2, p)
  uint64_t a = p;
  uint64_t lim = isqrt_u64(p);
  while (b > lim) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  uint64_t rem = p - b * b;
  if (rem % d != 0) return std::nullopt;
  uint64_t ysq = rem / d, y = 0;
  if (!perfect_square(ysq, &y)) return std::nullopt;
  if (b == 0 || y == 0) return std::nullopt;
  return FormRep{static_cast<int64_t>(b), static_cast<int64_t>(y)};
}

}  // namespace

std::optional<FormRep> represent_search(const QuadForm& f, uint64_t p) {
  bool four = f.kind == FormKind::kFourP || f.kind == FormKind::kFourAB;
  uint64_t target = four ? 4 * p : p;
  uint64_t a = (f.kind == FormKind::kAB || f.kind == FormKind::kFourAB) ? f.a : 1;
  for (uint64_t y = 1; f.d * y * y < target; ++y) {
    uint64_t rest = target - f.d * y * y;
    if (rest % a != 0) continue;
    uint64_t xsq = rest / a, x = 0;
    if (perfect_square(xsq, &x) && x > 0) {
      return FormRep{static_cast<int64_t>(x), static_cast<int64_t>(y)};
    }
  }
  return std::nullopt;
}

std::optional<FormRep> represent(const QuadForm& f, uint64_t p) {
  if (f.kind == FormKind::kP && f.d < p) {
    auto r = cornacchia(f.d, p);
    // d = 1: Cornacchia can emit either order; keep x odd which is what
    // every identity using p = x^2 + y^2 pins on.
    if (r && f.d == 1 && r->x % 2 == 0) std::swap(r->x, r->y);
    return r;
  }
  return represent_search(f, p);
}

int64_t normalize_sign(int64_t v, int64_t m, int64_t target) {
  uint64_t mu = static_cast<uint64_t>(m);
  uint64_t want = smod(target, mu);
  if (smod(v, mu) == want) return v;
  if (smod(-v, mu) == want) return -v;
  throw std::invalid_argument("normalize_sign: neither sign matches");
}

}  // namespace congrlab
