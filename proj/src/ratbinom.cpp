#include "congrlab/ratbinom.hpp"

#include <numeric>
#include <stdexcept>

namespace congrlab {

RationalConstant make_rational(int64_t num, int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) num = -num, den = -den;
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) num /= g, den /= g;
  return {num, den};
}

Residue lift_rational(RationalConstant r, Modulus m) {
  uint64_t num = smod(r.num, m.m);
  uint64_t den = smod(r.den, m.m);
  return Residue(mulmod(num, invmod(den, m.m), m.m), m);
}

uint64_t floor_frac(uint64_t p, uint64_t num, uint64_t den) {
  if (den == 0) throw std::invalid_argument("floor_frac: zero denominator");
  return static_cast<uint64_t>(static_cast<unsigned __int128>(p) * num / den);
}

uint64_t exact_frac(uint64_t p, uint64_t sub, uint64_t den) {
  if (sub > p || (p - sub) % den != 0) {
    throw std::invalid_argument("exact_frac: " + std::to_string(den) + " does not divide p-" +
                                std::to_string(sub));
  }
  return (p - sub) / den;
}

Residue binom_general(const Residue& a, uint64_t k, const std::vector<uint64_t>* inv) {
  const Modulus& mm = a.mod();
  if (k >= mm.p) throw std::invalid_argument("binom_general: k must be < p");
  uint64_t m = mm.m;
  uint64_t acc = 1 % m;
  uint64_t av = a.value();
  for (uint64_t j = 0; j < k; j++) {
    uint64_t factor = av >= j ? av - j : av + m - j;  // j < p <= m
    acc = mulmod(acc, factor, m);
    uint64_t d = inv ? (*inv)[j + 1] : invmod(j + 1, m);
    acc = mulmod(acc, d, m);
  }
  return Residue(acc, mm);
}

namespace {

// shared kernel: sum of C(a,k) C(b,k) t^k with term ratio (a-k)(b-k)/(k+1)^2 * t
uint64_t sum_pp(uint64_t a, uint64_t b, uint64_t t, uint64_t upper, uint64_t m, uint64_t p,
                const std::vector<uint64_t>* inv) {
  if (upper >= p) throw std::invalid_argument("binomial sum upper bound must be < p");
  std::vector<uint64_t> local;
  if (!inv) {
    local = inverse_table(upper + 1, m);
    inv = &local;
  } else if (inv->size() < upper + 1) {
    throw std::invalid_argument("inverse table too small for sum");
  }
  uint64_t acc = 0, term = 1 % m;
  for (uint64_t k = 0;; k++) {
    acc = addmod(acc, term, m);
    if (k == upper || term == 0) break;
    uint64_t fa = a >= k ? a - k : a + m - k;
    uint64_t fb = b >= k ? b - k : b + m - k;
    term = mulmod(term, fa, m);
    term = mulmod(term, fb, m);
    uint64_t ik = (*inv)[k + 1];
    term = mulmod(term, mulmod(ik, ik, m), m);
    term = mulmod(term, t, m);
  }
  return acc;
}

}  // namespace

Residue sum_product_binom(const Residue& a, const Residue& b, const Residue& t, uint64_t upper,
                          const std::vector<uint64_t>* inv) {
  if (!(a.mod() == b.mod()) || !(a.mod() == t.mod())) {
    throw std::invalid_argument("sum_product_binom: modulus mismatch");
  }
  return Residue(sum_pp(a.value(), b.value(), t.value(), upper, a.mod().m, a.mod().p, inv), a.mod());
}

Residue sum_binom_sq(const Residue& a, const Residue& t, uint64_t upper,
                     const std::vector<uint64_t>* inv) {
  if (!(a.mod() == t.mod())) throw std::invalid_argument("sum_binom_sq: modulus mismatch");
  return Residue(sum_pp(a.value(), a.value(), t.value(), upper, a.mod().m, a.mod().p, inv), a.mod());
}

Residue sum_bisected(uint64_t n, const Residue& s, uint64_t upper, const std::vector<uint64_t>* inv) {
  const Modulus& mm = s.mod();
  uint64_t m = mm.m, p = mm.p;
  if (2 * upper >= p) throw std::invalid_argument("sum_bisected: 2*upper must be < p");
  std::vector<uint64_t> local;
  if (!inv) {
    local = inverse_table(2 * upper, m);
    inv = &local;
  } else if (inv->size() < 2 * upper + 1) {  // indices up to 2*upper are used
    throw std::invalid_argument("inverse table too small for bisected sum");
  }
  uint64_t h = (p - 1) / 2;  // upper argument of the second binomial
  uint64_t acc = 0, term = 1 % m;
  uint64_t sv = s.value();
  for (uint64_t k = 0;; k++) {
    acc = addmod(acc, term, m);
    if (k == upper || term == 0) break;
    if (2 * k + 2 > n) { term = 0; continue; }  // C(n, 2k+2) = 0 exactly
    // C(n,2k) -> C(n,2k+2): *(n-2k)(n-2k-1) / ((2k+1)(2k+2))
    term = mulmod(term, (n - 2 * k) % m, m);
    term = mulmod(term, (n - 2 * k - 1) % m, m);
    term = mulmod(term, (*inv)[2 * k + 1], m);
    term = mulmod(term, (*inv)[2 * k + 2], m);
    // C(h,k) -> C(h,k+1): *(h-k) / (k+1)
    term = mulmod(term, h - k, m);
    term = mulmod(term, (*inv)[k + 1], m);
    term = mulmod(term, sv, m);
  }
  return Residue(acc, mm);
}

uint64_t SymArg::resolve_index(uint64_t p) const {
  switch (kind) {
    case kRational:
      if (r.den != 1 || r.num < 0) throw std::invalid_argument("literal bound must be a non-negative integer");
      return static_cast<uint64_t>(r.num);
    case kFloorFrac:
      return floor_frac(p, num, den);
    case kExactFrac:
      return exact_frac(p, sub, den);
  }
  throw std::logic_error("unreachable");
}

Residue SymArg::resolve(Modulus m) const {
  if (kind == kRational) return lift_rational(r, m);
  return Residue(resolve_index(m.p) % m.m, m);
}

Residue evaluate_sum(const SumSpec& s, Modulus m, const std::vector<uint64_t>* inv) {
  Residue a = s.a.resolve(m);
  Residue b = s.b.resolve(m);
  Residue t = lift_rational(s.t, m);
  uint64_t upper = s.upper.resolve_index(m.p);
  return sum_product_binom(a, b, t, upper, inv);
}

}  // namespace congrlab
