// Generalized binomial coefficients C(a,k) with rational a lifted into
// Z/p^eZ, and the incremental sum kernels built on them.  Terms are tracked
// exactly in the ring: factors like (a-k) that are multiples of p are
// multiplied in as such and never divided back out, so mod-p^2 sums stay
// correct past the point where a term first vanishes mod p.
#pragma once

#include <cstdint>
#include <vector>

#include "congrlab/modmath.hpp"

namespace congrlab {

struct RationalConstant {
  int64_t num = 0;
  int64_t den = 1;
};

// Reduced form, positive denominator.
RationalConstant make_rational(int64_t num, int64_t den);

inline RationalConstant operator""_q(unsigned long long n) {
  return RationalConstant{static_cast<int64_t>(n), 1};
}

// num * den^{-1} in Z/p^eZ; throws not_invertible_error when p | den.
Residue lift_rational(RationalConstant r, Modulus m);

// floor(num * p / den), computed exactly.
uint64_t floor_frac(uint64_t p, uint64_t num, uint64_t den);

// (p - sub) / den, asserting den | (p - sub).
uint64_t exact_frac(uint64_t p, uint64_t sub, uint64_t den);

// C(a, k) = a(a-1)...(a-k+1) / k! in the ring of a.  Requires k < p.
// When `inv` is given it must cover 1..k (inverses in a's modulus).
Residue binom_general(const Residue& a, uint64_t k, const std::vector<uint64_t>* inv = nullptr);

// sum_{k=0}^{upper} C(a,k) C(b,k) t^k.  upper < p; a, b, t share a modulus.
Residue sum_product_binom(const Residue& a, const Residue& b, const Residue& t, uint64_t upper,
                          const std::vector<uint64_t>* inv = nullptr);

// sum_{k=0}^{upper} C(a,k)^2 t^k.
Residue sum_binom_sq(const Residue& a, const Residue& t, uint64_t upper,
                     const std::vector<uint64_t>* inv = nullptr);

// sum_{k=0}^{upper} C(n,2k) C((p-1)/2, k) s^k with integer n >= 0; 2*upper < p.
Residue sum_bisected(uint64_t n, const Residue& s, uint64_t upper,
                     const std::vector<uint64_t>* inv = nullptr);

// Declarative sum description: C(a,k) C(b,k) t^k summed to a symbolic bound.
// Arguments resolve per prime: either a fixed rational lifted into the ring,
// floor(num*p/den), or the exact quotient (p-sub)/den.
struct SymArg {
  enum Kind { kRational, kFloorFrac, kExactFrac } kind = kRational;
  RationalConstant r{0, 1};
  uint64_t num = 0, den = 1, sub = 0;

  static SymArg rational(int64_t n, int64_t d = 1) { return {kRational, make_rational(n, d), 0, 1, 0}; }
  static SymArg floorfrac(uint64_t n, uint64_t d) { return {kFloorFrac, {}, n, d, 0}; }
  static SymArg exactfrac(uint64_t s, uint64_t d) { return {kExactFrac, {}, 0, d, s}; }
  uint64_t resolve_index(uint64_t p) const;  // for integer-valued kinds
  Residue resolve(Modulus m) const;
};

struct SumSpec {
  SymArg a, b;
  RationalConstant t{1, 1};
  SymArg upper;  // integer-valued kind, or kRational{num>=0} for a literal bound
};

Residue evaluate_sum(const SumSpec& s, Modulus m, const std::vector<uint64_t>* inv = nullptr);

}  // namespace congrlab
