// Legendre and Jacobi polynomial evaluation over Z/p^eZ and over the
// quadratic extension Z/pZ[w].  The three-term recurrence divides by n+1 at
// every step, so indices at or beyond p must be folded down first; the
// folding rules are
//   P_{p-1-m}(x) == P_m(x)        (mod p),  0 <= m <= (p-1)/2
//   P_{p+m}(x)   == x^p P_m(x)    (mod p),  0 <= m <= p-1
// which reduce any index below 2p to one at most (p-1)/2.
#pragma once

#include <cstdint>
#include <utility>

#include "congrlab/modmath.hpp"
#include "congrlab/ratbinom.hpp"

namespace congrlab {

struct ReducedIndex {
  uint64_t m;  // folded index, <= (p-1)/2
  int xpow;    // 0 or 1: multiply the folded value by x^(xpow * p)
};

// Fold an index n < 2p as above; throws std::domain_error for n >= 2p.
ReducedIndex reduce_index(uint64_t n, uint64_t p);

// P_n(x) by the three-term recurrence.  For a Residue argument with e = 1 an
// index in [p, 2p) is folded automatically; e = 2 requires n < p.
Residue legendre_eval(uint64_t n, const Residue& x);
QuadExt legendre_eval(uint64_t n, const QuadExt& x);

// P_n(x) = sum_k C(n,k) C(n+k,k) ((x-1)/2)^k -- an independent route used to
// cross-check the recurrence.  Requires n < p.
Residue legendre_eval_murphy(uint64_t n, const Residue& x);
QuadExt legendre_eval_murphy(uint64_t n, const QuadExt& x);

// Jacobi polynomial P_n^{(alpha,beta)}(x) =
//   2^{-n} sum_k C(n+alpha,k) C(n+beta,n-k) (x+1)^k (x-1)^{n-k},  n < p.
Residue jacobi_eval(uint64_t n, RationalConstant alpha, RationalConstant beta, const Residue& x);

// Even/odd-index Legendre values as polynomials in the squared argument:
//   companion = false:  P_{2n}(x)      = sum_k C(n,k) C(-1/2-n,k) (1-x^2)^k
//   companion = true:   P_{2n+1}(x)/x  = sum_k C(n,k) C(-3/2-n,k) (1-x^2)^k
// `xsq` is x^2; the value is well-defined in the base ring either way.
Residue legendre_from_square(uint64_t n, const Residue& xsq, bool companion,
                             const std::vector<uint64_t>* inv = nullptr);

}  // namespace congrlab
