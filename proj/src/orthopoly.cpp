#include "congrlab/orthopoly.hpp"

#include <stdexcept>
#include <vector>

namespace congrlab {

ReducedIndex reduce_index(uint64_t n, uint64_t p) {
  if (n >= 2 * p) throw std::domain_error("reduce_index: index must be below 2p");
  int xpow = 0;
  if (n >= p) {
    n -= p;
    xpow = 1;
  }
  if (n > (p - 1) / 2) n = p - 1 - n;
  return {n, xpow};
}

namespace {

template <typename R>
uint64_t scalar_modulus(const R& x);
template <>
uint64_t scalar_modulus<Residue>(const Residue& x) { return x.mod().m; }
template <>
uint64_t scalar_modulus<QuadExt>(const QuadExt& x) { return x.p(); }

// plain recurrence, n strictly below p
template <typename R>
R legendre_rec(uint64_t n, const R& x) {
  R prev = x.one_like();
  if (n == 0) return prev;
  R cur = x;
  uint64_t m = scalar_modulus(x);
  for (uint64_t k = 1; k < n; k++) {
    // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
    R next = (x * cur).scale(2 * k + 1) - prev.scale(k);
    next = next.scale(invmod((k + 1) % m, m));
    prev = cur;
    cur = next;
  }
  return cur;
}

template <typename R>
R murphy(uint64_t n, const R& x) {
  uint64_t m = scalar_modulus(x);
  uint64_t p_half = invmod(2 % m, m);
  R half = (x - x.one_like()).scale(p_half);  // (x-1)/2
  R acc = x.zero_like();
  R hp = x.one_like();                         // half^k
  uint64_t c1 = 1 % m, c2 = 1 % m;             // C(n,k), C(n+k,k)
  for (uint64_t k = 0;; k++) {
    acc = acc + hp.scale(mulmod(c1, c2, m));
    if (k == n) break;
    // C(n,k+1) = C(n,k)(n-k)/(k+1);  C(n+k+1,k+1) = C(n+k,k)(n+k+1)/(k+1)
    uint64_t ik = invmod((k + 1) % m, m);
    c1 = mulmod(mulmod(c1, (n - k) % m, m), ik, m);
    c2 = mulmod(mulmod(c2, (n + k + 1) % m, m), ik, m);
    hp = hp * half;
  }
  return acc;
}

}  // namespace

Residue legendre_eval(uint64_t n, const Residue& x) {
  uint64_t p = x.mod().p;
  if (n < p) return legendre_rec(n, x);
  if (x.mod().e != 1) throw std::domain_error("legendre_eval: index >= p requires modulus p (e=1)");
  ReducedIndex r = reduce_index(n, p);
  Residue v = legendre_rec(r.m, x);
  if (r.xpow) v = v * x.pow(p);
  return v;
}

QuadExt legendre_eval(uint64_t n, const QuadExt& x) {
  uint64_t p = x.p();
  if (n < p) return legendre_rec(n, x);
  ReducedIndex r = reduce_index(n, p);
  QuadExt v = legendre_rec(r.m, x);
  if (r.xpow) v = v * quadext_pow(x, p);
  return v;
}

Residue legendre_eval_murphy(uint64_t n, const Residue& x) {
  if (n >= x.mod().p) throw std::domain_error("legendre_eval_murphy: requires n < p");
  return murphy(n, x);
}

QuadExt legendre_eval_murphy(uint64_t n, const QuadExt& x) {
  if (n >= x.p()) throw std::domain_error("legendre_eval_murphy: requires n < p");
  return murphy(n, x);
}

Residue jacobi_eval(uint64_t n, RationalConstant alpha, RationalConstant beta, const Residue& x) {
  const Modulus& mm = x.mod();
  uint64_t m = mm.m;
  if (n >= mm.p) throw std::domain_error("jacobi_eval: requires n < p");

  Residue na = lift_rational(alpha, mm) + Residue(n % m, mm);  // n + alpha
  Residue nb = lift_rational(beta, mm) + Residue(n % m, mm);   // n + beta

  // C(n+beta, j) for j = 0..n
  std::vector<uint64_t> cb(n + 1);
  cb[0] = 1 % m;
  for (uint64_t j = 0; j + 1 <= n; j++) {
    uint64_t f = submod(nb.value(), j % m, m);
    cb[j + 1] = mulmod(mulmod(cb[j], f, m), invmod((j + 1) % m, m), m);
  }
  // (x+1)^k ascending and (x-1)^j ascending
  std::vector<uint64_t> pp(n + 1), pm(n + 1);
  uint64_t xp1 = addmod(x.value(), 1 % m, m), xm1 = submod(x.value(), 1 % m, m);
  pp[0] = pm[0] = 1 % m;
  for (uint64_t j = 1; j <= n; j++) {
    pp[j] = mulmod(pp[j - 1], xp1, m);
    pm[j] = mulmod(pm[j - 1], xm1, m);
  }

  uint64_t acc = 0, ca = 1 % m;  // C(n+alpha, k)
  for (uint64_t k = 0;; k++) {
    uint64_t term = mulmod(ca, cb[n - k], m);
    term = mulmod(term, mulmod(pp[k], pm[n - k], m), m);
    acc = addmod(acc, term, m);
    if (k == n) break;
    uint64_t f = submod(na.value(), k % m, m);
    ca = mulmod(mulmod(ca, f, m), invmod((k + 1) % m, m), m);
  }
  uint64_t scale = invmod(powmod(2 % m, n, m), m);
  return Residue(mulmod(acc, scale, m), mm);
}

Residue legendre_from_square(uint64_t n, const Residue& xsq, bool companion,
                             const std::vector<uint64_t>* inv) {
  const Modulus& mm = xsq.mod();
  if (n >= mm.p) throw std::domain_error("legendre_from_square: requires n < p");
  Residue a(n % mm.m, mm);
  RationalConstant c = companion ? make_rational(-3, 2) : make_rational(-1, 2);
  Residue b = lift_rational(c, mm) - a;  // (-1/2 - n) or (-3/2 - n)
  Residue t = Residue(1 % mm.m, mm) - xsq;
  return sum_product_binom(a, b, t, n, inv);
}

}  // namespace congrlab
