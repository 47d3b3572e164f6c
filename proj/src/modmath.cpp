#include "congrlab/modmath.hpp"

#include <algorithm>
#include <cmath>

namespace congrlab {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::optional<uint64_t> try_invmod(uint64_t a, uint64_t m) {
  // extended Euclid on (a, m); track only the coefficient of a
  int64_t t = 0, newt = 1;
  uint64_t r = m, newr = a % m;
  while (newr != 0) {
    uint64_t q = r / newr;
    int64_t tmp = t - static_cast<int64_t>(q) * newt;
    t = newt;
    newt = tmp;
    uint64_t tmpr = r - q * newr;
    r = newr;
    newr = tmpr;
  }
  if (r != 1) return std::nullopt;
  return smod(t, m);
}

uint64_t invmod(uint64_t a, uint64_t m) {
  auto r = try_invmod(a, m);
  if (!r) {
    throw not_invertible_error("no inverse of " + std::to_string(a % m) + " mod " +
                               std::to_string(m));
  }
  return *r;
}

namespace {

bool miller_rabin_round(uint64_t n, uint64_t a, uint64_t d, int s) {
  uint64_t x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; i++) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, s++;
  // deterministic witness set for n < 2^64
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
  const uint64_t kMax = 1ull << 62;
  if (lo > hi) return {};
  if (hi >= kMax) throw std::invalid_argument("primes_in_range: bound exceeds 62-bit budget");

  std::vector<uint64_t> out;
  if (hi < 1u << 22) {
    // plain sieve
    std::vector<uint8_t> comp(hi + 1, 0);
    for (uint64_t i = 2; i * i <= hi; i++) {
      if (comp[i]) continue;
      for (uint64_t j = i * i; j <= hi; j += i) comp[j] = 1;
    }
    for (uint64_t n = std::max<uint64_t>(lo, 2); n <= hi; n++) {
      if (!comp[n]) out.push_back(n);
    }
    return out;
  }

  // Segment presieved by small primes, survivors confirmed by Miller-Rabin.
  // Correct for the whole 62-bit domain without sieving to sqrt(hi).
  if (hi - lo > (1ull << 26)) {
    throw std::invalid_argument("primes_in_range: segment wider than 2^26 not supported");
  }
  auto base = primes_in_range(2, 1 << 16);
  uint64_t start = std::max<uint64_t>(lo, 2);
  std::vector<uint8_t> comp(hi - start + 1, 0);
  for (uint64_t q : base) {
    if (q * q > hi) break;
    uint64_t first = std::max(q * q, (start + q - 1) / q * q);
    for (uint64_t j = first; j <= hi; j += q) comp[j - start] = 1;
  }
  for (uint64_t n = start; n <= hi; n++) {
    if (!comp[n - start] && is_prime(n)) out.push_back(n);
  }
  return out;
}

namespace {

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(uint64_t a, uint64_t n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      uint64_t r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int legendre_symbol(int64_t a, uint64_t p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
  return jacobi(smod(a, p), p);
}

int legendre_symbol_euler(int64_t a, uint64_t p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
  uint64_t r = powmod(smod(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::optional<uint64_t> sqrt_mod(uint64_t t, uint64_t p) {
  t %= p;
  if (t == 0) return 0;
  if (jacobi(t, p) != 1) return std::nullopt;
  uint64_t r;
  if ((p & 3) == 3) {
    r = powmod(t, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks
    uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) q >>= 1, s++;
    uint64_t z = 2;
    while (jacobi(z, p) != -1) z++;
    uint64_t m = s;
    uint64_t c = powmod(z, q, p);
    uint64_t x = powmod(t, q, p);      // t^q
    r = powmod(t, (q + 1) / 2, p);
    while (x != 1) {
      uint64_t i = 0, e = x;
      while (e != 1) {
        e = mulmod(e, e, p);
        i++;
      }
      uint64_t b = powmod(c, 1ull << (m - i - 1), p);
      m = i;
      c = mulmod(b, b, p);
      x = mulmod(x, c, p);
      r = mulmod(r, b, p);
    }
  }
  return std::min(r, p - r);
}

Prime::Prime(uint64_t p) : v(p) {
  if (p >= (1ull << 62)) throw std::invalid_argument("prime exceeds 62-bit budget");
  if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

Modulus::Modulus(uint64_t prime, int exp) : p(prime), e(exp) {
  if (exp != 1 && exp != 2) throw std::invalid_argument("modulus exponent must be 1 or 2");
  m = exp == 1 ? p : p * p;  // p < 2^31 in practice for e=2; guard anyway
  if (exp == 2 && p >= (1ull << 31)) throw std::invalid_argument("p too large for p^2 modulus");
}

Residue Residue::inverse() const { return with(invmod(v_, m_.m)); }

QuadExt quadext_pow(QuadExt x, uint64_t n) {
  QuadExt r = x.one_like();
  while (n) {
    if (n & 1) r = r * x;
    x = x * x;
    n >>= 1;
  }
  return r;
}

std::vector<uint64_t> inverse_table(uint64_t n, uint64_t m) {
  std::vector<uint64_t> inv(n + 1, 0);
  if (n >= 1) inv[1] = 1 % m;
  for (uint64_t i = 2; i <= n; i++) {
    // m = q*i + r with 0 < r < i, so i^{-1} = -q * r^{-1}
    uint64_t q = m / i, r = m % i;
    inv[i] = mulmod(m - q, inv[r], m);
  }
  return inv;
}

}  // namespace congrlab
