// Modular arithmetic over Z/p^eZ (e = 1 or 2) and the quadratic extension
// Z/pZ[w] with w^2 = t.  Everything is 62-bit safe: products go through
// unsigned __int128, so p^2 < 2^124 never overflows.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace congrlab {

struct not_invertible_error : std::runtime_error {
  explicit not_invertible_error(const std::string& what) : std::runtime_error(what) {}
};

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
  a += b;  // a,b < m <= 2^62 so no wrap on one add... still guard m up to 2^63
  if (a >= m) a -= m;
  return a;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);

// Inverse of a mod m via extended Euclid; nullopt when gcd(a, m) != 1.
std::optional<uint64_t> try_invmod(uint64_t a, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m);  // throws not_invertible_error

// Reduce a signed value into [0, m).
inline uint64_t smod(int64_t v, uint64_t m) {
  int64_t r = v % static_cast<int64_t>(m);
  return r < 0 ? static_cast<uint64_t>(r + static_cast<int64_t>(m)) : static_cast<uint64_t>(r);
}

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(uint64_t n);

// Primes in [lo, hi], ascending.  Sieve of Eratosthenes when hi is small,
// a wheel-presieved segment + Miller-Rabin otherwise; bounds must be < 2^62.
std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi);

// Legendre symbol (a/p) for odd prime p: +1 / -1 / 0.  The default route is
// quadratic reciprocity (binary Jacobi algorithm); the Euler-criterion route
// is exposed separately so tests can cross-check the two.
int legendre_symbol(int64_t a, uint64_t p);
int legendre_symbol_euler(int64_t a, uint64_t p);

// Square root of t mod odd prime p (Tonelli-Shanks).  Returns the canonical
// smaller root min(r, p-r); nullopt when t is a nonresidue.
std::optional<uint64_t> sqrt_mod(uint64_t t, uint64_t p);

// A validated odd prime fitting the 62-bit budget.
struct Prime {
  uint64_t v;
  explicit Prime(uint64_t p);
};

struct Modulus {
  uint64_t p = 0;  // odd prime
  int e = 1;       // 1 or 2
  uint64_t m = 0;  // p^e

  Modulus() = default;
  Modulus(uint64_t prime, int exp);
  friend bool operator==(const Modulus& a, const Modulus& b) = default;
};

// Element of Z/p^eZ.  Mixed-modulus arithmetic is a bug, not a conversion:
// it throws.
class Residue {
 public:
  Residue() = default;
  Residue(uint64_t v, Modulus m) : v_(v % m.m), m_(m) {}

  uint64_t value() const { return v_; }
  const Modulus& mod() const { return m_; }

  Residue operator+(const Residue& o) const { return with(addmod(v_, check(o), m_.m)); }
  Residue operator-(const Residue& o) const { return with(submod(v_, check(o), m_.m)); }
  Residue operator*(const Residue& o) const { return with(mulmod(v_, check(o), m_.m)); }
  Residue operator-() const { return with(v_ == 0 ? 0 : m_.m - v_); }
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }
  bool operator==(const Residue& o) const { return v_ == check(o); }
  bool operator!=(const Residue& o) const { return !(*this == o); }

  Residue pow(uint64_t n) const { return with(powmod(v_, n, m_.m)); }
  Residue inverse() const;
  bool is_zero() const { return v_ == 0; }

  // Same-ring constants (handy for generic polynomial code).
  Residue zero_like() const { return with(0); }
  Residue one_like() const { return with(1 % m_.m); }
  Residue scale(int64_t c) const { return with(mulmod(v_, smod(c, m_.m), m_.m)); }

 private:
  Residue with(uint64_t v) const { return Residue(v, m_); }
  uint64_t check(const Residue& o) const {
    if (!(m_ == o.m_)) throw std::invalid_argument("residue modulus mismatch");
    return o.v_;
  }
  uint64_t v_ = 0;
  Modulus m_;
};

inline Residue make_residue(int64_t v, Modulus m) { return Residue(smod(v, m.m), m); }

// Element a + b*w of Z/pZ[w], w^2 = t.  A ring, not always a field: when t is
// a quadratic residue it splits, which is fine for the polynomial evaluation
// done here (divisions are by integer scalars only).
class QuadExt {
 public:
  QuadExt(uint64_t a, uint64_t b, uint64_t t, uint64_t p)
      : a_(a % p), b_(b % p), t_(t % p), p_(p) {}

  uint64_t a() const { return a_; }
  uint64_t b() const { return b_; }
  uint64_t t() const { return t_; }
  uint64_t p() const { return p_; }

  QuadExt operator+(const QuadExt& o) const {
    check(o);
    return QuadExt(addmod(a_, o.a_, p_), addmod(b_, o.b_, p_), t_, p_);
  }
  QuadExt operator-(const QuadExt& o) const {
    check(o);
    return QuadExt(submod(a_, o.a_, p_), submod(b_, o.b_, p_), t_, p_);
  }
  QuadExt operator*(const QuadExt& o) const {
    check(o);
    uint64_t a = addmod(mulmod(a_, o.a_, p_), mulmod(mulmod(b_, o.b_, p_), t_, p_), p_);
    uint64_t b = addmod(mulmod(a_, o.b_, p_), mulmod(b_, o.a_, p_), p_);
    return QuadExt(a, b, t_, p_);
  }
  bool operator==(const QuadExt& o) const { check(o); return a_ == o.a_ && b_ == o.b_; }

  QuadExt zero_like() const { return QuadExt(0, 0, t_, p_); }
  QuadExt one_like() const { return QuadExt(1, 0, t_, p_); }
  QuadExt scale(int64_t c) const {
    uint64_t cu = smod(c, p_);
    return QuadExt(mulmod(a_, cu, p_), mulmod(b_, cu, p_), t_, p_);
  }
  bool in_base() const { return b_ == 0; }
  // Base-field part; evaluation paths that promise a base value assert it here.
  uint64_t base_value() const {
    if (b_ != 0) throw std::logic_error("quadext value has nonzero extension part");
    return a_;
  }

 private:
  void check(const QuadExt& o) const {
    if (p_ != o.p_ || t_ != o.t_) throw std::invalid_argument("quadext ring mismatch");
  }
  uint64_t a_, b_, t_, p_;
};

QuadExt quadext_pow(QuadExt x, uint64_t n);

// inv[i] = i^{-1} mod m for i in 1..n (index 0 unused).  Works for m = p and
// m = p^2 as long as n < p.
std::vector<uint64_t> inverse_table(uint64_t n, uint64_t m);

}  // namespace congrlab
