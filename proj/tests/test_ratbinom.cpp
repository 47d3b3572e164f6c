#include "doctest.h"

#include <cstdint>
#include <vector>

#include "congrlab/ratbinom.hpp"

using namespace congrlab;

namespace {

// Direct product formula for C(r,k) mod m, no shared code with the kernels:
// C(num/den, k) = prod_{j<k} (num - j*den) / (den^k k!).
uint64_t direct_rational_binom(int64_t num, int64_t den, uint64_t k, uint64_t m) {
  uint64_t top = 1, bot = 1;
  for (uint64_t j = 0; j < k; ++j) {
    top = mulmod(top, smod(num - static_cast<int64_t>(j) * den, m), m);
    bot = mulmod(bot, mulmod(smod(den, m), (j + 1) % m, m), m);
  }
  return mulmod(top, invmod(bot, m), m);
}

}  // namespace

TEST_CASE("make_rational reduces") {
  auto r = make_rational(6, -4);
  CHECK(r.num == -3);
  CHECK(r.den == 2);
  auto z = make_rational(0, 5);
  CHECK(z.num == 0);
  CHECK(z.den == 1);
}

TEST_CASE("lift_rational") {
  Modulus m7(7, 1), m49(7, 2);
  CHECK(lift_rational(make_rational(-1, 3), m7).value() == 2);
  CHECK(lift_rational(make_rational(-1, 3), m49).value() == 16);
  CHECK(lift_rational(make_rational(5, 1), m7).value() == 5);
  CHECK_THROWS_AS(lift_rational(make_rational(1, 7), m49), not_invertible_error);
  // lifted value actually satisfies den*x = num
  auto x = lift_rational(make_rational(-5, 12), m49);
  CHECK(x.scale(12).value() == smod(-5, 49));
}

TEST_CASE("floor_frac and exact_frac") {
  CHECK(floor_frac(19, 1, 4) == 4);
  CHECK(floor_frac(19, 1, 6) == 3);
  CHECK(floor_frac(19, 5, 12) == 7);
  CHECK(floor_frac(19, 1, 1) == 19);
  CHECK(floor_frac(1000003, 3, 8) == 375001);
  CHECK(exact_frac(19, 1, 2) == 9);
  CHECK(exact_frac(19, 1, 3) == 6);
  CHECK(exact_frac(19, 1, 6) == 3);
}

TEST_CASE("binom_general matches direct formula") {
  for (uint64_t p : {7ull, 19ull, 101ull}) {
    for (int e = 1; e <= 2; ++e) {
      Modulus m(p, e);
      for (auto [num, den] : std::vector<std::pair<int64_t, int64_t>>{
               {5, 1}, {-1, 2}, {-1, 3}, {-5, 12}, {-7, 12}, {-3, 8}}) {
        if (den % static_cast<int64_t>(p) == 0) continue;
        auto a = lift_rational(make_rational(num, den), m);
        for (uint64_t k = 0; k < std::min<uint64_t>(p, 12); ++k) {
          CHECK(binom_general(a, k).value() == direct_rational_binom(num, den, k, m.m));
        }
      }
    }
  }
}

TEST_CASE("integer binomial sanity and C(-1/2,k)") {
  Modulus m(101, 1);
  auto five = make_residue(5, m);
  CHECK(binom_general(five, 2).value() == 10);
  CHECK(binom_general(five, 5).value() == 1);
  CHECK(binom_general(five, 6).value() == 0);  // exact zero from factor (5-5)
  // C(-1/2,k) = C(2k,k)/(-4)^k
  auto half = lift_rational(make_rational(-1, 2), m);
  uint64_t c2kk = 1;  // C(0,0)
  for (uint64_t k = 0; k <= 10; ++k) {
    uint64_t rhs = mulmod(c2kk, invmod(powmod(smod(-4, m.m), k, m.m), m.m), m.m);
    CHECK(binom_general(half, k).value() == rhs);
    // C(2k+2,k+1) = C(2k,k) * (2k+1)(2k+2)/(k+1)^2
    c2kk = mulmod(c2kk, mulmod((2 * k + 1) % m.m, (2 * k + 2) % m.m, m.m), m.m);
    c2kk = mulmod(c2kk, invmod(mulmod(k + 1, k + 1, m.m), m.m), m.m);
  }
  // truncation property: C((p-1)/2, k) == C(-1/2, k) mod p
  auto hres = make_residue(50, m);
  for (uint64_t k = 0; k <= 50; ++k) {
    CHECK(binom_general(hres, k).value() == binom_general(half, k).value());
  }
}

TEST_CASE("sum kernels match naive loops") {
  for (uint64_t p : {13ull, 29ull, 97ull}) {
    for (int e = 1; e <= 2; ++e) {
      Modulus m(p, e);
      auto inv = inverse_table(p, m.m);
      auto a = lift_rational(make_rational(-1, 3), m);
      auto b = lift_rational(make_rational(-1, 6), m);
      for (int64_t tv : {1, 2, -4, 9}) {
        auto t = make_residue(tv, m);
        uint64_t upper = p - 1;
        auto got = sum_product_binom(a, b, t, upper, &inv);
        Residue want = a.zero_like();
        for (uint64_t k = 0; k <= upper; ++k) {
          want += binom_general(a, k) * binom_general(b, k) * t.pow(k);
        }
        CHECK(got.value() == want.value());
        auto gotsq = sum_binom_sq(a, t, upper, &inv);
        Residue wantsq = a.zero_like();
        for (uint64_t k = 0; k <= upper; ++k) {
          auto c = binom_general(a, k);
          wantsq += c * c * t.pow(k);
        }
        CHECK(gotsq.value() == wantsq.value());
      }
    }
  }
}

TEST_CASE("sum_bisected matches naive loop") {
  for (uint64_t p : {13ull, 19ull, 97ull}) {
    Modulus m(p, 1);
    uint64_t h = (p - 1) / 2;
    auto hres = make_residue(static_cast<int64_t>(h), m);
    for (uint64_t n : {p / 3, p / 4, p / 2, h}) {
      for (int64_t sv : {1, 2, -3}) {
        auto s = make_residue(sv, m);
        uint64_t upper = n / 2;
        auto got = sum_bisected(n, s, upper);
        Residue want = s.zero_like();
        auto nres = make_residue(static_cast<int64_t>(n), m);
        for (uint64_t k = 0; k <= upper; ++k) {
          want += binom_general(nres, 2 * k) * binom_general(hres, k) * s.pow(k);
        }
        CHECK(got.value() == want.value());
      }
    }
  }
}

TEST_CASE("mod p^2 sum against independent bignum-free oracle") {
  // p = 7: sum_{k=0}^{6} C(-1/3,k) C(-1/6,k) 9^k mod 49, each coefficient
  // from the exact integer products  C(-1/3,k) = (-1)^k (1*4*7*...*(3k-2)) / (3^k k!)
  uint64_t p = 7, pp = 49;
  Modulus m(p, 2);
  auto inv = inverse_table(p, pp);
  auto a = lift_rational(make_rational(-1, 3), m);
  auto b = lift_rational(make_rational(-1, 6), m);
  auto got = sum_product_binom(a, b, make_residue(9, m), p - 1, &inv);
  uint64_t want = 0;
  for (uint64_t k = 0; k <= 6; ++k) {
    unsigned __int128 top1 = 1, top2 = 1, fact = 1;
    for (uint64_t j = 0; j < k; ++j) {
      top1 *= 3 * j + 1;  // -1/3 - j = -(3j+1)/3
      top2 *= 6 * j + 1;  // -1/6 - j = -(6j+1)/6
      fact *= j + 1;
    }
    uint64_t num = mulmod(static_cast<uint64_t>(top1 % pp), static_cast<uint64_t>(top2 % pp), pp);
    uint64_t den = mulmod(powmod(18, k, pp), mulmod(static_cast<uint64_t>(fact % pp),
                                                    static_cast<uint64_t>(fact % pp), pp), pp);
    uint64_t term = mulmod(num, invmod(den, pp), pp);  // sign (-1)^k twice cancels
    want = addmod(want, mulmod(term, powmod(9, k, pp), pp), pp);
  }
  CHECK(got.value() == want);
}

TEST_CASE("evaluate_sum resolves symbolic arguments") {
  // floor-indexed sum: sum_{k<=[p/6]} C([p/3],k) C([p/6],k) (-4)^k at p = 19
  SumSpec spec{SymArg::floorfrac(1, 3), SymArg::floorfrac(1, 6), make_rational(-4, 1),
               SymArg::floorfrac(1, 6)};
  Modulus m(19, 1);
  CHECK(evaluate_sum(spec, m).value() == 15);
  // rational arguments with literal upper bound
  SumSpec spec2{SymArg::rational(-1, 3), SymArg::rational(-1, 6), make_rational(-4, 1),
                SymArg::exactfrac(1, 6)};
  CHECK(evaluate_sum(spec2, Modulus(19, 1)).value() ==
        sum_product_binom(lift_rational(make_rational(-1, 3), m),
                          lift_rational(make_rational(-1, 6), m), make_residue(-4, m), 3)
            .value());
  CHECK(SymArg::floorfrac(1, 6).resolve_index(19) == 3);
  CHECK(SymArg::exactfrac(1, 6).resolve_index(19) == 3);
  CHECK(SymArg::rational(4).resolve_index(19) == 4);
}
