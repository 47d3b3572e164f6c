// Claims T6.1-T6.4 and CJ6.1-CJ6.12: full sums C(-1/3,k)^2 m^k,
// C(-1/4,k)^2 m^k and mixed (-1/4,-1/2), (-1/2,-1/3), (-1/2,-1/6) sums
// against p = A^2+3B^2, x^2+y^2, x^2+2y^2, x^2+7y^2 and 4p = L^2+27M^2.
#include <string>

#include "claims_detail.hpp"

namespace congrlab::detail {

namespace {

int sgn_pow(int64_t e) {  // (-1)^e with e possibly negative
  return (e % 2 + 2) % 2 ? -1 : 1;
}

// v - mul*p/den mod p^2
Residue sr(Ctx& c, int64_t v, int64_t mul, int64_t den) {
  return c.res(v, 2) - c.res(static_cast<int64_t>(c.p()), 2).scale(mul) *
                           c.res(den, 2).inverse();
}

void fail_missing6(Ctx& c, const Residue& lhs) {
  c.emit("missing representation", lhs, lhs + lhs.one_like());
}

void eval_t61(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("T6.1", p, seed, out);
  auto s1 = c.sum2({-1, 3}, {-1, 3}, {9, 1}, p - 1);
  auto s2 = c.sum2({-1, 3}, {-1, 3}, {1, 9}, p - 1) * c.res(3).pow(p / 3).inverse();
  if (p % 3 == 2) {
    c.emit("p%3=2 S1", s1, 0);
    c.emit("p%3=2 S2", s2, 0);
    return;
  }
  auto rep = c.rep_4p(27);
  if (!rep) return fail_missing6(c, s1);
  int64_t l = normalize_sign(rep->x, 3, 2);
  auto anchor = c.res(l);
  auto& r1 = c.emit("p%3=1 S1", s1, anchor);
  r1.sign_resolved = "L==2 mod 3";
  Ctx::attach(r1, "4p", 1, 27, l, rep->y);
  c.emit("p%3=1 S2", s2, anchor);
}

void eval_cj61(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.1", p, seed, out);
  auto s = c.sum2({-1, 3}, {-1, 3}, {9, 1}, p - 1, 2);
  auto rep = c.rep_4p(27);
  if (!rep) return fail_missing6(c, s);
  int64_t l = normalize_sign(rep->x, 3, 2);
  auto& rec = c.emit("4p=L^2+27M^2", s, sr(c, l, 1, l));
  rec.sign_resolved = "L==2 mod 3";
  Ctx::attach(rec, "4p", 1, 27, l, rep->y);
}

void eval_t62(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("T6.2", p, seed, out);
  auto sa = c.sum2({-1, 4}, {-1, 4}, {-8, 1}, p - 1);
  auto sb = c.sum2({-1, 4}, {-1, 4}, {-1, 8}, p - 1);
  if (p % 4 == 3) {
    c.emit("p%4=3 S1", sa, 0);
    c.emit("p%4=3 S2", sb, 0);
    return;
  }
  auto rep = c.rep_p(1);
  if (!rep) return fail_missing6(c, sa);
  int64_t x = normalize_sign(rep->x, 4, 1), y = rep->y;
  auto& ra = c.emit("p%4=1 S1", sa, c.res(2 * x).scale(sgn_pow((p - 1) / 4)));
  ra.sign_resolved = "x==1 mod 4";
  Ctx::attach(ra, "p", 1, 1, x, y);
  if (p % 8 == 1) {
    auto& rb = c.emit("p%8=1 S2", sb, c.res(2 * x).scale(sgn_pow(y / 4)));
    rb.sign_resolved = "x==1 mod 4";
    Ctx::attach(rb, "p", 1, 1, x, y);
  } else {
    auto& rb = c.emit("p%8=5 S2", sb, c.res(2 * y).scale(sgn_pow((y - 2) / 4)));
    Ctx::attach(rb, "p", 1, 1, x, y);
  }
}

void eval_cj62(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.2", p, seed, out);
  auto sa = c.sum2({-1, 4}, {-1, 4}, {-8, 1}, p - 1, 2);
  auto sb = c.sum2({-1, 4}, {-1, 4}, {-1, 8}, p - 1, 2);
  auto rep = c.rep_p(1);
  if (!rep) return fail_missing6(c, sa);
  int64_t x = normalize_sign(rep->x, 4, 1), y = rep->y;
  auto& ra = c.emit("S1", sa, sr(c, 2 * x, 1, 2 * x).scale(sgn_pow((p - 1) / 4)));
  ra.sign_resolved = "x==1 mod 4";
  Ctx::attach(ra, "p", 1, 1, x, y);
  if (p % 8 == 1) {
    auto& rb = c.emit("p%8=1 S2", sb, sr(c, 2 * x, 1, 2 * x).scale(sgn_pow(y / 4)));
    rb.sign_resolved = "x==1 mod 4";
    Ctx::attach(rb, "p", 1, 1, x, y);
  } else {
    auto& rb = c.emit("p%8=5 S2", sb, sr(c, 2 * y, 1, 2 * y).scale(sgn_pow((y - 2) / 4)));
    Ctx::attach(rb, "p", 1, 1, x, y);
  }
}

void eval_t63(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("T6.3", p, seed, out);
  auto s1 = c.sum2({-1, 4}, {-1, 4}, {4, 1}, p - 1);
  auto s2 = c.sum2({-1, 4}, {-1, 4}, {1, 4}, p - 1)
                .scale((p % 4 == 1 ? 1 : 2) * c.leg(2));
  if (p % 3 == 2) {
    c.emit("p%3=2 S1", s1, 0);
    c.emit("p%3=2 S2", s2, 0);
    return;
  }
  auto rep = c.rep_p(3);
  if (!rep) return fail_missing6(c, s1);
  Residue anchor = c.res(0);
  std::string label;
  int64_t ax = rep->x, ay = rep->y;
  if (p % 12 == 1) {
    ax = normalize_sign(rep->x, 3, 1);
    anchor = c.res(2 * ax).scale(sgn_pow((p - 1) / 4 + (ax - 1) / 2));
    label = "p%12=1";
  } else {
    ay = normalize_sign(rep->y, 4, 1);
    anchor = c.res(6 * ay).scale(sgn_pow((p + 1) / 4));
    label = "p%12=7";
  }
  auto& r1 = c.emit(label + " S1", s1, anchor);
  Ctx::attach(r1, "p", 1, 3, ax, ay);
  c.emit(label + " S2", s2, anchor);
}

void eval_cj63(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.3", p, seed, out);
  auto s1 = c.sum2({-1, 4}, {-1, 4}, {4, 1}, p - 1, 2);
  auto s2 = c.sum2({-1, 4}, {-1, 2}, {-8, 1}, p - 1, 2);
  auto s3 = c.sum2({-1, 4}, {-1, 4}, {1, 4}, p - 1, 2);
  auto rep = c.rep_p(3);
  if (!rep) return fail_missing6(c, s1);
  Residue anchor_a = c.res(0, 2), anchor_b = c.res(0, 2);
  std::string label;
  int64_t ax = rep->x, ay = rep->y;
  if (p % 12 == 1) {
    ax = normalize_sign(rep->x, 3, 1);
    anchor_a = sr(c, 2 * ax, 1, 2 * ax).scale(sgn_pow((p - 1) / 4 + (ax - 1) / 2));
    anchor_b = sr(c, 2 * ax, 1, 2 * ax).scale(sgn_pow((ax - 1) / 2));
    label = "p%12=1";
  } else {
    anchor_a = sr(c, 6 * ay, 1, 2 * ay).scale(sgn_pow((p + 1) / 4 + (ay - 1) / 2));
    anchor_b = sr(c, 3 * ay, 1, 4 * ay).scale(sgn_pow((ay - 1) / 2));
    label = "p%12=7";
  }
  auto& r1 = c.emit(label + " S1", s1, anchor_a);
  Ctx::attach(r1, "p", 1, 3, ax, ay);
  c.emit(label + " S2", s2, anchor_a);
  c.emit(label + " S3", s3, anchor_b);
}

void eval_t64(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("T6.4", p, seed, out);
  auto s1 = c.sum2({-1, 4}, {-1, 4}, {64, 1}, p - 1);
  auto s2 = c.sum2({-1, 4}, {-1, 4}, {1, 64}, p - 1)
                .scale((p % 4 == 1 ? 1 : 8) * c.leg(2));
  uint64_t r7 = p % 7;
  if (r7 == 3 || r7 == 5 || r7 == 6) {
    c.emit("p%7=3,5,6 S1", s1, 0);
    c.emit("p%7=3,5,6 S2", s2, 0);
    return;
  }
  auto rep = c.rep_p(7);
  if (!rep) return fail_missing6(c, s1);
  int64_t x = rep->x, y = rep->y;
  Residue anchor = p % 4 == 1 ? c.res(2 * x).scale(sgn_pow((p - 1) / 4 + (x - 1) / 2))
                              : c.res(42 * y).scale(sgn_pow((p + 1) / 4 + (y - 1) / 2));
  std::string label = p % 4 == 1 ? "p%4=1" : "p%4=3";
  auto& r1 = c.emit(label + " S1", s1, anchor);
  Ctx::attach(r1, "p", 1, 7, x, y);
  c.emit(label + " S2", s2, anchor);
}

void eval_cj64(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.4", p, seed, out);
  auto s1 = c.sum2({-1, 4}, {-1, 4}, {64, 1}, p - 1, 2);
  auto s2 = c.sum2({-1, 4}, {-1, 4}, {1, 64}, p - 1, 2);
  auto rep = c.rep_p(7);
  if (!rep) return fail_missing6(c, s1);
  int64_t x = rep->x, y = rep->y;
  Residue anchor_a = c.res(0, 2), anchor_b = c.res(0, 2);
  std::string label;
  if (p % 4 == 1) {
    int s = sgn_pow((x - 1) / 2);
    anchor_a = sr(c, 2 * x, 1, 2 * x).scale(s * c.leg(2));
    anchor_b = sr(c, 2 * x, 1, 2 * x).scale(s);
    label = "p%4=1";
  } else {
    int s = sgn_pow((y - 1) / 2);
    anchor_a = sr(c, 42 * y, 3, 2 * y).scale(s * c.leg(2));
    anchor_b = (sr(c, 7 * y, 1, 4 * y) * c.frac(3, 4, 2)).scale(s);
    label = "p%4=3";
  }
  auto& r1 = c.emit(label + " S1", s1, anchor_a);
  Ctx::attach(r1, "p", 1, 7, x, y);
  c.emit(label + " S2", s2, anchor_b);
}

void eval_cj65(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.5", p, seed, out);
  uint64_t r8 = p % 8;
  if (r8 == 5 || r8 == 7) {
    c.emit("p%8=5,7", c.sum2({-1, 4}, {-1, 4}, {-1, 1}, p - 1), 0);
    return;
  }
  auto s = c.sum2({-1, 4}, {-1, 4}, {-1, 1}, p - 1, 2);
  auto rep = c.rep_p(2);
  if (!rep) return fail_missing6(c, s);
  int64_t x = rep->x, y = rep->y;
  // p%8=1 sign exponent is (x-1)/2 + y/2, not (x+1)/2: the latter flips at
  // e.g. p = 41 (x = 3, y = 4).  Fitted and checked on all p < 3000.
  Residue anchor = r8 == 1 ? sr(c, 2 * x, 1, 2 * x).scale(sgn_pow((x - 1) / 2 + y / 2))
                           : sr(c, 4 * y, 1, 2 * y).scale(sgn_pow((y - 1) / 2));
  auto& rec = c.emit(r8 == 1 ? "p%8=1" : "p%8=3", s, anchor);
  Ctx::attach(rec, "p", 1, 2, x, y);
}

void eval_cj66(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.6", p, seed, out);
  if (p % 4 == 3) {
    c.emit("p%4=3 S1", c.sum2({-1, 4}, {-1, 2}, {1, 4}, p - 1, 2), c.res(0, 2));
    c.emit("p%4=3 S2", c.sum2({-1, 2}, {-1, 6}, {2, 1}, p - 1), 0);
    return;
  }
  auto s1 = c.sum2({-1, 4}, {-1, 2}, {1, 4}, p - 1, 2);
  auto s2 = c.sum2({-1, 2}, {-1, 6}, {2, 1}, p - 1, 2)
                .scale(legendre_symbol(static_cast<int64_t>(p), 3));
  auto rep = c.rep_p(1);
  if (!rep) return fail_missing6(c, s1);
  int64_t x = rep->x, y = rep->y;
  if (p % 12 == 1) {
    // extra 3|y term in the exponent: without it the sign flips at p = 37,
    // 61 (y = 6) but not p = 13 (y = 2).  Fitted and checked on all p < 3000.
    Residue anchor = sr(c, 2 * x, 1, 2 * x)
                         .scale(sgn_pow((p - 1) / 4 + (x + 1) / 2 + (y % 3 == 0 ? 1 : 0)));
    auto& r1 = c.emit("p%12=1 S1", s1, anchor);
    Ctx::attach(r1, "p", 1, 1, x, y);
    c.emit("p%12=1 S2", s2, anchor);
  } else {
    auto rhs_of = [&](int64_t yv) { return sr(c, 2 * yv, 1, 2 * yv); };
    auto& r1 = c.emit_two_sided("p%12=5 S1", s1, rhs_of, y, "y");
    Ctx::attach(r1, "p", 1, 1, x, y);
    c.emit_two_sided("p%12=5 S2", s2, rhs_of, y, "y");
  }
}

void eval_cj67(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.7", p, seed, out);
  if (p % 4 == 3) {
    c.emit("p%4=3 S1", c.sum2({-1, 4}, {-1, 2}, {-1, 3}, p - 1), 0);
    c.emit("p%4=3 S2", c.sum2({-1, 4}, {-1, 2}, {1, 81}, p - 1), 0);
    return;
  }
  auto s1 = c.sum2({-1, 4}, {-1, 2}, {-1, 3}, p - 1, 2);
  auto s2 = c.sum2({-1, 4}, {-1, 2}, {1, 81}, p - 1, 2).scale(sgn_pow((p - 1) / 4));
  auto rep = c.rep_p(1);
  if (!rep) return fail_missing6(c, s1);
  auto rhs_of = [&](int64_t xv) { return sr(c, 2 * xv, 1, 2 * xv); };
  auto& r1 = c.emit_two_sided("p%4=1 S1", s1, rhs_of, rep->x, "x");
  Ctx::attach(r1, "p", 1, 1, rep->x, rep->y);
  c.emit_two_sided("p%4=1 S2", s2, rhs_of, rep->x, "x");
}

void eval_cj68(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.8", p, seed, out);
  if (p % 4 == 3) {
    c.emit("p%4=3", c.sum2({-1, 4}, {-1, 2}, {-1, 80}, p - 1), 0);
    return;
  }
  auto s = c.sum2({-1, 4}, {-1, 2}, {-1, 80}, p - 1, 2);
  auto rep = c.rep_p(1);
  if (!rep) return fail_missing6(c, s);
  uint64_t r5 = p % 5;
  if (r5 == 1 || r5 == 4) {
    auto rhs_of = [&](int64_t xv) { return sr(c, 2 * xv, 1, 2 * xv); };
    auto& rec = c.emit_two_sided("p%5=1,4", s, rhs_of, rep->x, "x");
    Ctx::attach(rec, "p", 1, 1, rep->x, rep->y);
  } else {
    auto rhs_of = [&](int64_t yv) { return sr(c, 2 * yv, 1, 2 * yv); };
    auto& rec = c.emit_two_sided("p%5=2,3", s, rhs_of, rep->y, "y");
    Ctx::attach(rec, "p", 1, 1, rep->x, rep->y);
  }
}

void eval_cj69(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.9", p, seed, out);
  if (p % 8 == 5 || p % 8 == 7) {
    c.emit("p%8=5,7", c.sum2({-1, 4}, {-1, 2}, {2, 1}, p - 1), 0);
    return;
  }
  auto s = c.sum2({-1, 4}, {-1, 2}, {2, 1}, p - 1, 2);
  auto rep = c.rep_p(2);
  if (!rep) return fail_missing6(c, s);
  int64_t x = normalize_sign(rep->x, 4, 1);
  auto& rec = c.emit("p%8=1,3", s, sr(c, 2 * x, 1, 2 * x));
  rec.sign_resolved = "x==1 mod 4";
  Ctx::attach(rec, "p", 1, 2, x, rep->y);
}

void eval_cj610(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.10", p, seed, out);
  if (p % 3 == 2) {
    c.emit("p%3=2 S1", c.sum2({-1, 2}, {-1, 3}, {-3, 1}, p - 1), 0);
    c.emit("p%3=2 S2", c.sum2({-1, 2}, {-1, 3}, {-1, 27}, p - 1), 0);
    c.emit("p%3=2 S3", c.sum2({-1, 2}, {-2, 3}, {-1, 4}, p - 1), 0);
    c.emit("p%3=2 S4", c.sum2({-1, 2}, {-1, 3}, {1, 5}, p - 1), 0);
    c.emit("p%3=2 S5", c.sum2({-1, 2}, {-1, 3}, {2, 1}, p - 1), 0);
    return;
  }
  auto s1 = c.sum2({-1, 2}, {-1, 3}, {-3, 1}, p - 1, 2);
  auto s2 = c.sum2({-1, 2}, {-1, 3}, {-1, 27}, p - 1, 2);
  auto s3 = c.sum2({-1, 2}, {-2, 3}, {-1, 4}, p - 1, 2);
  auto s4 = c.sum2({-1, 2}, {-1, 3}, {1, 5}, p - 1, 2)
                .scale(legendre_symbol(static_cast<int64_t>(p), 5));
  auto s5 = c.sum2({-1, 2}, {-1, 3}, {2, 1}, p - 1, 2).scale(c.leg(-1));
  auto rep = c.rep_p(3);
  if (!rep) return fail_missing6(c, s1);
  int64_t a = normalize_sign(rep->x, 3, 1);
  auto anchor = sr(c, 2 * a, 1, 2 * a);
  auto& r1 = c.emit("p%3=1 S1", s1, anchor);
  r1.sign_resolved = "A==1 mod 3";
  Ctx::attach(r1, "p", 1, 3, a, rep->y);
  c.emit("p%3=1 S2", s2, anchor);
  c.emit("p%3=1 S3", s3, anchor);
  c.emit("p%3=1 S4", s4, anchor);
  c.emit("p%3=1 S5", s5, anchor);
}

void eval_cj611(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.11", p, seed, out);
  if (p % 3 == 2) {
    c.emit("p%3=2", c.sum2({-1, 2}, {-1, 3}, {-1, 4}, p - 1), 0);
    return;
  }
  auto s = c.sum2({-1, 2}, {-1, 3}, {-1, 4}, p - 1, 2);
  auto rep = c.rep_p(3);
  if (!rep) return fail_missing6(c, s);
  int64_t a = normalize_sign(rep->x, 3, 1), b = rep->y;
  int leg5 = legendre_symbol(static_cast<int64_t>(p), 5);
  int64_t ar = smod(a, 5), br = smod(b, 5);
  if (ar == 0 || br == 0) {
    auto& rec = c.emit("5|AB", s, sr(c, 2 * a, 1, 2 * a).scale(leg5));
    rec.sign_resolved = "A==1 mod 3";
    Ctx::attach(rec, "p", 1, 3, a, b);
  } else {
    uint64_t ratio = mulmod(static_cast<uint64_t>(ar), invmod(static_cast<uint64_t>(br), 5), 5);
    int64_t b0 = (ratio == 3 || ratio == 4) ? b : -b;
    // this branch takes -(p/5), not (p/5): every one of the 142 applicable
    // p < 3000 needs the flip (first at p = 7: sum = -6, A+3B = 1)
    auto& rec = c.emit("A/B=3,4 mod 5", s, sr(c, a + 3 * b0, 1, a + 3 * b0).scale(-leg5));
    rec.sign_resolved = "A==1 mod 3 A/B==3,4 mod 5";
    Ctx::attach(rec, "p", 1, 3, a, b0);
  }
}

void eval_cj612(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ6.12", p, seed, out);
  if (p % 3 == 2) {
    c.emit("p%3=2", c.sum2({-1, 2}, {-1, 6}, {-3, 125}, p - 1), 0);
    return;
  }
  auto s = c.sum2({-1, 2}, {-1, 6}, {-3, 125}, p - 1, 2);
  auto rep = c.rep_p(3);
  if (!rep) return fail_missing6(c, s);
  int64_t a = normalize_sign(rep->x, 3, 1);
  auto rhs_of = [&](int64_t av) { return sr(c, 2 * av, 1, 2 * av); };
  auto& rec = c.emit_two_sided("p%3=1", s, rhs_of, a, "A");
  Ctx::attach(rec, "p", 1, 3, a, rep->y);
}

constexpr uint64_t kP2Cap6 = uint64_t{1} << 31;

}  // namespace

void register_t6_claims(std::vector<ClaimDef>& defs) {
  defs.push_back({"T6.1", ClaimKind::kTheorem,
                  "full C(-1/3,k)^2 9^k and 9^-k sums vs L from 4p=L^2+27M^2", false, false,
                  [](uint64_t p) { return p > 3; }, eval_t61});
  defs.push_back({"CJ6.1", ClaimKind::kConjecture,
                  "full C(-1/3,k)^2 9^k sum vs L-p/L mod p^2", false, false,
                  [](uint64_t p) { return p > 3 && p % 3 == 1 && p < kP2Cap6; }, eval_cj61});
  defs.push_back({"T6.2", ClaimKind::kTheorem,
                  "full C(-1/4,k)^2 (-8)^k and (-8)^-k sums vs p=x^2+y^2", false, false,
                  [](uint64_t p) { return p > 2; }, eval_t62});
  defs.push_back({"CJ6.2", ClaimKind::kConjecture,
                  "full C(-1/4,k)^2 (-8)^{+-k} sums vs 2x-p/2x, 2y-p/2y mod p^2", false, false,
                  [](uint64_t p) { return p % 4 == 1 && p < kP2Cap6; }, eval_cj62});
  defs.push_back({"T6.3", ClaimKind::kTheorem,
                  "full C(-1/4,k)^2 4^{+-k} sums vs p=A^2+3B^2", false, false,
                  [](uint64_t p) { return p > 3; }, eval_t63});
  defs.push_back({"CJ6.3", ClaimKind::kConjecture,
                  "full C(-1/4,k)^2 4^{+-k} and (-1/4,-1/2)(-8)^k sums mod p^2", false, false,
                  [](uint64_t p) { return p > 3 && p % 3 == 1 && p < kP2Cap6; }, eval_cj63});
  defs.push_back({"T6.4", ClaimKind::kTheorem,
                  "full C(-1/4,k)^2 64^{+-k} sums vs p=x^2+7y^2", false, false,
                  [](uint64_t p) { return p > 2 && p != 7; }, eval_t64});
  defs.push_back({"CJ6.4", ClaimKind::kConjecture,
                  "full C(-1/4,k)^2 64^{+-k} sums vs p=x^2+7y^2 mod p^2", false, false,
                  [](uint64_t p) {
                    uint64_t r = p % 7;
                    return p > 2 && (r == 1 || r == 2 || r == 4) && p < kP2Cap6;
                  },
                  eval_cj64});
  defs.push_back({"CJ6.5", ClaimKind::kConjecture,
                  "full (-1)^k C(-1/4,k)^2 sum vs p=x^2+2y^2 mod p^2", false, false,
                  [](uint64_t p) { return p > 2 && p < kP2Cap6; }, eval_cj65});
  defs.push_back({"CJ6.6", ClaimKind::kConjecture,
                  "(-1/4,-1/2)/4^k and (-1/2,-1/6)2^k sums vs p=x^2+y^2 mod p^2", false, false,
                  [](uint64_t p) { return p > 2 && p < kP2Cap6; }, eval_cj66});
  defs.push_back({"CJ6.7", ClaimKind::kConjecture,
                  "(-1/4,-1/2) sums at -1/3 and 1/81 vs 2x-p/2x mod p^2", false, false,
                  // p = 5 divides 80 = 81-1, degenerating the 1/81 sum
                  [](uint64_t p) { return p > 5 && p < kP2Cap6; }, eval_cj67});
  defs.push_back({"CJ6.8", ClaimKind::kConjecture,
                  "(-1/4,-1/2) sum at -1/80 vs p=x^2+y^2 split by p mod 5", false, false,
                  [](uint64_t p) { return p > 2 && p != 5 && p < kP2Cap6; }, eval_cj68});
  defs.push_back({"CJ6.9", ClaimKind::kConjecture,
                  "(-1/4,-1/2) sum at 2 vs p=x^2+2y^2 mod p^2", false, false,
                  [](uint64_t p) { return p > 5 && p < kP2Cap6; }, eval_cj69});
  defs.push_back({"CJ6.10", ClaimKind::kConjecture,
                  "five (-1/2,*) sums all congruent to 2A-p/2A mod p^2", false, false,
                  // p = 7 divides 28 = 27+1, degenerating the -1/27 sum
                  [](uint64_t p) { return p > 7 && p < kP2Cap6; }, eval_cj610});
  defs.push_back({"CJ6.11", ClaimKind::kConjecture,
                  "(-1/2,-1/3) sum at -1/4 vs 2A-p/2A or A+3B-p/(A+3B) mod p^2", false, false,
                  [](uint64_t p) { return p > 5 && p < kP2Cap6; }, eval_cj611});
  defs.push_back({"CJ6.12", ClaimKind::kConjecture,
                  "(-1/2,-1/6) sum at -3/125 vs 2A-p/2A mod p^2", false, false,
                  [](uint64_t p) { return p > 5 && p < kP2Cap6; }, eval_cj612});
}

}  // namespace congrlab::detail
