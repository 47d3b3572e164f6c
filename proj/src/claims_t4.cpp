// Claims T4.1-T4.9: the [p/6]-truncated sum  sum_k C([p/3],k) C([p/6],k) t^k
// against quadratic-form coordinates, and CJ4.1-CJ4.9: the companion mod-p^2
// chains over the full sums  sum_k C(-1/3,k) C(-1/6,k) t^k  and
// sum_k C(-2/3,k) C(-5/6,k) t^k.
#include <string>
#include <utility>

#include "claims_detail.hpp"

namespace congrlab::detail {

namespace {

// sum_{k<=[p/6]} C([p/3],k) C([p/6],k) t^k
Residue t4_sum(Ctx& c, const Residue& t) {
  return c.sum2i(c.fl(1, 3), c.fl(1, 6), t, c.fl(1, 6));
}

// v - p/den (mod p^2)
Residue sub_ratio(Ctx& c, int64_t v, int64_t den) {
  return c.res(v, 2) - c.res(static_cast<int64_t>(c.p()), 2) * c.res(den, 2).inverse();
}

void fail_missing(Ctx& c, const Residue& lhs) {
  c.emit("missing representation", lhs, lhs + lhs.one_like());
}

// sum_{k<=(p-5)/6} C((p-2)/3,k) C((p-5)/6,k) t^k; the trailing identity the
// conjectures attach for the p == 2 (mod 3) form.
Residue cj4_final_sum(Ctx& c, const Residue& t) {
  return c.sum2i(c.ex(2, 3), c.ex(5, 6), t, c.ex(5, 6));
}

// Emits the chain record S1 == factor * S2 and hands back S1.  In the
// branches whose closed form is 0 the two sums only vanish mod p -- the
// mod-p^2 chain genuinely breaks there (e.g. at -4: p = 7 gives S1 = 42,
// 0 mod 7 but not mod 49) -- so those callers pass e = 1 plus the branch
// label and get the pair of vanishing records instead.
Residue cj4_chain(Ctx& c, RationalConstant t, const Residue& factor, int e = 2,
                  const char* zero_label = nullptr) {
  auto s1 = c.sum2({-1, 3}, {-1, 6}, t, c.p() - 1, e);
  auto s2 = c.sum2({-2, 3}, {-5, 6}, t, c.p() - 1, e);
  c.emit("S1=f*S2", s1, factor * s2);
  if (zero_label != nullptr) {
    c.emit(zero_label, s1, s1.zero_like());
    c.emit("S2=0", s2, s2.zero_like());
  }
  return s1;
}

// ---- T4.1 / T4.6: branches on p mod 15 with d = 15 (p-form) or 75 (4p) ----

void eval_t41(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("T4.1", p, seed, out);
  auto lhs = t4_sum(c, c.res(-4));
  uint64_t r = p % 15;
  if (r == 1 || r == 4) {
    auto rep = c.rep_p(15);
    if (!rep) return fail_missing(c, lhs);
    int64_t x = normalize_sign(rep->x, 3, 1);
    auto& rec = c.emit("p=x^2+15y^2", lhs, 2 * x);
    rec.sign_resolved = "x==1 mod 3";
    Ctx::attach(rec, "p", 1, 15, x, rep->y);
  } else {
    c.emit("p%15=11,14", lhs, 0);
  }
}

void eval_t46(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("T4.6", p, seed, out);
  auto lhs = t4_sum(c, c.frac(-1, 80));
  uint64_t r = p % 15;
  if (r == 1 || r == 4) {
    auto rep = c.rep_4p(75);
    if (!rep) return fail_missing(c, lhs);
    int64_t x = normalize_sign(rep->x, 3, 2);
    auto& rec = c.emit("4p=x^2+75y^2", lhs, x);
    rec.sign_resolved = "x==2 mod 3";
    Ctx::attach(rec, "4p", 1, 75, x, rep->y);
  } else {
    c.emit("p%15=11,14", lhs, 0);
  }
}

// ---- T4.2: extra bisected form of the left side ----

void eval_t42(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("T4.2", p, seed, out);
  auto lhs = t4_sum(c, c.frac(1, 2));
  auto bisect = sum_bisected(c.fl(1, 3), c.res(1), c.fl(1, 6), &c.inv(1)) *
                c.res(2).pow(c.fl(1, 3));
  uint64_t r = p % 24;
  Residue rhs = c.res(0);
  std::string label;
  if (r == 1 || r == 7) {
    auto rep = c.rep_p(6);
    if (!rep) return fail_missing(c, lhs);
    int64_t x = normalize_sign(rep->x, 3, 1);
    rhs = c.res(2 * x);
    label = "p=x^2+6y^2";
    auto& r1 = c.emit(label, lhs, rhs);
    r1.sign_resolved = "x==1 mod 3";
    Ctx::attach(r1, "p", 1, 6, x, rep->y);
    auto& r2 = c.emit("bisect " + label, bisect, rhs);
    r2.sign_resolved = "x==1 mod 3";
    Ctx::attach(r2, "p", 1, 6, x, rep->y);
  } else {
    label = "p%24=17,23";
    c.emit(label, lhs, rhs);
    c.emit("bisect " + label, bisect, rhs);
  }
}

// ---- T4.3 / T4.4 / T4.5: (q/p) = 1, 4p = x^2 + d y^2 with 3 | x-2 ----

void eval_t4_sym(const char* id, int64_t tnum, int64_t tden, uint64_t d, uint64_t p,
                 uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c(id, p, seed, out);
  auto lhs = t4_sum(c, c.frac(tnum, tden));
  if (p % 3 == 1) {
    auto rep = c.rep_4p(d);
    if (!rep) return fail_missing(c, lhs);
    int64_t x = normalize_sign(rep->x, 3, 2);
    auto& rec = c.emit("4p=x^2+" + std::to_string(d) + "y^2", lhs, x);
    rec.sign_resolved = "x==2 mod 3";
    Ctx::attach(rec, "4p", 1, static_cast<int64_t>(d), x, rep->y);
  } else {
    c.emit("p%3=2", lhs, 0);
  }
}

// ---- T4.7: 4p = x^2 + 11 y^2, sign of y resolved by enumeration.  Both
// branches carry an extra (6/p): without it the stated values flip sign
// exactly when (6/p) = -1 (e.g. p = 31: sum = 5, bare formula -5); same
// normalization as the d = 11 fixed curve.  Checked to 3000. ----

void eval_t47(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("T4.7", p, seed, out);
  auto lhs = t4_sum(c, c.frac(27, 16));
  if (legendre_symbol(static_cast<int64_t>(p), 11) == -1) {
    c.emit("(p/11)=-1", lhs, 0);
    return;
  }
  auto rep = c.rep_4p(11);
  if (!rep) return fail_missing(c, lhs);
  int64_t x = rep->x, y = rep->y;
  int chi_x = legendre_symbol(x, 11);
  int chi6 = c.leg(6);
  if (p % 3 == 1) {
    // (p/3) = 1 branch: -(6/p) ((-11+x/y)/p) (x/11) x
    auto rhs_of = [&](int64_t yv) {
      auto ratio = c.res(x) * c.res(yv).inverse();
      int s = c.leg(static_cast<int64_t>((c.res(-11) + ratio).value()));
      return c.res(x).scale(-s * chi_x * chi6);
    };
    auto& rec = c.emit_two_sided("(p/3)=(p/11)=1", lhs, rhs_of, y, "y");
    Ctx::attach(rec, "4p", 1, 11, x, y);
  } else {
    // (p/3) = -1 branch: 4y (6/p) ((-11 + (x/11)x/y)/p)
    auto rhs_of = [&](int64_t yv) {
      auto ratio = c.res(x).scale(chi_x) * c.res(yv).inverse();
      int s = c.leg(static_cast<int64_t>((c.res(-11) + ratio).value()));
      return c.res(4 * yv).scale(s * chi6);
    };
    auto& rec = c.emit_two_sided("(p/11)=1 (p/3)=-1", lhs, rhs_of, y, "y");
    Ctx::attach(rec, "4p", 1, 11, x, y);
  }
}

// ---- T4.8: 4p = L^2 + 27 M^2 with 3 | L-2 ----

void eval_t48(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("T4.8", p, seed, out);
  auto lhs = t4_sum(c, c.frac(-9, 16));
  if (p % 3 == 1) {
    auto rep = c.rep_4p(27);
    if (!rep) return fail_missing(c, lhs);
    int64_t l = normalize_sign(rep->x, 3, 2);
    auto& rec = c.emit("4p=L^2+27M^2", lhs, l);
    rec.sign_resolved = "L==2 mod 3";
    Ctx::attach(rec, "4p", 1, 27, l, rep->y);
  } else {
    c.emit("p%3=2", lhs, 0);
  }
}

// ---- T4.9: p = c^2 + 2 d^2, 4 | c-1; d resolved by enumeration.  The
// second branch's character argument is -2-c/d, matching the first branch
// (and the underlying sqrt(-2) = c/d substitution); both tested routes with
// argument 2+c/d fail at p = 11. ----

void eval_t49(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("T4.9", p, seed, out);
  auto lhs = t4_sum(c, c.frac(27, 2));
  uint64_t r8 = p % 8;
  if (r8 == 5 || r8 == 7) {
    c.emit("p%8=5,7", lhs, 0);
    return;
  }
  auto rep = c.rep_p(2);
  if (!rep) return fail_missing(c, lhs);
  int64_t c0 = normalize_sign(rep->x, 4, 1);
  int64_t d0 = rep->y;
  int e8 = (p / 8) % 2 == 1 ? -1 : 1;  // (-1)^[p/8]
  uint64_t r24 = p % 24;
  if (r24 == 1 || r24 == 19) {
    auto rhs_of = [&](int64_t dv) {
      auto arg = c.res(-2) - c.res(c0) * c.res(dv).inverse();
      int s = c.leg(static_cast<int64_t>(arg.value()));
      return c.res(2 * c0).scale(s * e8);
    };
    auto& rec = c.emit_two_sided("p%24=1,19", lhs, rhs_of, d0, "d");
    rec.sign_resolved += " c==1 mod 4";
    Ctx::attach(rec, "p", 1, 2, c0, d0);
  } else {
    auto rhs_of = [&](int64_t dv) {
      auto arg = c.res(-2) - c.res(c0) * c.res(dv).inverse();
      int s = c.leg(static_cast<int64_t>(arg.value()));
      return (c.res(dv) * c.frac(-4, 5)).scale(s * e8);
    };
    auto& rec = c.emit_two_sided("p%24=11,17", lhs, rhs_of, d0, "d");
    rec.sign_resolved += " c==1 mod 4";
    Ctx::attach(rec, "p", 1, 2, c0, d0);
  }
}

// ---- CJ4.1 ----

void eval_cj41(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ4.1", p, seed, out);
  int chi5 = c.leg(5);
  uint64_t r = p % 30;
  bool zero = r != 1 && r != 19 && r != 17 && r != 23;
  int e = zero ? 1 : 2;
  Residue factor = p % 3 == 1 ? c.res(chi5, e) : c.res(5 * chi5, e);
  auto s1 = cj4_chain(c, {-4, 1}, factor, e, zero ? "p%30=7,11,13,29" : nullptr);
  if (zero) return;
  if (r == 1 || r == 19) {
    auto rep = c.rep_p(15);
    if (!rep) return fail_missing(c, s1);
    int64_t x = rep->x;
    int s3 = legendre_symbol(x, 3);
    auto& rec = c.emit("p=x^2+15y^2", s1, sub_ratio(c, 2 * x, 2 * x).scale(s3));
    Ctx::attach(rec, "p", 1, 15, x, rep->y);
  } else if (r == 17 || r == 23) {
    auto rep = c.rep_ab(5, 3);
    if (!rep) return fail_missing(c, s1);
    int64_t x = rep->x;
    int s3 = legendre_symbol(x, 3);
    auto& rec = c.emit("p=5x^2+3y^2", s1, -sub_ratio(c, 10 * x, 2 * x).scale(s3));
    Ctx::attach(rec, "ab", 5, 3, x, rep->y);
    auto fin = cj4_final_sum(c, c.res(-4));
    auto& rf = c.emit("final", fin, c.res(2 * x).scale(s3));
    Ctx::attach(rf, "ab", 5, 3, x, rep->y);
  }
}

// ---- CJ4.2 ----

void eval_cj42(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ4.2", p, seed, out);
  int chi2 = c.leg(2);
  uint64_t r = p % 24;
  bool zero = r == 13 || r == 19;
  int e = zero ? 1 : 2;
  Residue factor = p % 3 == 1 ? c.res(chi2, e) : c.res(2, e).inverse().scale(chi2);
  auto s1 = cj4_chain(c, {1, 2}, factor, e, zero ? "p%24=13,19" : nullptr);
  if (zero) return;
  if (r == 1 || r == 7) {
    auto rep = c.rep_p(6);
    if (!rep) return fail_missing(c, s1);
    int64_t x = rep->x;
    int s3 = legendre_symbol(x, 3);
    auto& rec = c.emit("p=x^2+6y^2", s1, sub_ratio(c, 2 * x, 2 * x).scale(s3));
    Ctx::attach(rec, "p", 1, 6, x, rep->y);
  } else if (r == 5 || r == 11) {
    auto rep = c.rep_ab(2, 3);
    if (!rep) return fail_missing(c, s1);
    int64_t x = rep->x;
    int s3 = legendre_symbol(x, 3);
    auto& rec = c.emit("p=2x^2+3y^2", s1, sub_ratio(c, 2 * x, 4 * x).scale(s3));
    Ctx::attach(rec, "ab", 2, 3, x, rep->y);
    auto fin = cj4_final_sum(c, c.frac(1, 2)) * c.frac(-1, 4);
    auto& rf = c.emit("final", fin, c.res(x).scale(s3));
    Ctx::attach(rf, "ab", 2, 3, x, rep->y);
  }
}

// ---- CJ4.3 / CJ4.4 / CJ4.5: symbol pair ((p/3),(p/q)) selects the case ----

struct Cj4SymSpec {
  const char* id;
  int64_t q;            // 17, 41, 89
  RationalConstant t;   // -1/16, -1/1024, -1/250000
  RationalConstant f;   // 17/16, 1025/1024, 250001/250000 (second chain factor)
  uint64_t d;           // 51, 123, 267
  RationalConstant mul; // -1/4, -5/32, -53/500 (final-line constant)
};

void eval_cj4_sym(const Cj4SymSpec& sp, uint64_t p, uint64_t seed,
                  std::vector<VerificationRecord>& out) {
  Ctx c(sp.id, p, seed, out);
  int chiq = c.leg(sp.q);
  int s3 = legendre_symbol(static_cast<int64_t>(p), 3);
  int sq = legendre_symbol(static_cast<int64_t>(p), sp.q);
  bool zero = s3 == 1 && sq == -1;
  int e = zero ? 1 : 2;
  Residue factor = p % 3 == 1 ? c.res(chiq, e) : lift_rational(sp.f, c.mod(e)).scale(chiq);
  auto s1 = cj4_chain(c, sp.t, factor, e, zero ? "(p/3)=1 (p/q)=-1" : nullptr);
  if (zero) return;
  if (s3 == 1 && sq == 1) {
    auto rep = c.rep_4p(sp.d);
    if (!rep) return fail_missing(c, s1);
    int64_t x = rep->x;
    int cx = legendre_symbol(x, 3);
    auto& rec = c.emit("4p=x^2+" + std::to_string(sp.d) + "y^2", s1,
                       -sub_ratio(c, x, x).scale(cx));
    Ctx::attach(rec, "4p", 1, static_cast<int64_t>(sp.d), x, rep->y);
  } else {
    auto rep = c.rep_4ab(static_cast<uint64_t>(sp.q), 3);
    if (!rep) return fail_missing(c, s1);
    int64_t x = rep->x;
    int cx = legendre_symbol(x, 3);
    // branch coefficient is -mul: 1/4, 5/32, 53/500
    auto& rec = c.emit("4p=" + std::to_string(sp.q) + "x^2+3y^2", s1,
                       (sub_ratio(c, sp.q * x, x) * c.frac(-sp.mul.num, sp.mul.den, 2)).scale(cx));
    Ctx::attach(rec, "4ab", sp.q, 3, x, rep->y);
    auto fin = cj4_final_sum(c, lift_rational(sp.t, c.mod(1))) *
               lift_rational(sp.mul, c.mod(1));
    auto& rf = c.emit("final", fin, c.res(x).scale(cx));
    Ctx::attach(rf, "4ab", sp.q, 3, x, rep->y);
  }
}

// ---- CJ4.6 ----

void eval_cj46(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ4.6", p, seed, out);
  uint64_t r = p % 30;
  bool zero = r == 17 || r == 23;
  int e = zero ? 1 : 2;
  Residue factor = c.res(c.leg(5), e);
  auto s1 = cj4_chain(c, {-1, 80}, factor, e, zero ? "p%30=17,23" : nullptr);
  if (zero) return;
  if (r == 1 || r == 19) {
    auto rep = c.rep_4p(75);
    if (!rep) return fail_missing(c, s1);
    int64_t x = normalize_sign(rep->x, 3, 2);
    auto& rec = c.emit("4p=x^2+75y^2", s1, sub_ratio(c, x, x));
    rec.sign_resolved = "x==2 mod 3";
    Ctx::attach(rec, "4p", 1, 75, x, rep->y);
  } else if (r == 7 || r == 13) {
    auto rep = c.rep_4ab(25, 3);
    if (!rep) return fail_missing(c, s1);
    int64_t x = normalize_sign(rep->x, 3, 1);
    auto& rec = c.emit("4p=25x^2+3y^2", s1, sub_ratio(c, 5 * x, 5 * x));
    rec.sign_resolved = "x==1 mod 3";
    Ctx::attach(rec, "4ab", 25, 3, x, rep->y);
  }
}

// ---- CJ4.7 ----

// Carries the same extra (6/p) as T4.7 in every closed form.
void eval_cj47(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ4.7", p, seed, out);
  Residue factor = p % 3 == 1 ? c.res(1, 2) : c.frac(-11, 16, 2);
  auto s1 = cj4_chain(c, {27, 16}, factor);
  auto rep = c.rep_4p(11);
  if (!rep) return fail_missing(c, s1);
  int64_t x = rep->x, y = rep->y;
  int chi_x = legendre_symbol(x, 11);
  int chi6 = c.leg(6);
  if (p % 3 == 1) {
    auto rhs_of = [&](int64_t yv) {
      auto ratio = c.res(x) * c.res(yv).inverse();
      int s = c.leg(static_cast<int64_t>((c.res(-11) + ratio).value()));
      return -sub_ratio(c, x, x).scale(s * chi_x * chi6);
    };
    auto& rec = c.emit_two_sided("3|p-1", s1, rhs_of, y, "y");
    Ctx::attach(rec, "4p", 1, 11, x, y);
  } else {
    auto rhs_of = [&](int64_t yv) {
      auto ratio = c.res(x).scale(chi_x) * c.res(yv).inverse();
      int s = c.leg(static_cast<int64_t>((c.res(-11) + ratio).value()));
      return (sub_ratio(c, 11 * yv, yv) * c.frac(-1, 4, 2)).scale(s * chi6);
    };
    auto& rec = c.emit_two_sided("3|p-2", s1, rhs_of, y, "y");
    Ctx::attach(rec, "4p", 1, 11, x, y);
    auto fin = cj4_final_sum(c, c.frac(27, 16)) * c.frac(1, 4);
    auto fin_of = [&](int64_t yv) {
      auto ratio = c.res(x).scale(chi_x) * c.res(yv).inverse();
      int s = c.leg(static_cast<int64_t>((c.res(-11) + ratio).value()));
      return c.res(yv).scale(s * chi6);
    };
    auto& rf = c.emit_two_sided("final", fin, fin_of, y, "y");
    Ctx::attach(rf, "4p", 1, 11, x, y);
  }
}

// ---- CJ4.8 ----

void eval_cj48(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ4.8", p, seed, out);
  auto s1 = cj4_chain(c, {-9, 16}, c.res(1, 2));
  auto rep = c.rep_4p(27);
  if (!rep) return fail_missing(c, s1);
  int64_t l = normalize_sign(rep->x, 3, 2);
  auto& rec = c.emit("4p=L^2+27M^2", s1, sub_ratio(c, l, l));
  rec.sign_resolved = "L==2 mod 3";
  Ctx::attach(rec, "4p", 1, 27, l, rep->y);
}

// ---- CJ4.9 ----

void eval_cj49(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  Ctx c("CJ4.9", p, seed, out);
  Residue factor = p % 3 == 1 ? c.res(1, 2) : c.frac(-25, 2, 2);
  auto s1 = cj4_chain(c, {27, 2}, factor);
  auto rep = c.rep_p(2);
  if (!rep) return fail_missing(c, s1);
  int64_t c0 = normalize_sign(rep->x, 4, 1);
  int64_t d0 = rep->y;
  int e8 = (p / 8) % 2 == 1 ? -1 : 1;
  uint64_t r24 = p % 24;
  // character argument -2-c/d in both branches, as in T4.9
  auto sym = [&](int64_t dv) {
    auto arg = c.res(-2) - c.res(c0) * c.res(dv).inverse();
    return c.leg(static_cast<int64_t>(arg.value()));
  };
  if (r24 == 1 || r24 == 19) {
    auto rhs_of = [&](int64_t dv) {
      return sub_ratio(c, 2 * c0, 2 * c0).scale(sym(dv) * e8);
    };
    auto& rec = c.emit_two_sided("p%24=1,19", s1, rhs_of, d0, "d");
    rec.sign_resolved += " c==1 mod 4";
    Ctx::attach(rec, "p", 1, 2, c0, d0);
  } else {
    auto rhs_of = [&](int64_t dv) {
      auto val = c.res(10 * dv, 2) -
                 c.res(static_cast<int64_t>(p), 2).scale(5) * c.res(4 * dv, 2).inverse();
      return val.scale(sym(dv) * e8);
    };
    auto& rec = c.emit_two_sided("p%24=11,17", s1, rhs_of, d0, "d");
    rec.sign_resolved += " c==1 mod 4";
    Ctx::attach(rec, "p", 1, 2, c0, d0);
  }
}

constexpr uint64_t kP2Cap = uint64_t{1} << 31;  // mod-p^2 arithmetic bound

}  // namespace

void register_t4_claims(std::vector<ClaimDef>& defs) {
  defs.push_back({"T4.1", ClaimKind::kTheorem,
                  "sum C([p/3],k)C([p/6],k)(-4)^k vs p=x^2+15y^2", false, false,
                  [](uint64_t p) { return p % 5 == 1 || p % 5 == 4; }, eval_t41});
  defs.push_back({"T4.2", ClaimKind::kTheorem,
                  "sum C([p/3],k)C([p/6],k)/2^k (and bisected form) vs p=x^2+6y^2", false, false,
                  [](uint64_t p) { return p % 8 == 1 || p % 8 == 7; }, eval_t42});
  defs.push_back({"T4.3", ClaimKind::kTheorem,
                  "sum C([p/3],k)C([p/6],k)/(-16)^k vs 4p=x^2+51y^2", false, false,
                  [](uint64_t p) {
                    return p > 3 && p != 17 && legendre_symbol(17, p) == 1;
                  },
                  [](uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
                    eval_t4_sym("T4.3", -1, 16, 51, p, seed, out);
                  }});
  defs.push_back({"T4.4", ClaimKind::kTheorem,
                  "sum C([p/3],k)C([p/6],k)/(-1024)^k vs 4p=x^2+123y^2", false, false,
                  [](uint64_t p) {
                    // p = 5 divides 1025, degenerating the underlying argument
                    return p > 5 && p != 41 && legendre_symbol(41, p) == 1;
                  },
                  [](uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
                    eval_t4_sym("T4.4", -1, 1024, 123, p, seed, out);
                  }});
  defs.push_back({"T4.5", ClaimKind::kTheorem,
                  "sum C([p/3],k)C([p/6],k)/(-250000)^k vs 4p=x^2+267y^2", false, false,
                  [](uint64_t p) {
                    // p = 53 divides 250001 = 89*53^2, degenerating the argument
                    return p > 5 && p != 89 && p != 53 && legendre_symbol(89, p) == 1;
                  },
                  [](uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
                    eval_t4_sym("T4.5", -1, 250000, 267, p, seed, out);
                  }});
  defs.push_back({"T4.6", ClaimKind::kTheorem,
                  "sum C([p/3],k)C([p/6],k)/(-80)^k vs 4p=x^2+75y^2", false, false,
                  [](uint64_t p) { return p > 5 && (p % 5 == 1 || p % 5 == 4); }, eval_t46});
  defs.push_back({"T4.7", ClaimKind::kTheorem,
                  "sum C([p/3],k)C([p/6],k)(27/16)^k vs 4p=x^2+11y^2", false, false,
                  [](uint64_t p) { return p > 3 && p != 11; }, eval_t47});
  // T4.8/T4.9 exclude p = 5: the arguments behind them (25/16 and -25/2)
  // collapse mod 5 and the stated zero branch fails there (sum = 1).
  defs.push_back({"T4.8", ClaimKind::kTheorem,
                  "sum C([p/3],k)C([p/6],k)(-9/16)^k vs 4p=L^2+27M^2", false, false,
                  [](uint64_t p) { return p > 5; }, eval_t48});
  defs.push_back({"T4.9", ClaimKind::kTheorem,
                  "sum C([p/3],k)C([p/6],k)(27/2)^k vs p=c^2+2d^2", false, false,
                  [](uint64_t p) { return p > 5; }, eval_t49});

  defs.push_back({"CJ4.1", ClaimKind::kConjecture,
                  "full (-1/3,-1/6)/(-2/3,-5/6) sums at -4 vs p=x^2+15y^2 / p=5x^2+3y^2 mod p^2",
                  false, false, [](uint64_t p) { return p > 5 && p < kP2Cap; }, eval_cj41});
  defs.push_back({"CJ4.2", ClaimKind::kConjecture,
                  "full sums at 1/2 vs p=x^2+6y^2 / p=2x^2+3y^2 mod p^2", false, false,
                  [](uint64_t p) {
                    return p > 3 && p < kP2Cap && p % 24 != 17 && p % 24 != 23;
                  },
                  eval_cj42});
  defs.push_back({"CJ4.3", ClaimKind::kConjecture,
                  "full sums at -1/16 vs 4p=x^2+51y^2 / 4p=17x^2+3y^2 mod p^2", false, false,
                  [](uint64_t p) {
                    return p > 3 && p != 17 && p < kP2Cap &&
                           !(legendre_symbol(p, 3) == -1 && legendre_symbol(p, 17) == 1);
                  },
                  [](uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
                    eval_cj4_sym({"CJ4.3", 17, {-1, 16}, {17, 16}, 51, {-1, 4}}, p, seed, out);
                  }});
  defs.push_back({"CJ4.4", ClaimKind::kConjecture,
                  "full sums at -1/1024 vs 4p=x^2+123y^2 / 4p=41x^2+3y^2 mod p^2", false, false,
                  [](uint64_t p) {
                    return p > 3 && p != 41 && p < kP2Cap &&
                           !(legendre_symbol(p, 3) == -1 && legendre_symbol(p, 41) == 1);
                  },
                  [](uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
                    eval_cj4_sym({"CJ4.4", 41, {-1, 1024}, {1025, 1024}, 123, {-5, 32}}, p,
                                 seed, out);
                  }});
  defs.push_back({"CJ4.5", ClaimKind::kConjecture,
                  "full sums at -1/250000 vs 4p=x^2+267y^2 / 4p=89x^2+3y^2 mod p^2", false,
                  false,
                  [](uint64_t p) {
                    return p > 5 && p != 89 && p < kP2Cap &&
                           !(legendre_symbol(p, 3) == -1 && legendre_symbol(p, 89) == 1);
                  },
                  [](uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
                    eval_cj4_sym({"CJ4.5", 89, {-1, 250000}, {250001, 250000}, 267, {-53, 500}},
                                 p, seed, out);
                  }});
  defs.push_back({"CJ4.6", ClaimKind::kConjecture,
                  "full sums at -1/80 vs 4p=x^2+75y^2 / 4p=25x^2+3y^2 mod p^2", false, false,
                  [](uint64_t p) {
                    uint64_t r = p % 30;
                    return p > 5 && p < kP2Cap && r != 11 && r != 29;
                  },
                  eval_cj46});
  defs.push_back({"CJ4.7", ClaimKind::kConjecture,
                  "full sums at 27/16 vs 4p=x^2+11y^2 mod p^2", false, false,
                  [](uint64_t p) {
                    return p > 11 && p < kP2Cap &&
                           legendre_symbol(static_cast<int64_t>(p), 11) == 1;
                  },
                  eval_cj47});
  defs.push_back({"CJ4.8", ClaimKind::kConjecture,
                  "full sums at -9/16 vs 4p=L^2+27M^2 mod p^2", false, false,
                  [](uint64_t p) { return p > 3 && p % 3 == 1 && p < kP2Cap; }, eval_cj48});
  defs.push_back({"CJ4.9", ClaimKind::kConjecture,
                  "full sums at 27/2 vs p=c^2+2d^2 mod p^2", false, false,
                  [](uint64_t p) {
                    return p > 3 && (p % 8 == 1 || p % 8 == 3) && p < kP2Cap;
                  },
                  eval_cj49});
}

}  // namespace congrlab::detail
