#include "congrlab/claims.hpp"

#include <stdexcept>

#include "claims_detail.hpp"

namespace congrlab {

using detail::Ctx;

uint64_t claim_draw(const std::string& id, uint64_t p, uint64_t seed, uint64_t i, uint64_t lo,
                    uint64_t hi) {
  uint64_t s = detail::fnv1a(id);
  s = detail::splitmix(s ^ detail::splitmix(p));
  s = detail::splitmix(s ^ detail::splitmix(seed));
  s = detail::splitmix(s ^ detail::splitmix(i));
  return lo + s % (hi - lo + 1);
}

namespace detail {

namespace {

// binomial-coefficient congruence attributed to Gauss: for p = x^2 + y^2
// with x odd and x normalized by 4 | x-1,  C((p-1)/2, (p-1)/4) == 2x mod p
void eval_g1(uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
  (void)seed;
  Ctx c("G1", p, seed, out);
  auto rep = c.rep_p(1);
  if (!rep) return;  // applicability guarantees p % 4 == 1, so this cannot happen
  int64_t x = normalize_sign(rep->x, 4, 1);
  auto lhs = binom_general(c.res(static_cast<int64_t>((p - 1) / 2)), (p - 1) / 4, &c.inv(1));
  auto& r = c.emit("p=x^2+y^2", lhs, 2 * x);
  Ctx::attach(r, "p", 1, 1, x, rep->y);
  r.sign_resolved = "x==1 mod 4";
}

// the four curve-sum evaluations of P at indices (p-1)/2, [p/4], [p/3], [p/6]
struct CurveFamily {
  const char* id;
  uint64_t index_den;  // 2, 4, 3, 6
};

void eval_curve_poly(const CurveFamily& fam, uint64_t p, uint64_t seed,
                     std::vector<VerificationRecord>& out) {
  Ctx c(fam.id, p, seed, out);
  const auto& tab = c.sqtab();
  uint64_t idx = fam.index_den == 2 ? (p - 1) / 2 : p / fam.index_den;
  for (uint64_t i = 0; i < 10; i++) {
    uint64_t tv = c.draw(i, 0, p - 1);
    auto t = c.res(static_cast<int64_t>(tv));
    auto lhs = legendre_eval(idx, t);
    Residue cm = t.zero_like(), cn = t.zero_like();
    int sign = 0;
    switch (fam.index_den) {
      case 2:  // x^3 - 3(t^2+3)x + 2t(t^2-9), factor -(-6/p)
        cm = -(t * t + c.res(3)).scale(3);
        cn = (t * (t * t - c.res(9))).scale(2);
        sign = -c.leg(-6);
        break;
      case 4:  // x^3 - (3(3t+5)/2)x + 9t+7, factor -(6/p)
        cm = -(t.scale(3) + c.res(5)) * c.frac(3, 2);
        cn = t.scale(9) + c.res(7);
        sign = -c.leg(6);
        break;
      case 3:  // x^3 + 3(4t-5)x + 2(2t^2-14t+11), factor -(p/3)
        cm = (t.scale(4) - c.res(5)).scale(3);
        cn = (t * t).scale(4) - t.scale(28) + c.res(22);
        sign = -legendre_symbol(static_cast<int64_t>(p), 3);
        break;
      case 6:  // x^3 - 3x + 2t, factor -(3/p)
        cm = c.res(-3);
        cn = t.scale(2);
        sign = -c.leg(3);
        break;
    }
    CubicCurve curve{static_cast<int64_t>(cm.value()), static_cast<int64_t>(cn.value())};
    int64_t s = jacobsthal_sum(curve, p, &tab);
    auto rhs = c.res(s).scale(sign);
    auto& r = c.emit("P([p/" + std::to_string(fam.index_den) + "])", lhs, rhs);
    r.params = "t=" + std::to_string(tv);
  }
}

}  // namespace

void register_intro_claims(std::vector<ClaimDef>& defs) {
  defs.push_back({"G1", ClaimKind::kTheorem,
                  "central binomial coefficient C((p-1)/2,(p-1)/4) = 2x mod p, p=x^2+y^2, 4|x-1",
                  false, false, [](uint64_t p) { return p % 4 == 1; }, eval_g1});
  static const CurveFamily fams[] = {{"P1.4", 2}, {"P1.5", 4}, {"P1.6", 3}, {"P1.7", 6}};
  const char* summaries[] = {
      "P_((p-1)/2)(t) = -(-6/p) S_p(-3(t^2+3), 2t(t^2-9)) mod p, random t",
      "P_([p/4])(t) = -(6/p) S_p(-3(3t+5)/2, 9t+7) mod p, random t",
      "P_([p/3])(t) = -(p/3) S_p(3(4t-5), 2(2t^2-14t+11)) mod p, random t",
      "P_([p/6])(t) = -(3/p) S_p(-3, 2t) mod p, random t"};
  for (int i = 0; i < 4; i++) {
    const auto& fam = fams[i];
    defs.push_back({fam.id, ClaimKind::kTheorem, summaries[i], true, true,
                    [](uint64_t p) { return p > 3; },
                    [&fam](uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out) {
                      eval_curve_poly(fam, p, seed, out);
                    }});
  }
}

}  // namespace detail

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs = [] {
    std::vector<ClaimDef> d;
    detail::register_intro_claims(d);
    detail::register_t2_t3_claims(d);
    detail::register_t4_claims(d);
    detail::register_t5_claims(d);
    detail::register_t6_claims(d);
    return d;
  }();
  return defs;
}

const ClaimDef* find_claim(const std::string& id) {
  for (const auto& def : registry()) {
    if (def.id == id) return &def;
  }
  return nullptr;
}

std::vector<VerificationRecord> evaluate_claim(const std::string& id, uint64_t p, uint64_t seed,
                                               bool* applicable) {
  const ClaimDef* def = find_claim(id);
  if (!def) throw std::invalid_argument("unknown claim: " + id);
  if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
  std::vector<VerificationRecord> out;
  bool app = def->applicable(p);
  if (applicable) *applicable = app;
  if (app) def->eval(p, seed, out);
  return out;
}

}  // namespace congrlab
