// Shared per-(claim, prime) evaluation context: residue builders, cached
// inverse/character tables, binomial-sum helpers, representation fetchers
// and record emission.  Used only by the claims_*.cpp registry files.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congrlab/claims.hpp"
#include "congrlab/curves.hpp"
#include "congrlab/modmath.hpp"
#include "congrlab/orthopoly.hpp"
#include "congrlab/quadforms.hpp"
#include "congrlab/ratbinom.hpp"

namespace congrlab::detail {

inline uint64_t splitmix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Ctx {
 public:
  Ctx(std::string id, uint64_t p, uint64_t seed, std::vector<VerificationRecord>& out)
      : id_(std::move(id)), p_(p), seed_(seed), out_(&out), m1_(p, 1) {
    if (p < (uint64_t{1} << 31)) m2_ = Modulus(p, 2);
  }

  uint64_t p() const { return p_; }
  bool has_p2() const { return m2_.m != 0; }
  Modulus mod(int e) const { return e == 2 ? m2_ : m1_; }

  const std::vector<uint64_t>& inv(int e) {
    auto& tab = e == 2 ? inv2_ : inv1_;
    if (tab.empty()) tab = inverse_table(p_ - 1, mod(e).m);
    return tab;
  }

  const std::vector<uint8_t>& sqtab() {
    if (sqtab_.empty()) sqtab_ = square_table(p_);
    return sqtab_;
  }

  Residue res(int64_t v, int e = 1) { return make_residue(v, mod(e)); }
  Residue frac(int64_t num, int64_t den, int e = 1) {
    return lift_rational(make_rational(num, den), mod(e));
  }
  int leg(int64_t a) const { return legendre_symbol(a, p_); }
  uint64_t fl(uint64_t num, uint64_t den) const { return floor_frac(p_, num, den); }
  uint64_t ex(uint64_t sub, uint64_t den) const { return exact_frac(p_, sub, den); }

  // sum_{k=0}^{upper} C(a,k) C(b,k) t^k with rational constants
  Residue sum2(RationalConstant a, RationalConstant b, RationalConstant t, uint64_t upper,
               int e = 1) {
    Modulus m = mod(e);
    return sum_product_binom(lift_rational(a, m), lift_rational(b, m), lift_rational(t, m),
                             upper, &inv(e));
  }
  // same with integer upper indices resolved from floors
  Residue sum2i(uint64_t a, uint64_t b, const Residue& t, uint64_t upper, int e = 1) {
    return sum_product_binom(res(static_cast<int64_t>(a), e), res(static_cast<int64_t>(b), e),
                             t, upper, &inv(e));
  }

  uint64_t draw(uint64_t i, uint64_t lo, uint64_t hi) const {
    return claim_draw(id_, p_, seed_, i, lo, hi);
  }

  std::optional<FormRep> rep_p(uint64_t d) { return represent(QuadForm::p_form(d), p_); }
  std::optional<FormRep> rep_4p(uint64_t d) { return represent(QuadForm::fourp_form(d), p_); }
  std::optional<FormRep> rep_ab(uint64_t a, uint64_t b) {
    return represent(QuadForm::ab_form(a, b), p_);
  }
  std::optional<FormRep> rep_4ab(uint64_t a, uint64_t b) {
    return represent(QuadForm::fourab_form(a, b), p_);
  }

  VerificationRecord& emit(const std::string& label, int e, uint64_t lhs, uint64_t rhs) {
    VerificationRecord r;
    r.claim = id_;
    r.p = p_;
    r.case_label = label;
    r.e = e;
    r.lhs = lhs;
    r.rhs = rhs;
    r.pass = lhs == rhs;
    out_->push_back(std::move(r));
    return out_->back();
  }
  VerificationRecord& emit(const std::string& label, const Residue& lhs, const Residue& rhs) {
    int e = lhs.mod().e;
    return emit(label, e, lhs.value(), rhs.value());
  }
  VerificationRecord& emit(const std::string& label, const Residue& lhs, int64_t rhs) {
    return emit(label, lhs, make_residue(rhs, lhs.mod()));
  }

  // Two-sided comparison for claims that fix a coordinate only up to sign:
  // passes when lhs matches either rhs(+v) or rhs(-v); records which.
  template <typename F>
  VerificationRecord& emit_two_sided(const std::string& label, const Residue& lhs, F&& rhs_of,
                                     int64_t v, const std::string& what) {
    Residue plus = rhs_of(v), minus = rhs_of(-v);
    bool use_plus = lhs.value() == plus.value();
    auto& r = emit(label, lhs, use_plus ? plus : minus);
    r.sign_resolved = what + (use_plus ? "=+" : "=-") + std::to_string(v < 0 ? -v : v);
    return r;
  }

  static void attach(VerificationRecord& r, const std::string& kind, int64_t a, int64_t d,
                     int64_t x, int64_t y) {
    r.rep.present = true;
    r.rep.kind = kind;
    r.rep.a = a;
    r.rep.d = d;
    r.rep.x = x;
    r.rep.y = y;
  }

 private:
  std::string id_;
  uint64_t p_;
  uint64_t seed_;
  std::vector<VerificationRecord>* out_;
  Modulus m1_, m2_;
  std::vector<uint64_t> inv1_, inv2_;
  std::vector<uint8_t> sqtab_;
};

// Registry sections, one per claim family source file.
void register_intro_claims(std::vector<ClaimDef>& defs);    // G1, P1.4-P1.7
void register_t2_t3_claims(std::vector<ClaimDef>& defs);    // T2.x, T3.x, L3.1, C3.1, E3.x
void register_t4_claims(std::vector<ClaimDef>& defs);       // T4.x, CJ4.x
void register_t5_claims(std::vector<ClaimDef>& defs);       // T5.x, CJ5.x, CJR5.1
void register_t6_claims(std::vector<ClaimDef>& defs);       // T6.x, CJ6.x

}  // namespace congrlab::detail
