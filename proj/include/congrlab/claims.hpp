// Registry of verifiable congruence identities.  Each claim bundles an
// applicability predicate over primes with an evaluator that emits one or
// more labeled records: canonical residues for both sides of a congruence
// mod p or p^2, the branch taken, and any quadratic-form representation and
// sign resolution that went into the right-hand side.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace congrlab {

enum class ClaimKind { kTheorem, kConjecture };

struct RepInfo {
  bool present = false;
  std::string kind;  // "p", "4p", "ab"
  int64_t a = 1;     // x^2 coefficient (ab forms)
  int64_t d = 0;     // y^2 coefficient
  int64_t x = 0;     // sign-resolved coordinates as used in the congruence
  int64_t y = 0;
};

struct VerificationRecord {
  std::string claim;
  uint64_t p = 0;
  std::string case_label;
  int e = 1;          // comparison modulus is p^e
  uint64_t lhs = 0;   // canonical residues in [0, p^e)
  uint64_t rhs = 0;
  bool pass = false;
  std::string sign_resolved;  // how an unpinned sign/coordinate was fixed
  RepInfo rep;
  std::string params;  // randomized parameters, extra context
  int64_t micros = 0;
};

struct ClaimDef {
  std::string id;
  ClaimKind kind = ClaimKind::kTheorem;
  std::string summary;
  bool brute_force = false;  // needs an O(p) character-sum pass per record
  bool randomized = false;   // draws parameters from (claim, p, seed)
  std::function<bool(uint64_t p)> applicable;
  std::function<void(uint64_t p, uint64_t seed, std::vector<VerificationRecord>&)> eval;
};

// All claims, in report order.  Stable across runs.
const std::vector<ClaimDef>& registry();

// nullptr when the id is unknown.
const ClaimDef* find_claim(const std::string& id);

// Convenience wrapper: applicability check + eval.  Returns an empty vector
// with *applicable=false when p is out of scope for the claim.
std::vector<VerificationRecord> evaluate_claim(const std::string& id, uint64_t p, uint64_t seed,
                                               bool* applicable = nullptr);

// Draw #i for a randomized claim at (id, p, seed): uniform in [lo, hi].
uint64_t claim_draw(const std::string& id, uint64_t p, uint64_t seed, uint64_t i, uint64_t lo,
                    uint64_t hi);

}  // namespace congrlab
