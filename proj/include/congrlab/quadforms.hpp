// Representations p = x^2 + d y^2, 4p = x^2 + d y^2 and p = a x^2 + b y^2
// with positive coordinates, plus the sign normalizations the congruence
// identities pin their right-hand sides with.  Cornacchia descent is the
// fast path for the principal form; an exhaustive bounded search doubles as
// the test oracle and as the solver for the other shapes.
#pragma once

#include <cstdint>
#include <optional>

#include "congrlab/modmath.hpp"

namespace congrlab {

enum class FormKind {
  kP,       // p  = x^2 + d y^2
  kFourP,   // 4p = x^2 + d y^2
  kAB,      // p  = a x^2 + b y^2
  kFourAB,  // 4p = a x^2 + b y^2
};

struct QuadForm {
  FormKind kind;
  uint64_t a = 1;  // coefficient of x^2 (1 unless kAB/kFourAB)
  uint64_t d = 1;  // coefficient of y^2

  static QuadForm p_form(uint64_t d) { return {FormKind::kP, 1, d}; }
  static QuadForm fourp_form(uint64_t d) { return {FormKind::kFourP, 1, d}; }
  static QuadForm ab_form(uint64_t a, uint64_t b) { return {FormKind::kAB, a, b}; }
  static QuadForm fourab_form(uint64_t a, uint64_t b) { return {FormKind::kFourAB, a, b}; }
};

struct FormRep {
  int64_t x = 0;
  int64_t y = 0;
};

// Positive solution, or nullopt when p is not represented.  p odd prime.
std::optional<FormRep> represent(const QuadForm& f, uint64_t p);

// Exhaustive O(sqrt p) search; unconditionally correct reference.
std::optional<FormRep> represent_search(const QuadForm& f, uint64_t p);

// Flip v's sign so that v == target (mod m); throws std::invalid_argument
// when neither sign works (e.g. 3 | v with m = 3).
int64_t normalize_sign(int64_t v, int64_t m, int64_t target);

}  // namespace congrlab
