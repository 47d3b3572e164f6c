// Acceptance gate.  Five criteria, one printed pass/fail line per criterion;
// the process exits nonzero if any of them fails.
//
//   1. every theorem-class claim verifies over [5, 10^4] with zero failures
//      (claims anchored on O(p) brute-force enumeration run over [5, 3000]
//      and must finish single-threaded within 10 minutes)
//   2. every conjecture-class claim verifies over [5, 2000]; counterexamples
//      are printed verbatim, never suppressed
//   3. five hand-derived worked examples pin exact record values
//   4. randomized property suites (>= 1000 cases across >= 25 primes each)
//      for the arithmetic kernels report zero violations
//   5. the criterion-1 scans are byte-identical at parallelism 1 and 8
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "congrlab/claims.hpp"
#include "congrlab/curves.hpp"
#include "congrlab/modmath.hpp"
#include "congrlab/orthopoly.hpp"
#include "congrlab/quadforms.hpp"
#include "congrlab/ratbinom.hpp"
#include "congrlab/scan.hpp"

using namespace congrlab;
namespace fs = std::filesystem;

namespace {

bool g_all_ok = true;

void criterion(int n, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", n, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  g_all_ok = g_all_ok && pass;
}

std::vector<std::string> theorem_ids(bool brute) {
  std::vector<std::string> out;
  for (const auto& def : registry())
    if (def.kind == ClaimKind::kTheorem && def.brute_force == brute) out.push_back(def.id);
  return out;
}

ScanResult scan_to_file(const std::vector<std::string>& ids, uint64_t pmax, unsigned jobs,
                        const fs::path& path) {
  ScanConfig cfg;
  cfg.ids = ids;
  cfg.pmin = 5;
  cfg.pmax = pmax;
  cfg.seed = 0;
  cfg.jobs = jobs;
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  return run_scan(cfg, out);
}

bool same_bytes(const fs::path& a, const fs::path& b) {
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  if (!fa || !fb) return false;
  std::vector<char> ba(1 << 20), bb(1 << 20);
  for (;;) {
    fa.read(ba.data(), static_cast<std::streamsize>(ba.size()));
    fb.read(bb.data(), static_cast<std::streamsize>(bb.size()));
    if (fa.gcount() != fb.gcount()) return false;
    if (!std::equal(ba.begin(), ba.begin() + fa.gcount(), bb.begin())) return false;
    if (fa.gcount() == 0) return fa.eof() && fb.eof();
    if (fa.eof() || fb.eof()) return fa.eof() && fb.eof();
  }
}

uint64_t total_failures(const ScanResult& r) {
  return r.theorem_failures + r.conjecture_failures;
}

// ---- criterion 3 helpers ----

bool pin(const char* id, uint64_t p, uint64_t value, int e, std::string& log) {
  bool applicable = false;
  auto recs = evaluate_claim(id, p, 0, &applicable);
  bool seen = false, all_pass = applicable && !recs.empty();
  for (const auto& r : recs) {
    all_pass = all_pass && r.pass;
    seen = seen || (r.e == e && r.lhs == value && r.rhs == value);
  }
  bool ok = all_pass && seen;
  log += std::string(id) + "@p=" + std::to_string(p) + (ok ? " ok" : " MISMATCH") + "; ";
  return ok;
}

// ---- criterion 4 machinery ----

struct Suite {
  const char* name;
  uint64_t cases = 0;
  uint64_t violations = 0;
  std::vector<uint64_t> primes_used;

  uint64_t prime_count() const {
    std::vector<uint64_t> v = primes_used;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v.size();
  }
  void tally(uint64_t p, bool ok) {
    ++cases;
    primes_used.push_back(p);
    if (!ok) ++violations;
  }
  bool report() const {
    bool ok = violations == 0 && cases >= 1000 && prime_count() >= 25;
    std::printf("  suite %-28s cases=%llu primes=%llu violations=%llu %s\n", name,
                static_cast<unsigned long long>(cases),
                static_cast<unsigned long long>(prime_count()),
                static_cast<unsigned long long>(violations), ok ? "ok" : "VIOLATED");
    return ok;
  }
};

std::vector<uint64_t> sample_primes(std::mt19937_64& rng, size_t count, uint64_t lo,
                                    uint64_t hi) {
  auto all = primes_in_range(lo, hi);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(count, all.size()));
  return all;
}

uint64_t rnd(std::mt19937_64& rng, uint64_t lo, uint64_t hi) {
  return std::uniform_int_distribution<uint64_t>(lo, hi)(rng);
}

// the two Legendre-symbol routes (reciprocity vs Euler criterion) agree
void suite_symbol_dual(Suite& s, std::mt19937_64& rng) {
  for (uint64_t p : sample_primes(rng, 40, 5, 100000)) {
    for (int i = 0; i < 30; ++i) {
      int64_t a = static_cast<int64_t>(rnd(rng, 0, 2 * p)) - static_cast<int64_t>(p);
      s.tally(p, legendre_symbol(a, p) == legendre_symbol_euler(a, p));
    }
  }
}

// P_n(-x) = (-1)^n P_n(x)
void suite_parity(Suite& s, std::mt19937_64& rng) {
  for (uint64_t p : sample_primes(rng, 30, 5, 3000)) {
    Modulus m(p, 1);
    for (int i = 0; i < 40; ++i) {
      uint64_t n = rnd(rng, 0, p - 1);
      auto x = make_residue(static_cast<int64_t>(rnd(rng, 0, p - 1)), m);
      auto lhs = legendre_eval(n, -x);
      auto rhs = legendre_eval(n, x).scale(n % 2 ? -1 : 1);
      s.tally(p, lhs == rhs);
    }
  }
}

// the closed-form evaluation agrees with the three-term recurrence (mod p and p^2)
void suite_closed_form(Suite& s, std::mt19937_64& rng) {
  for (uint64_t p : sample_primes(rng, 30, 5, 2000)) {
    for (int i = 0; i < 40; ++i) {
      Modulus m(p, 1 + static_cast<int>(i & 1));
      uint64_t n = rnd(rng, 0, p - 1);
      auto x = make_residue(static_cast<int64_t>(rnd(rng, 0, m.m - 1)), m);
      s.tally(p, legendre_eval_murphy(n, x).value() == legendre_eval(n, x).value());
    }
  }
}

// index folding: P_{p-1-m} == P_m and P_{p+m} == x^p P_m in Z/pZ
void suite_folding(Suite& s, std::mt19937_64& rng) {
  for (uint64_t p : sample_primes(rng, 30, 5, 3000)) {
    Modulus m(p, 1);
    for (int i = 0; i < 40; ++i) {
      uint64_t k = rnd(rng, 0, p - 1);
      auto x = make_residue(static_cast<int64_t>(rnd(rng, 0, p - 1)), m);
      bool ok = legendre_eval(p - 1 - k, x).value() == legendre_eval(k, x).value();
      uint64_t small = rnd(rng, 0, std::min<uint64_t>(40, p - 1));  // keep p+small < 2p
      ok = ok && legendre_eval(p + small, x).value() ==
                     (legendre_eval(small, x) * x.pow(p)).value();
      s.tally(p, ok);
    }
  }
}

// half-index split through the squared argument, base case and companion
void suite_squared_argument(Suite& s, std::mt19937_64& rng) {
  for (uint64_t p : sample_primes(rng, 30, 11, 2000)) {
    Modulus m(p, 1);
    for (int i = 0; i < 40; ++i) {
      uint64_t n = rnd(rng, 0, (p - 3) / 4);
      auto x = make_residue(static_cast<int64_t>(rnd(rng, 1, p - 1)), m);
      auto xsq = x * x;
      bool ok = legendre_from_square(n, xsq, false).value() ==
                legendre_eval(2 * n, x).value();
      ok = ok && (legendre_from_square(n, xsq, true) * x).value() ==
                     legendre_eval(2 * n + 1, x).value();
      s.tally(p, ok);
    }
  }
}

// two-parameter family specializes to the one-parameter values
void suite_jacobi(Suite& s, std::mt19937_64& rng) {
  for (uint64_t p : sample_primes(rng, 30, 11, 2000)) {
    Modulus m(p, 1);
    for (int i = 0; i < 40; ++i) {
      uint64_t n = rnd(rng, 0, (p - 3) / 4);
      auto x = make_residue(static_cast<int64_t>(rnd(rng, 0, p - 1)), m);
      auto y = x * x;
      y += y;
      y -= y.one_like();
      bool ok = legendre_eval(2 * n, x).value() ==
                jacobi_eval(n, make_rational(0, 1), make_rational(-1, 2), y).value();
      ok = ok && legendre_eval(2 * n + 1, x).value() ==
                     (x * jacobi_eval(n, make_rational(0, 1), make_rational(1, 2), y)).value();
      s.tally(p, ok);
    }
  }
}

// C(a, k) mod p depends only on <a>_p: compare against an additive Pascal row
void suite_binom_reduction(Suite& s, std::mt19937_64& rng) {
  for (uint64_t p : sample_primes(rng, 30, 211, 5000)) {
    Modulus m(p, 1);
    for (int i = 0; i < 40; ++i) {
      uint64_t amod = rnd(rng, 0, 200);  // the reduced numerator <a>_p
      uint64_t den = rnd(rng, 1, 50);
      while (den % p == 0) ++den;
      int64_t num = static_cast<int64_t>(mulmod(amod, den, p)) -
                    static_cast<int64_t>(p) * static_cast<int64_t>(rnd(rng, 0, 3));
      auto a = lift_rational(make_rational(num, static_cast<int64_t>(den)), m);
      uint64_t k = rnd(rng, 0, std::min<uint64_t>(240, p - 1));
      // Pascal row `amod` mod p, built with additions only
      std::vector<uint64_t> row(amod + 1, 0);
      row[0] = 1;
      for (uint64_t r = 1; r <= amod; ++r)
        for (uint64_t c = r; c >= 1; --c) row[c] = addmod(row[c], row[c - 1], p);
      uint64_t want = k <= amod ? row[k] : 0;
      s.tally(p, binom_general(a, k).value() == want);
    }
  }
}

// C(-1/2, k) = C(2k, k) / (-4)^k, the right side from factorial tables
void suite_half_binom(Suite& s, std::mt19937_64& rng) {
  for (uint64_t p : sample_primes(rng, 30, 101, 4000)) {
    Modulus m(p, 1);
    auto half = lift_rational(make_rational(-1, 2), m);
    std::vector<uint64_t> fact(p);
    fact[0] = 1;
    for (uint64_t i = 1; i < p; ++i) fact[i] = mulmod(fact[i - 1], i, p);
    for (int i = 0; i < 40; ++i) {
      uint64_t k = rnd(rng, 0, (p - 1) / 2);
      uint64_t central = mulmod(fact[2 * k], invmod(mulmod(fact[k], fact[k], p), p), p);
      uint64_t want = mulmod(central, invmod(powmod(smod(-4, p), k, p), p), p);
      s.tally(p, binom_general(half, k).value() == want);
    }
  }
}

// |S_p(m,n)| <= 2 sqrt(p) on 200 random nonsingular curves per prime
void suite_hasse(Suite& s, std::mt19937_64& rng) {
  for (uint64_t p : primes_in_range(5, 2000)) {
    auto tab = square_table(p);
    int accepted = 0;
    while (accepted < 200) {
      int64_t m = static_cast<int64_t>(rnd(rng, 0, p - 1));
      int64_t n = static_cast<int64_t>(rnd(rng, 0, p - 1));
      if (smod(4 * m * m * m + 27 * n * n, p) == 0) continue;
      ++accepted;
      int64_t sum = jacobsthal_sum({m, n}, p, &tab);
      s.tally(p, static_cast<uint64_t>(sum * sum) <= 4 * p);
    }
  }
}

// the gcd-descent solver agrees with exhaustive search on every form the
// claims use, for all primes up to 10^4
void suite_cornacchia(Suite& s, std::mt19937_64&) {
  std::vector<QuadForm> forms;
  for (uint64_t d : {1, 2, 3, 5, 6, 7, 10, 13, 15, 22, 37, 58})
    forms.push_back(QuadForm::p_form(d));
  for (uint64_t d : {11, 19, 27, 43, 51, 67, 75, 123, 163, 267})
    forms.push_back(QuadForm::fourp_form(d));
  for (auto [a, b] : {std::pair<uint64_t, uint64_t>{2, 3}, {5, 3}, {2, 11}, {2, 29}})
    forms.push_back(QuadForm::ab_form(a, b));
  for (auto [a, b] : {std::pair<uint64_t, uint64_t>{17, 3}, {25, 3}, {41, 3}, {89, 3}})
    forms.push_back(QuadForm::fourab_form(a, b));
  for (uint64_t p : primes_in_range(5, 10000)) {
    for (const auto& f : forms) {
      auto fast = represent(f, p);
      auto slow = represent_search(f, p);
      bool ok = fast.has_value() == slow.has_value();
      if (ok && fast) {
        uint64_t target = (f.kind == FormKind::kFourP || f.kind == FormKind::kFourAB)
                              ? 4 * p
                              : p;
        ok = static_cast<uint64_t>(fast->x * fast->x) * f.a +
                 static_cast<uint64_t>(fast->y * fast->y) * f.d ==
             target;
        // the d = 1 form pins the odd coordinate first; the search oracle
        // orders by x, so compare coordinates only for the unambiguous forms
        if (!(f.kind == FormKind::kP && f.d == 1))
          ok = ok && fast->x == slow->x && fast->y == slow->y;
      }
      s.tally(p, ok);
    }
  }
}

// Frobenius acts as w -> t^{(p-1)/2} w; for nonresidue t the norm comes out
// of the Euler power x^{p+1}
void suite_quadext(Suite& s, std::mt19937_64& rng) {
  for (uint64_t p : sample_primes(rng, 30, 5, 3000)) {
    for (int i = 0; i < 40; ++i) {
      uint64_t t = rnd(rng, 1, p - 1);
      uint64_t a = rnd(rng, 0, p - 1), b = rnd(rng, 0, p - 1);
      QuadExt x(a, b, t, p);
      uint64_t tpow = powmod(t, (p - 1) / 2, p);
      QuadExt frob(a, mulmod(b, tpow, p), t, p);
      bool ok = quadext_pow(x, p) == frob;
      if (legendre_symbol(static_cast<int64_t>(t), p) == -1) {
        uint64_t norm = submod(mulmod(a, a, p), mulmod(t, mulmod(b, b, p), p), p);
        auto eu = quadext_pow(x, p + 1);
        ok = ok && eu.in_base() && eu.base_value() == norm;
      }
      s.tally(p, ok);
    }
  }
}

}  // namespace

int main() {
  fs::path tmp = fs::temp_directory_path();
  fs::path bf1 = tmp / "congrlab_accept_bf_j1.jsonl";
  fs::path bf8 = tmp / "congrlab_accept_bf_j8.jsonl";
  fs::path th1 = tmp / "congrlab_accept_th_j1.jsonl";
  fs::path th8 = tmp / "congrlab_accept_th_j8.jsonl";

  // ---- criterion 1: theorem suite ----
  auto t0 = std::chrono::steady_clock::now();
  ScanResult bf_res = scan_to_file(theorem_ids(true), 3000, 1, bf1);
  double bf_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ScanResult th_res = scan_to_file(theorem_ids(false), 10000, 1, th1);
  uint64_t fails = total_failures(bf_res) + total_failures(th_res);
  bool c1 = fails == 0 && bf_secs < 600.0;
  {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "theorem scans [5,3000] brute-force + [5,10^4] rest: %llu failures, "
                  "brute-force leg %.1fs (limit 600s)",
                  static_cast<unsigned long long>(fails), bf_secs);
    criterion(1, c1, buf);
  }

  // ---- criterion 2: conjecture suite ----
  {
    ScanConfig cfg;
    cfg.ids = {"conjectures"};
    cfg.pmin = 5;
    cfg.pmax = 2000;
    cfg.seed = 0;
    cfg.jobs = 8;
    std::ofstream sink(tmp / "congrlab_accept_conj.jsonl", std::ios::trunc);
    ScanResult res = run_scan(cfg, sink);
    for (const auto& [id, tally] : res.per_claim)
      for (const auto& rec : tally.counterexamples)
        std::printf("  counterexample: %s\n", record_to_json(rec).c_str());
    criterion(2, total_failures(res) == 0,
              "conjecture scan [5,2000]: " + std::to_string(total_failures(res)) +
                  " counterexamples");
  }

  // ---- criterion 3: worked-example pins ----
  {
    std::string log;
    bool ok = pin("T4.1", 19, 15, 1, log);
    ok = pin("T6.1", 7, 6, 1, log) && ok;
    ok = pin("CJ6.1", 7, 6, 2, log) && ok;
    ok = pin("T5.3", 29, 20, 1, log) && ok;
    ok = pin("G1", 13, 20 % 13, 1, log) && ok;
    // the p=13 pin also fixes the coordinate itself
    auto g1 = evaluate_claim("G1", 13, 0);
    ok = ok && !g1.empty() && g1[0].rep.present && g1[0].rep.x == -3;
    criterion(3, ok, log);
  }

  // ---- criterion 4: randomized property suites ----
  {
    std::mt19937_64 rng(20240915);
    Suite suites[] = {{"symbol-dual-route"}, {"parity"},
                      {"closed-form-vs-recurrence"}, {"index-folding"},
                      {"squared-argument-split"}, {"jacobi-specialization"},
                      {"binom-residue-reduction"}, {"half-binom-closed-form"},
                      {"hasse-bound"}, {"cornacchia-vs-search"},
                      {"quadext-frobenius-euler"}};
    suite_symbol_dual(suites[0], rng);
    suite_parity(suites[1], rng);
    suite_closed_form(suites[2], rng);
    suite_folding(suites[3], rng);
    suite_squared_argument(suites[4], rng);
    suite_jacobi(suites[5], rng);
    suite_binom_reduction(suites[6], rng);
    suite_half_binom(suites[7], rng);
    suite_hasse(suites[8], rng);
    suite_cornacchia(suites[9], rng);
    suite_quadext(suites[10], rng);
    bool ok = true;
    uint64_t violations = 0;
    for (const auto& s : suites) {
      ok = s.report() && ok;
      violations += s.violations;
    }
    criterion(4, ok,
              "11 property suites, " + std::to_string(violations) + " violations");
  }

  // ---- criterion 5: determinism under parallelism ----
  {
    ScanResult bf8_res = scan_to_file(theorem_ids(true), 3000, 8, bf8);
    ScanResult th8_res = scan_to_file(theorem_ids(false), 10000, 8, th8);
    (void)bf8_res;
    (void)th8_res;
    bool ok = same_bytes(bf1, bf8) && same_bytes(th1, th8);
    criterion(5, ok, "criterion-1 scans byte-identical at jobs=1 and jobs=8");
  }

  return g_all_ok ? 0 : 1;
}
