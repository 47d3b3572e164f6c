// congrlab: scan claims over prime ranges, evaluate one claim at one prime,
// and expose the low-level kernels (jacobsthal / represent / legendre-eval)
// for scripting.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "congrlab/claims.hpp"
#include "congrlab/curves.hpp"
#include "congrlab/modmath.hpp"
#include "congrlab/orthopoly.hpp"
#include "congrlab/quadforms.hpp"
#include "congrlab/scan.hpp"

namespace {

unsigned default_jobs() {
  if (const char* env = std::getenv("CONGRLAB_JOBS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

int cmd_scan(congrlab::ScanConfig cfg, const std::string& out_path, bool resume) {
  if (resume && out_path != "-") {
    std::ifstream in(out_path);
    if (in) {
      cfg.skip = congrlab::read_done_pairs(in, cfg.format);
      if (cfg.format == congrlab::ScanFormat::kCsv && !cfg.skip.empty())
        cfg.csv_header_line = false;
    }
  }
  std::ofstream fout;
  std::ostream* os = &std::cout;
  if (out_path != "-") {
    fout.open(out_path, resume ? std::ios::app : std::ios::trunc);
    if (!fout) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    os = &fout;
  }
  congrlab::ScanResult res;
  try {
    res = congrlab::run_scan(cfg, *os);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  uint64_t pass = 0, fail = 0;
  for (const auto& [id, tally] : res.per_claim) {
    pass += tally.pass;
    fail += tally.fail;
  }
  std::cerr << "scan: " << pass << " pass, " << fail << " fail ("
            << res.theorem_failures << " theorem-class, " << res.conjecture_failures
            << " conjecture-class)\n";
  return res.theorem_failures > 0 ? 1 : 0;
}

void print_record(const congrlab::VerificationRecord& r) {
  std::cout << "  " << (r.case_label.empty() ? "main" : r.case_label) << ": "
            << (r.pass ? "pass" : "FAIL") << " lhs=" << r.lhs << " rhs=" << r.rhs
            << " (mod " << r.p << (r.e == 2 ? "^2" : "") << ")";
  if (r.rep.present) {
    std::cout << " rep[" << r.rep.kind;
    if (r.rep.a != 1) std::cout << " a=" << r.rep.a;
    std::cout << " d=" << r.rep.d << " x=" << r.rep.x << " y=" << r.rep.y << "]";
  }
  if (!r.sign_resolved.empty()) std::cout << " sign=" << r.sign_resolved;
  if (!r.params.empty()) std::cout << " params=" << r.params;
  std::cout << "\n";
}

int cmd_eval(const std::string& id, uint64_t p, uint64_t seed) {
  const congrlab::ClaimDef* def = congrlab::find_claim(id);
  if (def == nullptr) {
    std::cerr << "unknown claim: " << id << "\n";
    return 2;
  }
  if (p < 3 || !congrlab::is_prime(p)) {
    std::cerr << "p must be an odd prime\n";
    return 2;
  }
  bool applicable = false;
  auto records = congrlab::evaluate_claim(id, p, seed, &applicable);
  if (!applicable) {
    std::cout << id << " p=" << p << ": inapplicable\n";
    return 0;
  }
  bool all_pass = true;
  for (const auto& r : records) all_pass = all_pass && r.pass;
  std::cout << id << " p=" << p << ": " << (all_pass ? "pass" : "FAIL") << "\n";
  for (const auto& r : records) print_record(r);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congruence verification lab for binomial sums, Legendre "
               "polynomials and quadratic forms"};
  app.require_subcommand(1);

  // scan
  congrlab::ScanConfig cfg;
  cfg.ids = {"all"};
  cfg.jobs = default_jobs();
  std::string out_path = "-";
  std::string format = "jsonl";
  bool resume = false;
  auto* scan = app.add_subcommand("scan", "verify claims over a range of primes");
  scan->add_option("--claims", cfg.ids,
                   "claim ids and/or groups: all, theorems, conjectures");
  scan->add_option("--min", cfg.pmin, "lower end of the prime range");
  scan->add_option("--max", cfg.pmax, "upper end of the prime range");
  scan->add_option("--seed", cfg.seed, "seed for randomized claims");
  scan->add_option("--jobs", cfg.jobs, "worker threads (env CONGRLAB_JOBS)");
  scan->add_option("--out", out_path, "output path ('-' = stdout)");
  scan->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  scan->add_flag("--resume", resume, "skip (claim,p) pairs already in --out");
  scan->add_flag("--fail-only", cfg.fail_only, "write failing records only");
  scan->add_flag("--timing", cfg.timing, "stamp per-evaluation microseconds");

  // eval
  std::string eval_id;
  uint64_t eval_p = 0;
  uint64_t eval_seed = 0;
  auto* ev = app.add_subcommand("eval", "evaluate one claim at one prime");
  ev->add_option("claim", eval_id, "claim id")->required();
  ev->add_option("p", eval_p, "odd prime")->required();
  ev->add_option("--seed", eval_seed, "seed for randomized claims");

  // jacobsthal
  int64_t jm = 0, jn = 0;
  uint64_t jp = 0;
  auto* jac = app.add_subcommand("jacobsthal",
                                 "character sum of x^3+mx+n over F_p");
  jac->add_option("-p", jp, "odd prime")->required();
  jac->add_option("-m", jm, "linear coefficient")->required();
  jac->add_option("-n", jn, "constant coefficient")->required();

  // represent
  std::string form = "p";
  uint64_t ra = 1, rd = 0, rp = 0;
  auto* rep = app.add_subcommand("represent",
                                 "solve p (or 4p) = a*x^2 + d*y^2 in integers");
  rep->add_option("--form", form, "p | 4p | ab | 4ab")
      ->check(CLI::IsMember({"p", "4p", "ab", "4ab"}));
  rep->add_option("-a", ra, "x^2 coefficient (ab forms)");
  rep->add_option("-d,-b", rd, "y^2 coefficient")->required();
  rep->add_option("-p", rp, "odd prime")->required();

  // legendre-eval
  uint64_t ln = 0, lx = 0, lp = 0;
  auto* leg = app.add_subcommand("legendre-eval",
                                 "Legendre polynomial P_n(x) in Z/pZ");
  leg->add_option("-n", ln, "index")->required();
  leg->add_option("-x", lx, "argument (residue mod p)")->required();
  leg->add_option("-p", lp, "odd prime")->required();

  CLI11_PARSE(app, argc, argv);

  if (scan->parsed()) {
    cfg.format = format == "csv" ? congrlab::ScanFormat::kCsv
                                 : congrlab::ScanFormat::kJsonl;
    if (cfg.pmin < 3) cfg.pmin = 3;
    return cmd_scan(cfg, out_path, resume);
  }
  if (ev->parsed()) return cmd_eval(eval_id, eval_p, eval_seed);
  if (jac->parsed()) {
    if (jp < 3 || !congrlab::is_prime(jp)) {
      std::cerr << "p must be an odd prime\n";
      return 2;
    }
    std::cout << congrlab::jacobsthal_sum({jm, jn}, jp) << "\n";
    return 0;
  }
  if (rep->parsed()) {
    if (rp < 3 || !congrlab::is_prime(rp)) {
      std::cerr << "p must be an odd prime\n";
      return 2;
    }
    congrlab::QuadForm f;
    if (form == "p")
      f = congrlab::QuadForm::p_form(rd);
    else if (form == "4p")
      f = congrlab::QuadForm::fourp_form(rd);
    else if (form == "ab")
      f = congrlab::QuadForm::ab_form(ra, rd);
    else
      f = congrlab::QuadForm::fourab_form(ra, rd);
    auto r = congrlab::represent(f, rp);
    if (!r) {
      std::cout << "none\n";
      return 1;
    }
    std::cout << "(" << r->x << "," << r->y << ")\n";
    return 0;
  }
  if (leg->parsed()) {
    if (lp < 3 || !congrlab::is_prime(lp)) {
      std::cerr << "p must be an odd prime\n";
      return 2;
    }
    congrlab::Modulus m(lp, 1);
    congrlab::Residue x(lx % lp, m);
    std::cout << congrlab::legendre_eval(ln, x).value() << "\n";
    return 0;
  }
  return 2;
}
