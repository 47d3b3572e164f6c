#include "congrlab/scan.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "congrlab/modmath.hpp"

namespace congrlab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const VerificationRecord& r) {
  ordered_json j;
  j["claim"] = r.claim;
  j["p"] = r.p;
  j["case"] = r.case_label;
  j["e"] = r.e;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["pass"] = r.pass;
  j["sign_resolved"] = r.sign_resolved;
  if (r.rep.present) {
    j["rep"] = ordered_json{{"kind", r.rep.kind},
                            {"a", r.rep.a},
                            {"d", r.rep.d},
                            {"x", r.rep.x},
                            {"y", r.rep.y}};
  } else {
    j["rep"] = nullptr;
  }
  j["params"] = r.params;
  j["micros"] = r.micros;
  return j;
}

// RFC-4180: quote iff the field contains comma, quote, CR or LF.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_unquote(const std::string& s) {
  if (s.size() < 2 || s.front() != '"') return s;
  std::string out;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '"' && i + 2 < s.size() && s[i + 1] == '"') ++i;
    out += s[i];
  }
  return out;
}

// splits a CSV line on unquoted commas (records here never embed newlines)
std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') quoted = !quoted;
    if (ch == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

struct PrimeSlot {
  std::vector<VerificationRecord> records;
  // per selected claim: 0 = inapplicable, 1 = all records passed, 2 = failed
  std::vector<int> outcome;
};

}  // namespace

std::vector<const ClaimDef*> select_claims(const std::vector<std::string>& ids) {
  std::vector<const ClaimDef*> sel;
  auto add_group = [&](ClaimKind kind, bool both) {
    for (const auto& def : registry())
      if (both || def.kind == kind) sel.push_back(&def);
  };
  for (const auto& id : ids) {
    if (id == "all") {
      add_group(ClaimKind::kTheorem, true);
    } else if (id == "theorems") {
      add_group(ClaimKind::kTheorem, false);
    } else if (id == "conjectures") {
      add_group(ClaimKind::kConjecture, false);
    } else {
      const ClaimDef* def = find_claim(id);
      if (def == nullptr) throw std::invalid_argument("unknown claim: " + id);
      sel.push_back(def);
    }
  }
  // dedupe, keeping registry order
  std::vector<const ClaimDef*> out;
  std::unordered_set<const ClaimDef*> seen;
  for (const auto& def : registry()) {
    const ClaimDef* ptr = &def;
    if (seen.count(ptr)) continue;
    for (auto* s : sel)
      if (s == ptr) {
        out.push_back(ptr);
        seen.insert(ptr);
        break;
      }
  }
  return out;
}

std::string record_to_json(const VerificationRecord& r) { return record_json(r).dump(); }

const char* csv_header() {
  return "claim,p,case,e,lhs,rhs,pass,sign_resolved,rep_kind,rep_a,rep_d,rep_x,rep_y,"
         "params,micros";
}

std::string record_to_csv(const VerificationRecord& r) {
  std::ostringstream os;
  os << csv_field(r.claim) << ',' << r.p << ',' << csv_field(r.case_label) << ',' << r.e
     << ',' << r.lhs << ',' << r.rhs << ',' << (r.pass ? "true" : "false") << ','
     << csv_field(r.sign_resolved) << ',';
  if (r.rep.present)
    os << r.rep.kind << ',' << r.rep.a << ',' << r.rep.d << ',' << r.rep.x << ',' << r.rep.y;
  else
    os << ",,,,";
  os << ',' << csv_field(r.params) << ',' << r.micros;
  return os.str();
}

std::vector<std::pair<std::string, uint64_t>> read_done_pairs(std::istream& in,
                                                              ScanFormat format) {
  std::vector<std::pair<std::string, uint64_t>> done;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (format == ScanFormat::kJsonl) {
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("claim") || !j.contains("p")) continue;
      done.emplace_back(j["claim"].get<std::string>(), j["p"].get<uint64_t>());
    } else {
      auto fields = csv_split(line);
      if (fields.size() < 2 || fields[0] == "claim") continue;
      char* end = nullptr;
      uint64_t p = std::strtoull(fields[1].c_str(), &end, 10);
      if (end == fields[1].c_str() || *end != '\0') continue;
      done.emplace_back(csv_unquote(fields[0]), p);
    }
  }
  return done;
}

ScanResult run_scan(const ScanConfig& cfg, std::ostream& out) {
  auto selected = select_claims(cfg.ids);
  auto primes = primes_in_range(cfg.pmin, cfg.pmax);

  std::unordered_set<std::string> skip;
  skip.reserve(cfg.skip.size());
  for (const auto& [id, p] : cfg.skip) skip.insert(id + "@" + std::to_string(p));

  std::vector<PrimeSlot> slots(primes.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    size_t i;
    while ((i = next.fetch_add(1)) < primes.size()) {
      uint64_t p = primes[i];
      auto& slot = slots[i];
      slot.outcome.assign(selected.size(), 0);
      for (size_t ci = 0; ci < selected.size(); ++ci) {
        const ClaimDef& def = *selected[ci];
        if (!skip.empty() && skip.count(def.id + "@" + std::to_string(p))) continue;
        if (!def.applicable(p)) continue;
        size_t first = slot.records.size();
        auto t0 = std::chrono::steady_clock::now();
        def.eval(p, cfg.seed, slot.records);
        int64_t micros = 0;
        if (cfg.timing)
          micros = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
        bool all_pass = true;
        for (size_t ri = first; ri < slot.records.size(); ++ri) {
          slot.records[ri].micros = micros;
          all_pass = all_pass && slot.records[ri].pass;
        }
        slot.outcome[ci] = all_pass ? 1 : 2;
      }
    }
  };
  unsigned jobs = cfg.jobs == 0 ? 1 : cfg.jobs;
  if (jobs <= 1 || primes.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ScanResult res;
  for (auto* def : selected) res.per_claim.emplace_back(def->id, ClaimTally{});

  if (cfg.format == ScanFormat::kCsv && cfg.csv_header_line) out << csv_header() << "\n";
  for (size_t i = 0; i < slots.size(); ++i) {
    for (const auto& rec : slots[i].records) {
      if (cfg.fail_only && rec.pass) continue;
      out << (cfg.format == ScanFormat::kJsonl ? record_to_json(rec) : record_to_csv(rec))
          << "\n";
    }
    for (size_t ci = 0; ci < selected.size(); ++ci) {
      auto& tally = res.per_claim[ci].second;
      bool skipped = !skip.empty() && skip.count(selected[ci]->id + "@" +
                                                 std::to_string(primes[i]));
      if (skipped) continue;
      switch (slots[i].outcome[ci]) {
        case 0: tally.inapplicable++; break;
        case 1: tally.pass++; break;
        default:
          tally.fail++;
          if (selected[ci]->kind == ClaimKind::kTheorem)
            res.theorem_failures++;
          else
            res.conjecture_failures++;
          for (const auto& rec : slots[i].records)
            if (rec.claim == selected[ci]->id && !rec.pass)
              tally.counterexamples.push_back(rec);
      }
    }
  }

  ordered_json summary;
  summary["summary"] = ordered_json::object();
  for (const auto& [id, tally] : res.per_claim) {
    ordered_json e;
    e["pass"] = tally.pass;
    e["fail"] = tally.fail;
    e["inapplicable"] = tally.inapplicable;
    if (!tally.counterexamples.empty()) {
      e["counterexamples"] = ordered_json::array();
      for (const auto& rec : tally.counterexamples)
        e["counterexamples"].push_back(record_json(rec));
    }
    summary["summary"][id] = e;
  }
  summary["range"] = ordered_json{{"pmin", cfg.pmin}, {"pmax", cfg.pmax}};
  summary["seed"] = cfg.seed;
  // the summary travels with the data in both formats; CSV consumers see a
  // comment line, which resume tolerates
  if (cfg.format == ScanFormat::kCsv) out << "#";
  out << summary.dump() << "\n";
  return res;
}

}  // namespace congrlab
