// Prime-range scan driver: evaluates selected claims over a prime range,
// streams one record per evaluation (JSONL or CSV) plus a trailing summary
// object, and tallies failures by claim kind.  Output is deterministic for a
// fixed config regardless of parallelism: records appear in (p, registry
// index) order from a single writer.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "congrlab/claims.hpp"

namespace congrlab {

enum class ScanFormat { kJsonl, kCsv };

struct ScanConfig {
  // claim ids; the groups "all", "theorems", "conjectures" expand in
  // registry order
  std::vector<std::string> ids;
  uint64_t pmin = 5;
  uint64_t pmax = 100;
  uint64_t seed = 0;
  unsigned jobs = 1;
  ScanFormat format = ScanFormat::kJsonl;
  bool fail_only = false;  // write failing records only (summary unchanged)
  bool timing = false;     // stamp micros; off keeps output run-independent
  // suppressed when appending to an existing CSV (--resume)
  bool csv_header_line = true;
  // (claim, p) pairs already present in a previous output (--resume)
  std::vector<std::pair<std::string, uint64_t>> skip;
};

struct ClaimTally {
  uint64_t pass = 0;
  uint64_t fail = 0;
  uint64_t inapplicable = 0;
  std::vector<VerificationRecord> counterexamples;  // failing records, verbatim
};

struct ScanResult {
  // one entry per selected claim, registry order
  std::vector<std::pair<std::string, ClaimTally>> per_claim;
  uint64_t theorem_failures = 0;
  uint64_t conjecture_failures = 0;
};

// Expands groups and validates ids against the registry; throws
// std::invalid_argument ("unknown claim: X") on a bad id.
std::vector<const ClaimDef*> select_claims(const std::vector<std::string>& ids);

// Runs the scan and streams records + summary to out.
ScanResult run_scan(const ScanConfig& cfg, std::ostream& out);

// Parses (claim, p) pairs back out of an existing output file for --resume.
// Tolerates the trailing summary line and the CSV header.
std::vector<std::pair<std::string, uint64_t>> read_done_pairs(std::istream& in,
                                                              ScanFormat format);

// Serialization shared with the single-claim eval command.
std::string record_to_json(const VerificationRecord& r);
std::string record_to_csv(const VerificationRecord& r);
const char* csv_header();

}  // namespace congrlab
