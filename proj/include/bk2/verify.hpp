#pragma once

// Registry of the ten acceptance criteria, shared by the CLI verify command
// and the acceptance binary.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bk2/real.hpp"

namespace bk2 {

enum class Profile { Quick, Full };

struct VerifyOptions {
  Profile profile = Profile::Full;
  Bits prec = 128;
  std::uint64_t seed = 0x5eed;
  // Name of a reference coefficient to tamper with; empty for none.
  // One of: small-zero, middle-zero, gauss-encke, p-q.
  std::string mutate;
};

struct VerificationRecord {
  std::string claim_id;
  std::string title;
  std::string params;     // JSON object text
  std::string measured;   // decimal string
  std::string tolerance;  // decimal string
  std::string detail;     // per-case measurements
  bool pass = false;
  double runtime_ms = 0;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<VerificationRecord(const VerifyOptions&)> run;
};

const std::vector<Criterion>& criteria();
const std::vector<std::string>& mutation_names();

// Runs every registered criterion once, in registry order.
std::vector<VerificationRecord> run_verify(const VerifyOptions& opts,
                                           const std::function<void(const VerificationRecord&)>& on_done = {});

std::string profile_name(Profile p);
// Without timings the report is a pure function of (profile, prec, seed, mutate).
std::string verify_report_json(const std::vector<VerificationRecord>& recs, const VerifyOptions& opts,
                               bool include_timing = true);
std::string verify_table(const std::vector<VerificationRecord>& recs);

}  // namespace bk2
