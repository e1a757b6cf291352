// Runs the ten acceptance criteria at full scale and prints one line each.
//   acceptance [--quick] [--expect-fail C03,...] [--json PATH]
// Exit status is the number of criteria whose outcome differs from the
// expectation (all pass unless listed).

#include <cstdio>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "bk2/verify.hpp"

int main(int argc, char** argv) {
  bk2::VerifyOptions opts;
  std::set<std::string> expect_fail;
  std::string json_path;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--quick")) {
      opts.profile = bk2::Profile::Quick;
    } else if (!std::strcmp(argv[i], "--expect-fail") && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string id; std::getline(ss, id, ',');) expect_fail.insert(id);
    } else if (!std::strcmp(argv[i], "--json") && i + 1 < argc) {
      json_path = argv[++i];
    } else {
      std::fprintf(stderr, "usage: acceptance [--quick] [--expect-fail IDS] [--json PATH]\n");
      return 64;
    }
  }
  int unexpected = 0;
  auto recs = bk2::run_verify(opts, [&](const bk2::VerificationRecord& r) {
    bool expected_fail = expect_fail.count(r.claim_id) > 0;
    const char* tag = r.pass ? (expected_fail ? "PASS (listed as expected failure)" : "PASS")
                             : (expected_fail ? "FAIL (expected, see notes)" : "FAIL");
    if (r.pass == expected_fail) ++unexpected;
    std::printf("%s %-4s %s | measured %s, tolerance %s | %.0f ms\n    %s\n", r.claim_id.c_str(), tag, r.title.c_str(),
                r.measured.c_str(), r.tolerance.c_str(), r.runtime_ms, r.detail.c_str());
    std::fflush(stdout);
  });
  if (!json_path.empty()) std::ofstream(json_path) << bk2::verify_report_json(recs, opts) << '\n';
  return unexpected;
}
