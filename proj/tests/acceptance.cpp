// Acceptance gate: one line per criterion. Criteria 1-8 come from the
// verification sweep; 9 reruns the sweep and compares the bundles byte for
// byte.

#include <cstdio>
#include <string>

#include "helix/verify.hpp"

int main() {
  using namespace helix;
  const SweepConfig config;
  const VerificationBundle first = run_verify(config);
  const VerificationBundle second = run_verify(config);

  bool all = true;
  for (const auto& check : first.report["checks"]) {
    const bool pass = check["pass"].get<bool>();
    all = all && pass;
    std::printf("criterion %d %s: %s\n", check["id"].get<int>(), check["name"].get<std::string>().c_str(),
                pass ? "PASS" : "FAIL");
    for (const auto& why : check["failures"]) std::printf("    %s\n", why.get<std::string>().c_str());
  }
  const bool same = first.report.dump() == second.report.dump();
  all = all && same;
  std::printf("criterion 9 determinism: %s\n", same ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
