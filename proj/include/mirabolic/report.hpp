#pragma once

#include <string>
#include <vector>

namespace mirabolic {

/// Outcome of a verification sweep: how many identities were checked, how
/// many failed, and a description of the first few failures.
struct SuiteReport {
  long checks = 0;
  long failed = 0;
  std::vector<std::string> failures;

  bool passed() const { return failed == 0; }

  void note_failure(std::string description) {
    ++failed;
    if (failures.size() < 32) failures.push_back(std::move(description));
  }
};

}  // namespace mirabolic
