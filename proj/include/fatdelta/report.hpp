#pragma once

#include <string>
#include <vector>

namespace fatdelta {

/// Outcome of a bounded verification sweep.  A pass is exactly the absence
/// of enumerated counterexamples at the stated bound; notes carry observed
/// counts that are reported without being asserted.
struct CheckReport {
  std::string suite;
  long long checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool pass() const { return violations.empty(); }
  void violation(const std::string& v) { violations.push_back(v); }
  void note(const std::string& n) { notes.push_back(n); }
};

}  // namespace fatdelta
