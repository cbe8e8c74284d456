#pragma once

#include <string>
#include <vector>

namespace s3cover {

struct SelfTestCheck {
  std::string name;
  bool passed;
};

struct SelfTestReport {
  std::vector<SelfTestCheck> checks;

  bool passed() const {
    for (const auto &c : checks)
      if (!c.passed)
        return false;
    return true;
  }
};

/// Group-ring identities (idempotents, centrality, tau-interchange) and the
/// projector identities of the representation on A.
SelfTestReport run_selftest();

} // namespace s3cover
