#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signedspec/families.hpp"

namespace signedspec {

struct SweepOptions {
  /// Instances with more vertices are skipped. 13 covers the largest star block.
  int max_n = 13;
  /// Test hook: corrupt the closed form of this family ("cycle", "kmr", …).
  std::optional<std::string> inject_fault;
};

struct SweepCheck {
  std::string instance;
  std::string check;
  bool passed = false;
  std::string detail;
};

struct SweepReport {
  std::vector<SweepCheck> checks;

  bool passed() const;
  std::size_t failure_count() const;
  /// One line per check: "PASS|FAIL <instance> <check>[: detail]".
  std::string to_text() const;
};

/// Cycles and paths n ≤ 12 (both δ), K^{m,r}_n for m ∈ {1,2,3}, r ∈ {2,3},
/// n ∈ [mr, mr+3], mixed profiles with n ≤ 8 and star blocks r ∈ {2,3,4},
/// k ≤ 4, all l; instances above `max_n` vertices are dropped.
std::vector<FamilySpec> family_sweep(int max_n = 13);

/// Every profile (partition into positive parts) with 1 ≤ Σ n_i ≤ max_total.
std::vector<CliqueProfile> profiles_up_to(int max_total);

/// "kmr 8 2 3" style label.
std::string instance_label(const FamilySpec& spec);

SweepReport run_sweep(const SweepOptions& options = {});

}  // namespace signedspec
