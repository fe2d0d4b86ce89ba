#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omc {

enum class Verdict { Pass, Fail, SkippedHypothesis };

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample when !passed
};

/// Outcome of a verification routine: a named list of checks.
class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  static Report skipped(std::string title, std::string reason);

  /// Records a check. Only the first counterexample for a name is kept.
  void check(const std::string& name, bool ok, const std::string& detail = {});

  /// Appends every check of `other`, prefixing names with its title.
  void merge(const Report& other);

  const std::string& title() const noexcept { return title_; }
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  Verdict verdict() const noexcept;
  bool passed() const noexcept { return verdict() == Verdict::Pass; }
  const std::string& skip_reason() const noexcept { return skip_reason_; }

  /// First failing check, or nullptr.
  const CheckResult* first_failure() const noexcept;

 private:
  std::string title_;
  std::vector<CheckResult> checks_;
  bool skipped_ = false;
  std::string skip_reason_;
};

std::string to_string(Verdict v);

/// One line per check: "PASS name" / "FAIL name: detail".
std::ostream& operator<<(std::ostream& os, const Report& r);

}  // namespace omc
