#include "omc/report.hpp"

#include <algorithm>
#include <ostream>

namespace omc {

Report Report::skipped(std::string title, std::string reason) {
  Report r(std::move(title));
  r.skipped_ = true;
  r.skip_reason_ = std::move(reason);
  return r;
}

void Report::check(const std::string& name, bool ok, const std::string& detail) {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckResult& c) { return c.name == name; });
  if (it == checks_.end()) {
    checks_.push_back({name, ok, ok ? std::string{} : detail});
    return;
  }
  if (it->passed && !ok) {
    it->passed = false;
    it->detail = detail;
  }
}

void Report::merge(const Report& other) {
  if (other.skipped_) {
    check(other.title_, false, "skipped: " + other.skip_reason_);
    return;
  }
  for (const auto& c : other.checks_) check(other.title_ + "/" + c.name, c.passed, c.detail);
}

Verdict Report::verdict() const noexcept {
  if (skipped_) return Verdict::SkippedHypothesis;
  return first_failure() ? Verdict::Fail : Verdict::Pass;
}

const CheckResult* Report::first_failure() const noexcept {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::SkippedHypothesis: return "SKIPPED-HYPOTHESIS";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Report& r) {
  if (r.verdict() == Verdict::SkippedHypothesis) {
    return os << "SKIPPED-HYPOTHESIS " << r.title() << ": " << r.skip_reason() << '\n';
  }
  for (const auto& c : r.checks()) {
    os << (c.passed ? "PASS " : "FAIL ") << r.title() << '/' << c.name;
    if (!c.passed) os << ": " << c.detail;
    os << '\n';
  }
  return os;
}

}  // namespace omc
