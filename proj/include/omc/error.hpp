#pragma once

#include <stdexcept>
#include <string>

namespace omc {

/// Failure categories. Each maps onto one CLI exit status.
enum class ErrorKind {
  Domain,         ///< argument outside an operation's precondition (exit 1)
  Invariant,      ///< malformed or invalid input data (exit 2)
  Hypothesis,     ///< input violates a theorem's hypothesis (exit 3)
  ResourceGuard,  ///< enumeration would exceed its size guard (exit 4)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace omc
