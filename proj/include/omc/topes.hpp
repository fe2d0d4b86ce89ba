#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omc/sign_vector.hpp"

namespace omc {

/// A simple oriented matroid given by its set of topes.
///
/// Validation covers only what the committee theory relies on: uniform
/// length, no duplicates, closure under negation, no parallel or
/// antiparallel ground-set elements, and every positive halfspace holding
/// exactly half of the topes. The oriented-matroid tope axioms themselves
/// are NOT checked; a tope file is trusted to come from a real oriented
/// matroid (for instance one produced by from_central_arrangement).
class ToposSystem {
 public:
  /// Validates and sorts into canonical order. Throws Error(Invariant).
  static ToposSystem make(std::size_t ground_size, std::vector<SignVector> topes);

  /// t
  std::size_t ground_size() const noexcept { return t_; }
  /// Topes in canonical (lexicographic, + < -) order.
  const std::vector<SignVector>& topes() const noexcept { return topes_; }
  std::size_t size() const noexcept { return topes_.size(); }

  std::optional<std::size_t> index_of(const SignVector& v) const;
  bool contains(const SignVector& v) const { return index_of(v).has_value(); }

  friend bool operator==(const ToposSystem&, const ToposSystem&) = default;

 private:
  ToposSystem(std::size_t t, std::vector<SignVector> topes) : t_(t), topes_(std::move(topes)) {}

  std::size_t t_ = 0;
  std::vector<SignVector> topes_;
};

/// Tope file: one tope per line over '+'/'-', '#' starts a comment.
/// Errors carry 1-based line numbers. Throws Error(Invariant).
ToposSystem parse_topes(std::string_view text);

/// Inverse of parse_topes: one tope per line in canonical order.
std::string serialize_topes(const ToposSystem& sys);

/// T_e^+ for a 1-based ground-set element e. Throws Error(Domain).
std::vector<SignVector> positive_halfspace(const ToposSystem& sys, std::size_t e);

/// True iff the all-plus sign vector is a tope.
bool is_acyclic(const ToposSystem& sys);

enum class Vote { ClassA, ClassB, Tie };

/// Majority decision over one sign per committee member: ClassA when fewer
/// than half are '+', ClassB when more than half are. Throws on empty input.
Vote classify_vote(std::span<const Sign> signs);

std::string to_string(Vote v);

}  // namespace omc
