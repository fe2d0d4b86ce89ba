#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "omc/fraction.hpp"
#include "omc/report.hpp"
#include "omc/topes.hpp"

namespace omc {

/// Bit i set <=> the i-th tope (canonical order) is a member.
using TopeMask = std::uint64_t;

/// Halfspace masks and opposite pairing of a tope system, for bitset work.
class TopeIndex {
 public:
  explicit TopeIndex(const ToposSystem& sys);

  std::size_t tope_count() const noexcept { return count_; }
  std::size_t ground_size() const noexcept { return halfspaces_.size(); }
  /// Mask of T_e^+ for a 0-based element.
  TopeMask halfspace(std::size_t e0) const noexcept { return halfspaces_[e0]; }
  std::size_t opposite_of(std::size_t i) const noexcept { return opposite_[i]; }

  /// |K ∩ T_e^+| for every element.
  std::vector<int> counts(TopeMask k) const;
  bool has_opposite_pair(TopeMask k) const noexcept;
  /// Strict majority in every positive halfspace.
  bool majority(TopeMask k) const noexcept;
  /// |K ∩ T_e^+| >= ceil((|K|+1)/2) for every element.
  bool meets_threshold(TopeMask k) const noexcept;

  TopeMask mask_of(const ToposSystem& sys, std::span<const SignVector> members) const;

 private:
  std::size_t count_;
  std::vector<TopeMask> halfspaces_;
  std::vector<std::size_t> opposite_;
};

/// A tope committee: strict majority of members in every positive halfspace.
class Committee {
 public:
  const std::vector<SignVector>& members() const noexcept { return members_; }
  TopeMask mask() const noexcept { return mask_; }
  /// counts()[e-1] = |K ∩ T_e^+|
  const std::vector<int>& counts() const noexcept { return counts_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool has_opposite_pair() const noexcept;

  /// "++-,+-+,-++"
  std::string str() const;

  friend bool operator==(const Committee& a, const Committee& b) { return a.members_ == b.members_; }
  friend auto operator<=>(const Committee& a, const Committee& b) { return a.members_ <=> b.members_; }

 private:
  friend Committee committee_from_mask(const ToposSystem&, const TopeIndex&, TopeMask);
  std::vector<SignVector> members_;
  TopeMask mask_ = 0;
  std::vector<int> counts_;
};

/// Builds a Committee from a validated mask. Throws Error(Domain) if the
/// subset is empty or not a committee.
Committee committee_from_mask(const ToposSystem& sys, const TopeIndex& index, TopeMask mask);

/// Throws Error(Domain) if K is empty, has duplicates, holds a non-tope,
/// or is not a committee.
Committee make_committee(const ToposSystem& sys, std::span<const SignVector> members);

bool is_committee(const ToposSystem& sys, std::span<const SignVector> members);

/// Same family through the layer threshold |K ∩ T_e^+| >= ceil((k+1)/2).
bool is_committee_threshold(const ToposSystem& sys, std::span<const SignVector> members);

struct EnumerationOptions {
  bool no_opposites = false;
  bool force = false;  ///< lift the resource guards
};

/// Streams every k-subset committee in lexicographic order.
/// Guard: C(|T|, k) <= 1e8 unless forced.
void for_each_committee_in_layer(const ToposSystem& sys, std::size_t k, EnumerationOptions opts,
                                 const std::function<void(const Committee&)>& visit);

std::vector<Committee> enumerate_layer(const ToposSystem& sys, std::size_t k, EnumerationOptions opts = {});

struct CommitteeFamily {
  bool minimal = false;
  bool no_opposites = false;
  /// Every size 1..|T| is present; empty layers map to empty lists.
  std::map<std::size_t, std::vector<Committee>> layers;

  std::size_t total() const;
  std::vector<Committee> all() const;
};

/// Guard: 2^|T| <= 2^24 unless forced.
CommitteeFamily enumerate_all(const ToposSystem& sys, EnumerationOptions opts = {});

/// Inclusion-minimal committees.
CommitteeFamily minimal_committees(const ToposSystem& sys, bool force = false);

/// Minimal committees of the smallest cardinality.
std::vector<Committee> minimum_committees(const ToposSystem& sys, bool force = false);

/// reduce(|K ∩ T_e^+|, |K|) for a 1-based element e.
Fraction fraction_signature(const ToposSystem& sys, const Committee& k, std::size_t e);

/// K ∪ {T, -T}; throws Error(Domain) if T or -T is already in K.
Committee augment_with_opposite_pair(const ToposSystem& sys, const Committee& k, const SignVector& tope);

/// K1 ∪ K2 for disjoint committees; throws Error(Domain) on overlap.
Committee union_committees(const ToposSystem& sys, const Committee& a, const Committee& b);

/// Checks, over every nonempty tope subset of a non-acyclic system, both
/// descriptions of the committee family:
///   - committees are exactly the threshold sets on layers 3..|T|-3;
///   - K is a committee iff for each e there are f in F(B(|T|),|T|/2),
///     f > 1/2, and s <= floor(|T| / (2 num f)) with |K| = s den f and
///     |K ∩ T_e^+| = s num f.
/// Acyclic input yields a SkippedHypothesis report.
Report verify_layer_decomposition(const ToposSystem& sys, bool force = false);

/// The opposite-free analogue: layers 3..|T|/2, fractions from F_{|T|/2},
/// s <= floor(|T| / (2 den f)).
Report verify_opposite_free_decomposition(const ToposSystem& sys, bool force = false);

}  // namespace omc
