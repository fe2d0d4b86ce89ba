#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omc/fraction.hpp"
#include "omc/report.hpp"

namespace omc {

enum class FareyKind {
  Standard,          ///< F_n
  Boolean,           ///< F(B(n),m) = { h/k in F_n : h <= m, k-h <= n-m }
  NumeratorBounded,  ///< { h/k in F_n : h <= m }
};

/// A materialized, strictly ascending Farey (sub)sequence.
class FareySeq {
 public:
  FareySeq(FareyKind kind, int n, int m, std::vector<Fraction> entries);

  FareyKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  /// Numerator bound; equals n for Standard.
  int m() const noexcept { return m_; }

  const std::vector<Fraction>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Fraction& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// Binary search.
  std::optional<std::size_t> index_of(const Fraction& f) const;
  bool contains(const Fraction& f) const { return index_of(f).has_value(); }

  /// Index of `f`; throws Error(Domain) naming the sequence if absent.
  std::size_t require_index(const Fraction& f) const;

  /// Entries f with f <= 1/2 (Left) or f >= 1/2 (Right).
  std::vector<Fraction> halfsequence(bool right) const;

  /// "F_5", "F(B(8),4)", "F_5[h<=2]"
  std::string label() const;

  friend bool operator==(const FareySeq& a, const FareySeq& b) { return a.entries_ == b.entries_; }

 private:
  FareyKind kind_;
  int n_;
  int m_;
  std::vector<Fraction> entries_;
};

/// Standard Farey sequence of order n >= 1.
FareySeq farey_sequence(int n);

/// F(B(n),m), 0 <= m <= n.
FareySeq farey_boolean(int n, int m);

/// F(B(n),m) built from its set-theoretic definition: the ratios
/// |B ∩ A| / |B| over all nonempty subsets B of an n-set, |A| = m.
/// Enumerates 2^n subsets; n > 20 is refused unless `force`.
FareySeq farey_boolean_oracle(int n, int m, bool force = false);

/// { h/k in F_n : h <= m }
FareySeq farey_numerator_bounded(int n, int m);

enum class Direction { Pred, Succ };
enum class Extend { Back, Forward };
enum class Side { Left, Right };
enum class Orientation { Preserving, Reversing };

/// Neighbor of an interior member f of F(B(n),m), 0 < m < n, from the
/// modular construction: x0 solves k*x0 = -+1 (mod h) in [m-h+1, m],
/// y0 = (k*x0 +- 1)/h, and the result is (x0 + t h)/(y0 + t k) with
///   t = floor(min{(m-x0)/h, (n-y0)/k, (n-m+x0-y0)/(k-h)}).
Fraction neighbor_general(int n, int m, const Fraction& f, Direction dir);

/// Third fraction of a run of three successive members of F(B(n),m).
/// Forward: (a, b) = (f_j, f_{j+1}) -> f_{j+2}.  Back: (a, b) = (f_{j+1}, f_{j+2}) -> f_j.
Fraction triple_extend(int n, int m, const Fraction& a, const Fraction& b, Extend dir);

/// Neighbor in F(B(2m),m) from the closed forms that hold inside one
/// halfsequence. The side is chosen from f's position relative to 1/2.
Fraction neighbor_half(int m, const Fraction& f, Direction dir);

/// As above with an explicit side; throws Error(Hypothesis) if f lies on the
/// wrong side of 1/2 for that formula.
Fraction neighbor_half(int m, const Fraction& f, Direction dir, Side side);

/// Single-floor recurrences of F(B(2m),m). The right-half form needs
/// f_j >= 1/2, the left-half form needs f_{j+2} <= 1/2.
Fraction triple_extend_half(int m, const Fraction& a, const Fraction& b, Extend dir);
Fraction triple_extend_half(int m, const Fraction& a, const Fraction& b, Extend dir, Side side);

/// h/k -> (k-h)/k
Fraction reverse_involution(const Fraction& f);

/// The eight bijections between the halfsequences of F(B(2m),m) and F_m.
///
///   side   orientation  half -> F_m          F_m -> half
///   left   preserving   h/(k-h)              h/(k+h)
///   right  preserving   (2h-k)/h             k/(2k-h)
///   left   reversing    (k-2h)/(k-h)         (k-h)/(2k-h)
///   right  reversing    (k-h)/h              k/(k+h)
///
/// The half -> F_m maps reject inputs on the wrong side of 1/2.
Fraction map_half_to_farey(const Fraction& f, Side side, Orientation orientation);
Fraction map_farey_to_half(const Fraction& f, Side side, Orientation orientation);

/// Order-reversing involutions of the halfsequences:
/// right h/k -> h/(3h-k), left h/k -> (k-2h)/(2k-3h).
Fraction third_symmetry_involution(const Fraction& f, Side side);

/// (pred, succ) of 1/3 in F(B(2m),m), m > 1, from the parity closed forms.
std::pair<Fraction, Fraction> neighbors_of_one_third(int m);

/// Symmetry identities of F(B(2m),m), m > 1, with s, t the indices of 1/2
/// and 2/3:
///   num(f_{t+v}) = num(f_{t-v}),  den(f_{t+v}) + den(f_{t-v}) = 3 num(f_{t+v})
/// for 0 <= v <= t-s, and around s' = index of 1/3:
///   den(f_{s'+v}) + den(f_{s'-v}) = 3 (num(f_{s'+v}) + num(f_{s'-v}))
/// for 0 <= v <= s - s'.
Report verify_halfsequence_symmetry(int m);

/// Everything above checked against the materialized F(B(2m),m): neighbor
/// formulas, recurrences, the bijections, both involutions, the 1/3
/// neighbors and the symmetry identities. Adds the subset oracle when
/// m <= oracle_max_m.
Report verify_boolean_farey(int m, int oracle_max_m = 10);

}  // namespace omc
