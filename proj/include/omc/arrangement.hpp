#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "omc/topes.hpp"

namespace omc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

/// Normal vectors e_1..e_t of a central hyperplane arrangement in Q^n.
class Arrangement {
 public:
  /// Throws Error(Invariant) on a zero vector, ragged dimensions, or a
  /// pair of linearly dependent vectors.
  static Arrangement make(std::vector<RationalVector> vectors);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<RationalVector>& vectors() const noexcept { return vectors_; }

 private:
  Arrangement(std::size_t dim, std::vector<RationalVector> v) : dim_(dim), vectors_(std::move(v)) {}

  std::size_t dim_ = 0;
  std::vector<RationalVector> vectors_;
};

/// Arrangement file: one vector per line, components are integers or p/q,
/// optional "dim n" header, '#' comments. Throws Error(Invariant).
Arrangement parse_arrangement(std::string_view text);

/// Decides exactly whether { x : <row_i, x> > 0 for all i } is nonempty,
/// by Fourier-Motzkin elimination over primitive integer rows.
bool strict_system_feasible(const std::vector<RationalVector>& rows);

/// All sign vectors s with { s_i <e_i, x> > 0 } feasible. Enumerates 2^t
/// candidates; t > 16 needs `force`.
ToposSystem from_central_arrangement(const Arrangement& arr, bool force = false);

}  // namespace omc
