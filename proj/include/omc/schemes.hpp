#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "omc/report.hpp"

namespace omc {

using BigCount = boost::multiprecision::cpp_int;

/// C(a, b), zero when b < 0, b > a or a < 0.
BigCount binomial(std::int64_t a, std::int64_t b);

/// Intersection number p^k_{ij} of the Johnson scheme J(n,d).
BigCount johnson_p(int n, int d, int i, int j, int k);
/// n_i = C(d,i) C(n-d,i).
BigCount johnson_valency(int n, int d, int i);

/// Number of opposite-free d-subsets of ±[1,m]: C(m,d) 2^d.
BigCount crosspolytope_whitney(int m, int d);
/// Valency of distance i on the d-th layer of the crosspolytope lattice.
BigCount crosspolytope_valency(int m, int d, int i);

/// Intersection number p^k_{ij} of H(m,2), parity closed form.
BigCount hamming_p(int m, int i, int j, int k);
/// The same quantity as a four-binomial sum over c.
BigCount hamming_p_sum(int m, int i, int j, int k);

enum class SchemeFamily { Johnson, Crosspolytope, Hamming };

/// Johnson(n,d): d-subsets of [1,n]. Crosspolytope(m,d): opposite-free
/// signed d-subsets of ±[1,m]. Hamming(m): words in {-1,1}^m.
struct SchemeKind {
  SchemeFamily family;
  int n = 0;  ///< n for Johnson, m otherwise
  int d = 0;  ///< unused for Hamming

  static SchemeKind johnson(int n, int d);
  static SchemeKind crosspolytope(int m, int d);
  static SchemeKind hamming(int m);

  /// Largest distance between two points.
  int diameter() const noexcept;
  std::string label() const;
};

/// |{z : dist(z,x) = i, dist(z,y) = j}| for the first pair (x,y) at
/// distance k, by exhaustive enumeration.
std::uint64_t scheme_oracle(const SchemeKind& kind, int k, int i, int j, bool force = false);

/// The same count for `samples` base points spread over the ground set, each
/// paired with its first partner at distance k.
std::vector<std::uint64_t> scheme_oracle_samples(const SchemeKind& kind, int k, int i, int j,
                                                 std::size_t samples = 5);

/// Every closed form against the oracles: Johnson n <= max_n, crosspolytope
/// and Hamming m <= max_m.
Report verify_schemes(int max_n, int max_m, bool force = false);

}  // namespace omc
