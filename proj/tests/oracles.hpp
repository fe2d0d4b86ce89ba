#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's formula code paths.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omc/error.hpp"

namespace omc::testing {

template <typename Fn>
ErrorKind error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected omc::Error";
  return ErrorKind::Domain;
}

/// Pascal's triangle; zero outside 0 <= b <= a.
inline std::uint64_t pascal(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= a; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

/// Sign strings of the regions of lines through the origin of R^2 with
/// normals `v`, found by probing the midpoint of each angular sector.
inline std::vector<std::string> planar_regions(const std::vector<std::pair<double, double>>& v) {
  const double pi = std::acos(-1.0);
  std::vector<double> cuts;
  for (const auto& [x, y] : v) {
    double a = std::atan2(y, x) + pi / 2;
    for (int r = 0; r < 2; ++r, a += pi) cuts.push_back(std::fmod(a + 4 * pi, 2 * pi));
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double next = i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + 2 * pi;
    const double mid = (cuts[i] + next) / 2;
    std::string s;
    for (const auto& [x, y] : v) s += x * std::cos(mid) + y * std::sin(mid) > 0 ? '+' : '-';
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using Pair = std::pair<std::int64_t, std::int64_t>;  // (h, k)

inline std::int64_t naive_gcd(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// Euler's totient by counting.
inline std::int64_t totient(std::int64_t k) {
  std::int64_t c = 0;
  for (std::int64_t h = 1; h <= k; ++h) c += naive_gcd(h, k) == 1;
  return c;
}

inline bool less(const Pair& a, const Pair& b) { return a.first * b.second < b.first * a.second; }

inline bool naive_member(int n, int m, std::int64_t h, std::int64_t k) {
  return k >= 1 && k <= n && h >= 0 && h <= k && naive_gcd(h, k) == 1 && h <= m && k - h <= n - m;
}

/// Nearest member of F(B(n),m) strictly below (pred) or above (succ) h/k,
/// by scanning every candidate numerator/denominator pair.
inline std::optional<Pair> naive_neighbor(int n, int m, const Pair& f, bool succ) {
  std::optional<Pair> best;
  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t h = 0; h <= k; ++h) {
      if (!naive_member(n, m, h, k)) continue;
      const Pair c{h, k};
      const bool beyond = succ ? less(f, c) : less(c, f);
      if (!beyond) continue;
      if (!best || (succ ? less(c, *best) : less(*best, c))) best = c;
    }
  return best;
}

/// |{ T in K : T(e) = + }| >= threshold for every e, tested the way the
/// filter formula reads: K contains some threshold-subset of the halfspace.
/// Masks index topes; halfspaces[e] is the mask of T_e^+.
inline bool contains_subset_of_size(std::uint64_t k_mask, std::uint64_t halfspace, int size) {
  // enumerate subsets of the halfspace of the given size and test inclusion
  std::vector<int> bits;
  for (int i = 0; i < 64; ++i)
    if (halfspace >> i & 1) bits.push_back(i);
  if (size <= 0) return true;
  if (size > static_cast<int>(bits.size())) return false;
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  const int total = static_cast<int>(bits.size());
  while (true) {
    std::uint64_t sub = 0;
    for (int i : idx) sub |= std::uint64_t{1} << bits[static_cast<std::size_t>(i)];
    if ((sub & k_mask) == sub) return true;
    int pos = size - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == total - size + pos) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace omc::testing
