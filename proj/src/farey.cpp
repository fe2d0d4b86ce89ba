#include "omc/farey.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <tuple>

#include "omc/error.hpp"

namespace omc {

using Int = Fraction::Int;
using detail::floor_div;

FareySeq::FareySeq(FareyKind kind, int n, int m, std::vector<Fraction> entries)
    : kind_(kind), n_(n), m_(m), entries_(std::move(entries)) {}

std::optional<std::size_t> FareySeq::index_of(const Fraction& f) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), f);
  if (it == entries_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

std::size_t FareySeq::require_index(const Fraction& f) const {
  auto i = index_of(f);
  if (!i) fail(ErrorKind::Domain, f.str() + " is not a member of " + label());
  return *i;
}

std::vector<Fraction> FareySeq::halfsequence(bool right) const {
  std::vector<Fraction> out;
  for (const auto& f : entries_)
    if (right ? f >= kHalf : f <= kHalf) out.push_back(f);
  return out;
}

std::string FareySeq::label() const {
  switch (kind_) {
    case FareyKind::Standard:
      return "F_" + std::to_string(n_);
    case FareyKind::Boolean:
      return "F(B(" + std::to_string(n_) + ")," + std::to_string(m_) + ")";
    case FareyKind::NumeratorBounded:
      return "F_" + std::to_string(n_) + "[h<=" + std::to_string(m_) + "]";
  }
  return {};
}

namespace {

void require_order(int n) {
  require(n >= 1, ErrorKind::Domain, "Farey order n must be >= 1");
  // k*x products stay far inside 64 bits well beyond this.
  require(n <= 2'000'000, ErrorKind::Domain, "Farey order n too large");
}

void require_bound(int n, int m) {
  require_order(n);
  require(m >= 0 && m <= n, ErrorKind::Domain,
          "m must satisfy 0 <= m <= n (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

template <typename Keep>
std::vector<Fraction> filtered_farey(int n, Keep keep) {
  std::vector<Fraction> out;
  for (Int k = 1; k <= n; ++k)
    for (Int h = 0; h <= k; ++h)
      if (std::gcd(h, k) == 1 && keep(h, k)) out.emplace_back(h, k);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_boolean(int n, int m, Int h, Int k) { return k <= n && h <= m && k - h <= n - m; }

bool in_boolean(int n, int m, const Fraction& f) { return in_boolean(n, m, f.num(), f.den()); }

std::string boolean_label(int n, int m) {
  return "F(B(" + std::to_string(n) + ")," + std::to_string(m) + ")";
}

void require_member(int n, int m, const Fraction& f) {
  require(in_boolean(n, m, f), ErrorKind::Domain, f.str() + " is not a member of " + boolean_label(n, m));
}

// True iff no member of F(B(n),m) lies strictly between a < b. For each
// denominator k the admissible numerators form the interval
// (a*k, b*k) ∩ [k-(n-m), m]; it suffices to test that this is empty.
bool adjacent_in_boolean(int n, int m, const Fraction& a, const Fraction& b) {
  if (!(a < b)) return false;
  for (Int k = 1; k <= n; ++k) {
    const Int lo_open = floor_div(a.num() * k, a.den());            // h > a*k
    const Int hi_open = -floor_div(-(b.num() * k), b.den());        // h < b*k  (ceil)
    const Int lo = std::max(lo_open + 1, k - (n - m));
    const Int hi = std::min(hi_open - 1, static_cast<Int>(m));
    if (lo <= hi) return false;
  }
  return true;
}

void require_adjacent(int n, int m, const Fraction& a, const Fraction& b) {
  require_member(n, m, a);
  require_member(n, m, b);
  require(adjacent_in_boolean(n, m, a, b), ErrorKind::Domain,
          a.str() + " and " + b.str() + " are not successive in " + boolean_label(n, m));
}

// Unique x in [lo, lo + modulus - 1] with a*x = r (mod modulus), gcd(a, modulus) = 1.
Int solve_in_window(Int a, Int r, Int modulus, Int lo) {
  if (modulus == 1) return lo;
  // extended Euclid for a^{-1} mod modulus
  Int old_r = detail::mod(a, modulus), cur_r = modulus;
  Int old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const Int q = old_r / cur_r;
    std::tie(old_r, cur_r) = std::pair{cur_r, old_r - q * cur_r};
    std::tie(old_s, cur_s) = std::pair{cur_s, old_s - q * cur_s};
  }
  const Int inv = detail::mod(old_s, modulus);
  const Int x = static_cast<Int>(
      (static_cast<__int128>(detail::mod(r, modulus)) * inv) % modulus);
  // shift the residue into the window
  return lo + detail::mod(x - lo, modulus);
}

Int exact_div(Int a, Int b) {
  if (a % b != 0) fail(ErrorKind::Domain, "internal: inexact division in neighbor formula");
  return a / b;
}

void require_half_bound(int m) {
  require(m > 1, ErrorKind::Domain, "m must be > 1");
  require_order(2 * m);
}

}  // namespace

FareySeq farey_sequence(int n) {
  require_order(n);
  return FareySeq(FareyKind::Standard, n, n, filtered_farey(n, [](Int, Int) { return true; }));
}

FareySeq farey_boolean(int n, int m) {
  require_bound(n, m);
  return FareySeq(FareyKind::Boolean, n, m,
                  filtered_farey(n, [&](Int h, Int k) { return in_boolean(n, m, h, k); }));
}

FareySeq farey_boolean_oracle(int n, int m, bool force) {
  require_bound(n, m);
  require(n <= 20 || force, ErrorKind::ResourceGuard,
          "subset oracle enumerates 2^" + std::to_string(n) + " subsets; n > 20 needs --force");
  require(n <= 40, ErrorKind::ResourceGuard, "subset oracle is limited to n <= 40");
  // C = {0..n-1}, A = {0..m-1}; record which (|B ∩ A|, |B|) pairs occur.
  const std::uint64_t a_mask = (m == 0) ? 0 : ((std::uint64_t{1} << m) - 1);
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<char> seen(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  for (std::uint64_t b = 1; b < full; ++b) {
    seen[static_cast<std::size_t>(std::popcount(b & a_mask) * (n + 1) + std::popcount(b))] = 1;
  }
  std::vector<Fraction> out;
  for (int inter = 0; inter <= n; ++inter)
    for (int size = 1; size <= n; ++size)
      if (seen[static_cast<std::size_t>(inter * (n + 1) + size)]) out.push_back(reduce(inter, size));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return FareySeq(FareyKind::Boolean, n, m, std::move(out));
}

FareySeq farey_numerator_bounded(int n, int m) {
  require_bound(n, m);
  return FareySeq(FareyKind::NumeratorBounded, n, m,
                  filtered_farey(n, [&](Int h, Int) { return h <= m; }));
}

Fraction neighbor_general(int n, int m, const Fraction& f, Direction dir) {
  require_order(n);
  require(0 < m && m < n, ErrorKind::Domain, "neighbor formula needs 0 < m < n");
  require_member(n, m, f);
  require(f != kZero && f != kOne, ErrorKind::Domain,
          "neighbor formula applies to interior members only, got " + f.str());
  const Int h = f.num(), k = f.den();
  const Int sign = (dir == Direction::Pred) ? -1 : 1;  // k*x0 = sign (mod h)
  const Int x0 = solve_in_window(k, sign, h, m - h + 1);
  const Int y0 = exact_div(k * x0 - sign, h);
  const Int t = std::min({floor_div(m - x0, h), floor_div(n - y0, k),
                          floor_div(n - m + x0 - y0, k - h)});
  return Fraction(x0 + t * h, y0 + t * k);
}

Fraction triple_extend(int n, int m, const Fraction& a, const Fraction& b, Extend dir) {
  require_order(n);
  require(0 < m && m < n, ErrorKind::Domain, "recurrence needs 0 < m < n");
  require_adjacent(n, m, a, b);
  if (dir == Extend::Forward) {
    require(b != kOne, ErrorKind::Domain, "1/1 has no successor");
    const Int q = std::min({floor_div(a.num() + m, b.num()), floor_div(a.den() + n, b.den()),
                            floor_div(a.den() - a.num() + n - m, b.den() - b.num())});
    return Fraction(q * b.num() - a.num(), q * b.den() - a.den());
  }
  require(a != kZero, ErrorKind::Domain, "0/1 has no predecessor");
  const Int q = std::min({floor_div(b.num() + m, a.num()), floor_div(b.den() + n, a.den()),
                          floor_div(b.den() - b.num() + n - m, a.den() - a.num())});
  return Fraction(q * a.num() - b.num(), q * a.den() - b.den());
}

Fraction neighbor_half(int m, const Fraction& f, Direction dir, Side side) {
  require_half_bound(m);
  require_member(2 * m, m, f);
  const bool pred = dir == Direction::Pred;
  require(!(pred && f == kZero), ErrorKind::Domain, "0/1 has no predecessor");
  require(!(!pred && f == kOne), ErrorKind::Domain, "1/1 has no successor");
  const Int h = f.num(), k = f.den();

  if (side == Side::Right) {
    const bool ok = pred ? f > kHalf : f >= kHalf;
    require(ok, ErrorKind::Hypothesis,
            f.str() + (pred ? " must exceed 1/2" : " must be at least 1/2") + " for the right-half formula");
    const Int sign = pred ? -1 : 1;  // k*x0 = sign (mod h)
    const Int x0 = solve_in_window(k, sign, h, m - h + 1);
    return Fraction(x0, exact_div(k * x0 - sign, h));
  }

  const bool ok = pred ? f <= kHalf : f < kHalf;
  require(ok, ErrorKind::Hypothesis,
          f.str() + (pred ? " must be at most 1/2" : " must be below 1/2") + " for the left-half formula");
  const Int d = k - h;
  const Int sign = pred ? 1 : -1;  // h*x0 = sign (mod k-h)
  const Int x0 = solve_in_window(h, sign, d, m - d + 1);
  return Fraction(exact_div(h * x0 - sign, d), exact_div(k * x0 - sign, d));
}

Fraction neighbor_half(int m, const Fraction& f, Direction dir) {
  const bool right = (dir == Direction::Pred) ? f > kHalf : f >= kHalf;
  return neighbor_half(m, f, dir, right ? Side::Right : Side::Left);
}

Fraction triple_extend_half(int m, const Fraction& a, const Fraction& b, Extend dir, Side side) {
  require_half_bound(m);
  require_adjacent(2 * m, m, a, b);
  const bool forward = dir == Extend::Forward;
  require(!(forward && b == kOne), ErrorKind::Domain, "1/1 has no successor");
  require(!(!forward && a == kZero), ErrorKind::Domain, "0/1 has no predecessor");

  if (side == Side::Right) {
    // needs f_j >= 1/2; going back f_j precedes a, so a > 1/2 is equivalent
    const bool ok = forward ? a >= kHalf : a > kHalf;
    require(ok, ErrorKind::Hypothesis, "right-half recurrence needs the first fraction of the run >= 1/2");
    if (forward) {
      const Int q = floor_div(a.num() + m, b.num());
      return Fraction(q * b.num() - a.num(), q * b.den() - a.den());
    }
    const Int q = floor_div(b.num() + m, a.num());
    return Fraction(q * a.num() - b.num(), q * a.den() - b.den());
  }

  // needs f_{j+2} <= 1/2; going forward f_{j+2} follows b, so b < 1/2 is equivalent
  const bool ok = forward ? b < kHalf : b <= kHalf;
  require(ok, ErrorKind::Hypothesis, "left-half recurrence needs the last fraction of the run <= 1/2");
  if (forward) {
    const Int q = floor_div(a.den() - a.num() + m, b.den() - b.num());
    return Fraction(q * b.num() - a.num(), q * b.den() - a.den());
  }
  const Int q = floor_div(b.den() - b.num() + m, a.den() - a.num());
  return Fraction(q * a.num() - b.num(), q * a.den() - b.den());
}

Fraction triple_extend_half(int m, const Fraction& a, const Fraction& b, Extend dir) {
  if (dir == Extend::Forward) {
    if (a >= kHalf) return triple_extend_half(m, a, b, dir, Side::Right);
    if (b < kHalf) return triple_extend_half(m, a, b, dir, Side::Left);
  } else {
    if (a > kHalf) return triple_extend_half(m, a, b, dir, Side::Right);
    if (b <= kHalf) return triple_extend_half(m, a, b, dir, Side::Left);
  }
  fail(ErrorKind::Hypothesis, "the run " + a.str() + ", " + b.str() +
                                  " straddles 1/2; neither halfsequence recurrence applies");
}

Fraction reverse_involution(const Fraction& f) { return Fraction(f.den() - f.num(), f.den()); }

Fraction map_half_to_farey(const Fraction& f, Side side, Orientation orientation) {
  const Int h = f.num(), k = f.den();
  if (side == Side::Left) {
    require(f <= kHalf, ErrorKind::Domain, f.str() + " is not in the left halfsequence");
    return orientation == Orientation::Preserving ? Fraction(h, k - h) : Fraction(k - 2 * h, k - h);
  }
  require(f >= kHalf, ErrorKind::Domain, f.str() + " is not in the right halfsequence");
  return orientation == Orientation::Preserving ? Fraction(2 * h - k, h) : Fraction(k - h, h);
}

Fraction map_farey_to_half(const Fraction& f, Side side, Orientation orientation) {
  const Int h = f.num(), k = f.den();
  if (side == Side::Left)
    return orientation == Orientation::Preserving ? Fraction(h, k + h) : Fraction(k - h, 2 * k - h);
  return orientation == Orientation::Preserving ? Fraction(k, 2 * k - h) : Fraction(k, k + h);
}

Fraction third_symmetry_involution(const Fraction& f, Side side) {
  const Int h = f.num(), k = f.den();
  if (side == Side::Right) {
    require(f >= kHalf, ErrorKind::Domain, f.str() + " is not in the right halfsequence");
    return Fraction(h, 3 * h - k);
  }
  require(f <= kHalf, ErrorKind::Domain, f.str() + " is not in the left halfsequence");
  return Fraction(k - 2 * h, 2 * k - 3 * h);
}

std::pair<Fraction, Fraction> neighbors_of_one_third(int m) {
  require_half_bound(m);
  const Int mm = m;
  if (mm % 2 == 0) return {Fraction((mm - 2) / 2, (3 * mm - 4) / 2), Fraction(mm / 2, (3 * mm - 2) / 2)};
  return {Fraction((mm - 1) / 2, (3 * mm - 1) / 2), Fraction((mm + 1) / 2, (3 * mm + 1) / 2)};
}

}  // namespace omc
