#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace omc {

/// A reduced fraction h/k with 0 <= h <= k, k >= 1.
///
/// Every value in the Farey machinery lives in [0,1], so the type refuses
/// anything outside it. Comparison is exact (128-bit cross products).
class Fraction {
 public:
  using Int = std::int64_t;

  /// 0/1
  constexpr Fraction() = default;

  /// Reduces h/k by gcd. Throws Error(Domain) on k == 0, h < 0 or h > k.
  Fraction(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a,
                                          const Fraction& b) noexcept;

  /// "h/k"
  std::string str() const;

  /// Parses "h/k" (or a bare integer 0 or 1). Throws Error(Domain).
  static Fraction parse(std::string_view text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

/// gcd reduction of h/k; same contract as the constructor.
Fraction reduce(Fraction::Int h, Fraction::Int k);

std::ostream& operator<<(std::ostream& os, const Fraction& f);

inline const Fraction kZero{0, 1};
inline const Fraction kOne{1, 1};
inline const Fraction kHalf{1, 2};
inline const Fraction kThird{1, 3};
inline const Fraction kTwoThirds{2, 3};

namespace detail {

/// a * b with overflow check; throws Error(Domain) on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Mathematical floor of a / b for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Nonnegative residue of a mod m, m >= 1.
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail
}  // namespace omc
