#include "omc/fraction.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "omc/error.hpp"

namespace omc {

namespace detail {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Domain, "64-bit overflow in fraction arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Domain, "64-bit overflow in fraction arithmetic");
  return r;
}

}  // namespace detail

Fraction::Fraction(Int num, Int den) {
  require(den >= 1, ErrorKind::Domain, "fraction denominator must be positive");
  require(num >= 0 && num <= den, ErrorKind::Domain,
          "fraction " + std::to_string(num) + "/" + std::to_string(den) + " is outside [0,1]");
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction reduce(Fraction::Int h, Fraction::Int k) { return Fraction(h, k); }

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Fraction::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

namespace {

Fraction::Int parse_int(std::string_view s, std::string_view whole) {
  Fraction::Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    fail(ErrorKind::Domain, "malformed fraction '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text, text), 1);
  return Fraction(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.num() << '/' << f.den(); }

}  // namespace omc
