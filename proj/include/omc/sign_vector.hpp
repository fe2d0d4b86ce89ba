#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace omc {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

/// A full sign vector in {-,+}^t, t <= 64, stored as a mask of the '+'
/// positions. Position 0 is the first ground-set element.
class SignVector {
 public:
  static constexpr std::size_t kMaxLength = 64;

  SignVector() = default;
  SignVector(std::size_t length, std::uint64_t plus_mask);

  static SignVector all_plus(std::size_t length);

  /// Parses a string over '+' and '-'. Throws Error(Invariant).
  static SignVector parse(std::string_view text);

  std::size_t size() const noexcept { return length_; }
  std::uint64_t plus_mask() const noexcept { return plus_; }
  Sign operator[](std::size_t i) const noexcept {
    return (plus_ >> i & 1U) ? Sign::Plus : Sign::Minus;
  }
  bool is_plus(std::size_t i) const noexcept { return (plus_ >> i & 1U) != 0; }

  std::string str() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

  /// Lexicographic with + < -, which is also the byte order of str().
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept;

 private:
  std::uint64_t plus_ = 0;
  std::size_t length_ = 0;
};

/// Componentwise negation.
SignVector opposite(const SignVector& v);

std::ostream& operator<<(std::ostream& os, const SignVector& v);

}  // namespace omc
