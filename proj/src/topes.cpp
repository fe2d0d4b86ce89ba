#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

#include "omc/error.hpp"
#include "omc/sign_vector.hpp"
#include "omc/topes.hpp"

namespace omc {

SignVector::SignVector(std::size_t length, std::uint64_t plus_mask) : plus_(plus_mask), length_(length) {
  require(length >= 1 && length <= kMaxLength, ErrorKind::Invariant,
          "sign vector length must be in [1, 64], got " + std::to_string(length));
  if (length < 64) plus_ &= (std::uint64_t{1} << length) - 1;
}

SignVector SignVector::all_plus(std::size_t length) { return SignVector(length, ~std::uint64_t{0}); }

SignVector SignVector::parse(std::string_view text) {
  require(!text.empty() && text.size() <= kMaxLength, ErrorKind::Invariant,
          "sign vector must have 1..64 entries");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      mask |= std::uint64_t{1} << i;
    } else if (text[i] != '-') {
      fail(ErrorKind::Invariant, "invalid sign character '" + std::string(1, text[i]) + "' in '" +
                                     std::string(text) + "'");
    }
  }
  return SignVector(text.size(), mask);
}

std::string SignVector::str() const {
  std::string s(length_, '-');
  for (std::size_t i = 0; i < length_; ++i)
    if (is_plus(i)) s[i] = '+';
  return s;
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept {
  if (a.length_ != b.length_) return a.length_ <=> b.length_;
  const std::uint64_t diff = a.plus_ ^ b.plus_;
  if (diff == 0) return std::strong_ordering::equal;
  const int first = std::countr_zero(diff);
  return a.is_plus(static_cast<std::size_t>(first)) ? std::strong_ordering::less
                                                    : std::strong_ordering::greater;
}

SignVector opposite(const SignVector& v) { return SignVector(v.size(), ~v.plus_mask()); }

std::ostream& operator<<(std::ostream& os, const SignVector& v) { return os << v.str(); }

ToposSystem ToposSystem::make(std::size_t ground_size, std::vector<SignVector> topes) {
  require(ground_size >= 1 && ground_size <= SignVector::kMaxLength, ErrorKind::Invariant,
          "ground set size must be in [1, 64]");
  require(!topes.empty(), ErrorKind::Invariant, "tope set is empty");
  for (const auto& v : topes)
    require(v.size() == ground_size, ErrorKind::Invariant,
            "tope " + v.str() + " has length " + std::to_string(v.size()) + ", expected " +
                std::to_string(ground_size));

  std::sort(topes.begin(), topes.end());
  for (std::size_t i = 1; i < topes.size(); ++i)
    require(topes[i] != topes[i - 1], ErrorKind::Invariant, "duplicate tope " + topes[i].str());

  for (const auto& v : topes)
    require(std::binary_search(topes.begin(), topes.end(), opposite(v)), ErrorKind::Invariant,
            "not negation-closed: " + v.str() + " present but " + opposite(v).str() + " missing");

  // Column e as a bit string over the topes; equal columns are parallel,
  // complementary ones antiparallel.
  const std::size_t count = topes.size();
  std::vector<std::vector<bool>> columns(ground_size, std::vector<bool>(count));
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t e = 0; e < ground_size; ++e) columns[e][j] = topes[j].is_plus(e);
  for (std::size_t e = 0; e < ground_size; ++e) {
    for (std::size_t f = e + 1; f < ground_size; ++f) {
      bool equal = true, complement = true;
      for (std::size_t j = 0; j < count && (equal || complement); ++j) {
        equal = equal && columns[e][j] == columns[f][j];
        complement = complement && columns[e][j] != columns[f][j];
      }
      require(!equal, ErrorKind::Invariant,
              "columns " + std::to_string(e + 1) + " and " + std::to_string(f + 1) + " are parallel");
      require(!complement, ErrorKind::Invariant,
              "columns " + std::to_string(e + 1) + " and " + std::to_string(f + 1) + " are antiparallel");
    }
    const auto plus = static_cast<std::size_t>(std::count(columns[e].begin(), columns[e].end(), true));
    require(2 * plus == count, ErrorKind::Invariant,
            "positive halfspace of element " + std::to_string(e + 1) + " has " + std::to_string(plus) +
                " of " + std::to_string(count) + " topes");
  }
  return ToposSystem(ground_size, std::move(topes));
}

std::optional<std::size_t> ToposSystem::index_of(const SignVector& v) const {
  auto it = std::lower_bound(topes_.begin(), topes_.end(), v);
  if (it == topes_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - topes_.begin());
}

ToposSystem parse_topes(std::string_view text) {
  std::vector<SignVector> topes;
  std::size_t width = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string body = line.substr(first, last - first + 1);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    try {
      topes.push_back(SignVector::parse(body));
    } catch (const Error& e) {
      fail(ErrorKind::Invariant, where + e.what());
    }
    if (width == 0) width = body.size();
    require(body.size() == width, ErrorKind::Invariant,
            where + "ragged line, expected " + std::to_string(width) + " signs, got " +
                std::to_string(body.size()));
  }
  require(!topes.empty(), ErrorKind::Invariant, "no topes in input");
  return ToposSystem::make(width, std::move(topes));
}

std::string serialize_topes(const ToposSystem& sys) {
  std::string out;
  for (const auto& v : sys.topes()) out += v.str() + "\n";
  return out;
}

std::vector<SignVector> positive_halfspace(const ToposSystem& sys, std::size_t e) {
  require(e >= 1 && e <= sys.ground_size(), ErrorKind::Domain,
          "element " + std::to_string(e) + " outside [1, " + std::to_string(sys.ground_size()) + "]");
  std::vector<SignVector> out;
  for (const auto& v : sys.topes())
    if (v.is_plus(e - 1)) out.push_back(v);
  return out;
}

bool is_acyclic(const ToposSystem& sys) { return sys.contains(SignVector::all_plus(sys.ground_size())); }

Vote classify_vote(std::span<const Sign> signs) {
  require(!signs.empty(), ErrorKind::Domain, "vote needs at least one sign");
  const auto plus = static_cast<std::size_t>(std::count(signs.begin(), signs.end(), Sign::Plus));
  if (2 * plus < signs.size()) return Vote::ClassA;
  if (2 * plus > signs.size()) return Vote::ClassB;
  return Vote::Tie;
}

std::string to_string(Vote v) {
  switch (v) {
    case Vote::ClassA: return "A";
    case Vote::ClassB: return "B";
    case Vote::Tie: return "tie";
  }
  return "?";
}

}  // namespace omc
