#include "omc/arrangement.hpp"

#include <optional>
#include <set>
#include <sstream>

#include "omc/error.hpp"

namespace omc {

namespace {

using Row = std::vector<BigInt>;

BigInt gcd_abs(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

// Scales a rational row by a positive factor to a primitive integer row.
Row primitive(const RationalVector& row) {
  BigInt lcm = 1;
  for (const auto& q : row) {
    const BigInt d = boost::multiprecision::denominator(q);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  Row out;
  out.reserve(row.size());
  BigInt g = 0;
  for (const auto& q : row) {
    out.push_back(boost::multiprecision::numerator(q) * (lcm / boost::multiprecision::denominator(q)));
    g = gcd_abs(g, out.back());
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

void normalize(Row& row) {
  BigInt g = 0;
  for (const auto& v : row) g = gcd_abs(g, v);
  if (g > 1)
    for (auto& v : row) v /= g;
}

bool is_zero(const Row& row) {
  for (const auto& v : row)
    if (v != 0) return false;
  return true;
}

Rational parse_component(const std::string& token, std::size_t line_no) {
  const auto fail_here = [&] {
    fail(ErrorKind::Invariant, "line " + std::to_string(line_no) + ": malformed component '" + token + "'");
  };
  const auto parse_int = [&](const std::string& s) -> BigInt {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) fail_here();
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') fail_here();
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = token.find('/');
  if (slash == std::string::npos) return Rational(parse_int(token));
  const BigInt den = parse_int(token.substr(slash + 1));
  if (den == 0) fail(ErrorKind::Invariant, "line " + std::to_string(line_no) + ": zero denominator");
  return Rational(parse_int(token.substr(0, slash)), den);
}

}  // namespace

Arrangement Arrangement::make(std::vector<RationalVector> vectors) {
  require(!vectors.empty(), ErrorKind::Invariant, "arrangement has no vectors");
  const std::size_t dim = vectors.front().size();
  require(dim >= 1, ErrorKind::Invariant, "arrangement vectors must have dimension >= 1");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require(vectors[i].size() == dim, ErrorKind::Invariant,
            "vector " + std::to_string(i + 1) + " has dimension " + std::to_string(vectors[i].size()) +
                ", expected " + std::to_string(dim));
    bool zero = true;
    for (const auto& c : vectors[i]) zero = zero && c == 0;
    require(!zero, ErrorKind::Invariant, "vector " + std::to_string(i + 1) + " is zero");
  }
  // Pairwise independence: some 2x2 minor is nonzero.
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      bool independent = false;
      for (std::size_t a = 0; a < dim && !independent; ++a)
        for (std::size_t b = a + 1; b < dim && !independent; ++b)
          independent = vectors[i][a] * vectors[j][b] != vectors[i][b] * vectors[j][a];
      require(independent, ErrorKind::Invariant,
              "vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are linearly dependent");
    }
  return Arrangement(dim, std::move(vectors));
}

Arrangement parse_arrangement(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared_dim;
  bool seen_vector = false;
  std::vector<RationalVector> vectors;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) parts.push_back(tok);
    if (parts.empty()) continue;
    if (parts[0] == "dim") {
      require(!seen_vector && !declared_dim && parts.size() == 2, ErrorKind::Invariant,
              "line " + std::to_string(line_no) + ": 'dim n' must be a single leading header");
      const Rational d = parse_component(parts[1], line_no);
      require(d >= 1 && denominator(d) == 1, ErrorKind::Invariant,
              "line " + std::to_string(line_no) + ": dimension must be a positive integer");
      declared_dim = static_cast<std::size_t>(numerator(d));
      continue;
    }
    seen_vector = true;
    RationalVector v;
    for (const auto& p : parts) v.push_back(parse_component(p, line_no));
    if (declared_dim)
      require(v.size() == *declared_dim, ErrorKind::Invariant,
              "line " + std::to_string(line_no) + ": expected " + std::to_string(*declared_dim) +
                  " components, got " + std::to_string(v.size()));
    vectors.push_back(std::move(v));
  }
  return Arrangement::make(std::move(vectors));
}

bool strict_system_feasible(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return true;
  const std::size_t dim = rows.front().size();
  std::set<Row> current;
  for (const auto& r : rows) {
    Row p = primitive(r);
    if (is_zero(p)) return false;  // 0 > 0
    current.insert(std::move(p));
  }

  for (std::size_t var = 0; var < dim; ++var) {
    std::vector<const Row*> pos, neg;
    std::set<Row> next;
    for (const auto& r : current) {
      if (r[var] > 0) pos.push_back(&r);
      else if (r[var] < 0) neg.push_back(&r);
      else next.insert(r);
    }
    // x_var is unbounded on the side without constraints.
    for (const Row* p : pos)
      for (const Row* q : neg) {
        Row combo(dim);
        const BigInt a = (*p)[var];
        const BigInt b = -(*q)[var];
        for (std::size_t c = 0; c < dim; ++c) combo[c] = b * (*p)[c] + a * (*q)[c];
        if (is_zero(combo)) return false;
        normalize(combo);
        next.insert(std::move(combo));
      }
    current = std::move(next);
    if (current.empty()) return true;
  }
  return current.empty();
}

ToposSystem from_central_arrangement(const Arrangement& arr, bool force) {
  const std::size_t t = arr.size();
  require(t <= SignVector::kMaxLength, ErrorKind::ResourceGuard, "at most 64 hyperplanes are supported");
  require(t <= 16 || force, ErrorKind::ResourceGuard,
          "region enumeration tests 2^" + std::to_string(t) + " sign vectors; t > 16 needs --force");
  require(t <= 24, ErrorKind::ResourceGuard, "region enumeration is limited to t <= 24");
  std::vector<SignVector> topes;
  const std::uint64_t total = std::uint64_t{1} << t;
  std::vector<RationalVector> rows(t);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < t; ++i) {
      rows[i] = arr.vectors()[i];
      if (!(mask >> i & 1U))
        for (auto& c : rows[i]) c = -c;
    }
    if (strict_system_feasible(rows)) topes.emplace_back(t, mask);
  }
  return ToposSystem::make(t, std::move(topes));
}

}  // namespace omc
