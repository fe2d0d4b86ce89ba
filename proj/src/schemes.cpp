#include "omc/schemes.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "omc/error.hpp"

namespace omc {

namespace {

constexpr int kJohnsonOracleMax = 12;
constexpr int kSignedOracleMax = 8;
constexpr int kJohnsonHardMax = 20;
constexpr int kCrossHardMax = 12;
constexpr int kHammingHardMax = 16;

void require_range(int v, int lo, int hi, const std::string& name) {
  require(v >= lo && v <= hi, ErrorKind::Domain,
          name + "=" + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void require_johnson(int n, int d) {
  require(n >= 2, ErrorKind::Domain, "Johnson scheme needs n >= 2, got " + std::to_string(n));
  require_range(d, 1, n / 2, "d");
}

// Ground set of a scheme as bit masks. Johnson: d-subsets of n bits.
// Crosspolytope: positive part in the low m bits, negative part in the
// next m. Hamming: bit set <=> coordinate +1.
struct Ground {
  std::vector<std::uint32_t> points;
  SchemeKind kind;

  int distance(std::uint32_t x, std::uint32_t y) const noexcept {
    if (kind.family == SchemeFamily::Hamming) return std::popcount(x ^ y);
    return kind.d - std::popcount(x & y);
  }
};

Ground build_ground(const SchemeKind& kind, bool force) {
  Ground g{{}, kind};
  switch (kind.family) {
    case SchemeFamily::Johnson: {
      require(kind.n <= kJohnsonHardMax, ErrorKind::ResourceGuard, "Johnson oracle is limited to n <= 20");
      require(force || kind.n <= kJohnsonOracleMax, ErrorKind::ResourceGuard,
              "Johnson oracle needs n <= 12; use --force");
      for (std::uint32_t x = 0; x < (1U << kind.n); ++x)
        if (std::popcount(x) == kind.d) g.points.push_back(x);
      break;
    }
    case SchemeFamily::Crosspolytope: {
      require(kind.n <= kCrossHardMax, ErrorKind::ResourceGuard, "crosspolytope oracle is limited to m <= 12");
      require(force || kind.n <= kSignedOracleMax, ErrorKind::ResourceGuard,
              "crosspolytope oracle needs m <= 8; use --force");
      const std::uint32_t full = (1U << kind.n) - 1;
      for (std::uint32_t support = 0; support <= full; ++support) {
        if (std::popcount(support) != kind.d) continue;
        // Every sign pattern on the support, as submasks of it.
        for (std::uint32_t pos = support;; pos = (pos - 1) & support) {
          g.points.push_back(pos | ((support & ~pos) << kind.n));
          if (pos == 0) break;
        }
      }
      std::sort(g.points.begin(), g.points.end());
      break;
    }
    case SchemeFamily::Hamming: {
      require(kind.n <= kHammingHardMax, ErrorKind::ResourceGuard, "Hamming oracle is limited to m <= 16");
      require(force || kind.n <= kSignedOracleMax, ErrorKind::ResourceGuard,
              "Hamming oracle needs m <= 8; use --force");
      for (std::uint32_t x = 0; x < (1U << kind.n); ++x) g.points.push_back(x);
      break;
    }
  }
  return g;
}

std::uint32_t partner_at(const Ground& g, std::uint32_t x, int k) {
  for (auto y : g.points)
    if (g.distance(x, y) == k) return y;
  fail(ErrorKind::Domain, "no pair at distance " + std::to_string(k) + " in " + g.kind.label());
}

// table[i][j] = |{z : dist(z,x) = i, dist(z,y) = j}|
std::vector<std::vector<std::uint64_t>> intersection_table(const Ground& g, std::uint32_t x, std::uint32_t y) {
  const int D = g.kind.diameter();
  std::vector<std::vector<std::uint64_t>> table(D + 1, std::vector<std::uint64_t>(D + 1, 0));
  for (auto z : g.points) ++table[g.distance(z, x)][g.distance(z, y)];
  return table;
}

std::string args(std::initializer_list<int> values) {
  std::string s = "(";
  bool first = true;
  for (int v : values) {
    s += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return s + ")";
}

std::string show(const BigCount& v) { return v.str(); }

}  // namespace

BigCount binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigCount r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

BigCount johnson_p(int n, int d, int i, int j, int k) {
  require_johnson(n, d);
  require_range(i, 0, d, "i");
  require_range(j, 0, d, "j");
  require_range(k, 0, d, "k");
  BigCount sum = 0;
  for (int c = 0; c <= d - k; ++c)
    sum += binomial(d - k, c) * binomial(k, d - i - c) * binomial(k, d - j - c) *
           binomial(n - d - k, i + j - d + c);
  return sum;
}

BigCount johnson_valency(int n, int d, int i) {
  require(n >= 0, ErrorKind::Domain, "n must be nonnegative");
  require_range(d, 0, n / 2, "d");
  require_range(i, 0, d, "i");
  return binomial(d, i) * binomial(n - d, i);
}

BigCount crosspolytope_whitney(int m, int d) {
  require(m >= 0, ErrorKind::Domain, "m must be nonnegative");
  require_range(d, 0, m, "d");
  return binomial(m, d) << d;
}

BigCount crosspolytope_valency(int m, int d, int i) {
  require(m >= 0, ErrorKind::Domain, "m must be nonnegative");
  require_range(d, 0, m, "d");
  require_range(i, 0, d, "i");
  BigCount sum = 0;
  for (int c = 0; c <= i; ++c) sum += binomial(i, c) * binomial(m - d, c) << c;
  return binomial(d, i) * sum;
}

BigCount hamming_p(int m, int i, int j, int k) {
  require(m >= 1, ErrorKind::Domain, "Hamming scheme needs m >= 1");
  require_range(i, 0, m, "i");
  require_range(j, 0, m, "j");
  require_range(k, 0, m, "k");
  if ((i + j + k) % 2 != 0) return 0;
  return binomial(m - k, (i + j - k) / 2) * binomial(k, (i - j + k) / 2);
}

BigCount hamming_p_sum(int m, int i, int j, int k) {
  require(m >= 1, ErrorKind::Domain, "Hamming scheme needs m >= 1");
  require_range(i, 0, m, "i");
  require_range(j, 0, m, "j");
  require_range(k, 0, m, "k");
  BigCount sum = 0;
  for (int c = 0; c <= m - k; ++c)
    sum += binomial(m - k, c) * binomial(k, m - i - c) * binomial(i + k - m + c, m - j - c) *
           binomial(m - k - c, i + j - m + c);
  return sum;
}

SchemeKind SchemeKind::johnson(int n, int d) {
  require_johnson(n, d);
  return {SchemeFamily::Johnson, n, d};
}

SchemeKind SchemeKind::crosspolytope(int m, int d) {
  require(m >= 1, ErrorKind::Domain, "crosspolytope needs m >= 1");
  require_range(d, 1, m, "d");
  return {SchemeFamily::Crosspolytope, m, d};
}

SchemeKind SchemeKind::hamming(int m) {
  require(m >= 1, ErrorKind::Domain, "Hamming scheme needs m >= 1");
  return {SchemeFamily::Hamming, m, m};
}

int SchemeKind::diameter() const noexcept { return family == SchemeFamily::Hamming ? n : d; }

std::string SchemeKind::label() const {
  switch (family) {
    case SchemeFamily::Johnson: return "J(" + std::to_string(n) + "," + std::to_string(d) + ")";
    case SchemeFamily::Crosspolytope: return "O(" + std::to_string(n) + ")^(" + std::to_string(d) + ")";
    case SchemeFamily::Hamming: return "H(" + std::to_string(n) + ",2)";
  }
  return "?";
}

std::uint64_t scheme_oracle(const SchemeKind& kind, int k, int i, int j, bool force) {
  const int D = kind.diameter();
  require_range(k, 0, D, "k");
  require_range(i, 0, D, "i");
  require_range(j, 0, D, "j");
  const Ground g = build_ground(kind, force);
  const std::uint32_t x = g.points.front();
  return intersection_table(g, x, partner_at(g, x, k))[i][j];
}

std::vector<std::uint64_t> scheme_oracle_samples(const SchemeKind& kind, int k, int i, int j,
                                                 std::size_t samples) {
  const int D = kind.diameter();
  require_range(k, 0, D, "k");
  require_range(i, 0, D, "i");
  require_range(j, 0, D, "j");
  require(samples >= 1, ErrorKind::Domain, "need at least one sample");
  const Ground g = build_ground(kind, false);
  std::vector<std::uint64_t> out;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::uint32_t x = g.points[s * g.points.size() / samples];
    out.push_back(intersection_table(g, x, partner_at(g, x, k))[i][j]);
  }
  return out;
}

Report verify_schemes(int max_n, int max_m, bool force) {
  Report report("schemes");
  constexpr std::size_t kSamples = 5;

  for (int n = 2; n <= max_n; ++n) {
    for (int d = 1; d <= n / 2; ++d) {
      const SchemeKind kind = SchemeKind::johnson(n, d);
      const Ground g = build_ground(kind, force);
      report.check("Johnson ground size", binomial(n, d) == g.points.size(), kind.label());
      BigCount valency_total = 0;
      for (int i = 0; i <= d; ++i) {
        const BigCount ni = johnson_valency(n, d, i);
        valency_total += ni;
        report.check("Johnson valency = p^0_ii", ni == johnson_p(n, d, i, i, 0), kind.label() + " i=" + std::to_string(i));
      }
      report.check("Johnson valencies sum to C(n,d)", valency_total == binomial(n, d), kind.label());
      for (int k = 0; k <= d; ++k) {
        const std::uint32_t x0 = g.points.front();
        const auto table = intersection_table(g, x0, partner_at(g, x0, k));
        std::vector<decltype(intersection_table(g, x0, x0))> sampled;
        for (std::size_t s = 1; s < kSamples; ++s) {
          const std::uint32_t x = g.points[s * g.points.size() / kSamples];
          sampled.push_back(intersection_table(g, x, partner_at(g, x, k)));
        }
        for (int i = 0; i <= d; ++i) {
          BigCount row = 0;
          for (int j = 0; j <= d; ++j) {
            const BigCount p = johnson_p(n, d, i, j, k);
            row += p;
            const std::string where = kind.label() + " p" + args({k, i, j}) + "=" + show(p) +
                                      " oracle=" + std::to_string(table[i][j]);
            report.check("Johnson p^k_ij = oracle", p == table[i][j], where);
            for (const auto& t : sampled)
              report.check("Johnson oracle is pair-independent", t[i][j] == table[i][j], where);
          }
          report.check("Johnson row sums", row == johnson_valency(n, d, i), kind.label() + " " + args({k, i}));
        }
      }
    }
  }

  for (int m = 1; m <= max_m; ++m) {
    for (int d = 1; d <= m; ++d) {
      const SchemeKind kind = SchemeKind::crosspolytope(m, d);
      const Ground g = build_ground(kind, force);
      std::set<std::uint32_t> distinct(g.points.begin(), g.points.end());
      report.check("crosspolytope layer size = Whitney number",
                   crosspolytope_whitney(m, d) == g.points.size() && distinct.size() == g.points.size(),
                   kind.label() + " count=" + std::to_string(g.points.size()));
      for (std::size_t s = 0; s < kSamples; ++s) {
        const std::uint32_t x = g.points[s * g.points.size() / kSamples];
        const auto table = intersection_table(g, x, x);
        for (int i = 0; i <= d; ++i) {
          const BigCount ni = crosspolytope_valency(m, d, i);
          report.check("crosspolytope valency = oracle", ni == table[i][i],
                       kind.label() + " i=" + std::to_string(i) + " formula=" + show(ni) +
                           " oracle=" + std::to_string(table[i][i]));
        }
      }
      if (d == m) {
        for (int i = 0; i <= m; ++i)
          report.check("crosspolytope valency at d=m is C(m,i)", crosspolytope_valency(m, m, i) == binomial(m, i),
                       kind.label() + " i=" + std::to_string(i));
        const std::uint32_t x0 = g.points.front();
        for (int k = 0; k <= m; ++k) {
          const auto table = intersection_table(g, x0, partner_at(g, x0, k));
          for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j)
              report.check("crosspolytope at d=m matches Hamming parameters", hamming_p(m, i, j, k) == table[i][j],
                           kind.label() + " p" + args({k, i, j}));
        }
      }
    }
  }

  for (int m = 1; m <= max_m; ++m) {
    const SchemeKind kind = SchemeKind::hamming(m);
    const Ground g = build_ground(kind, force);
    for (int k = 0; k <= m; ++k) {
      const std::uint32_t x0 = g.points.front();
      const auto table = intersection_table(g, x0, partner_at(g, x0, k));
      std::vector<decltype(intersection_table(g, x0, x0))> sampled;
      for (std::size_t s = 1; s < kSamples; ++s) {
        const std::uint32_t x = g.points[s * g.points.size() / kSamples];
        sampled.push_back(intersection_table(g, x, partner_at(g, x, k)));
      }
      for (int i = 0; i <= m; ++i) {
        BigCount row = 0;
        for (int j = 0; j <= m; ++j) {
          const BigCount p = hamming_p(m, i, j, k);
          row += p;
          const std::string where = kind.label() + " p" + args({k, i, j}) + "=" + show(p) +
                                    " oracle=" + std::to_string(table[i][j]);
          report.check("Hamming p^k_ij = oracle", p == table[i][j], where);
          report.check("Hamming parity form = four-binomial sum", p == hamming_p_sum(m, i, j, k), where);
          if ((i + j + k) % 2 != 0) report.check("Hamming odd parity vanishes", p == 0, where);
          for (const auto& t : sampled)
            report.check("Hamming oracle is pair-independent", t[i][j] == table[i][j], where);
        }
        report.check("Hamming row sums", row == binomial(m, i), kind.label() + " " + args({k, i}));
      }
    }
  }
  return report;
}

}  // namespace omc
