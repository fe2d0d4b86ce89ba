#include <algorithm>
#include <functional>
#include <string>

#include "omc/error.hpp"
#include "omc/farey.hpp"

namespace omc {

namespace {

std::string at(std::size_t i, const Fraction& f) { return "f_" + std::to_string(i) + "=" + f.str(); }

// Runs `fn`, turning a thrown Error into a failed check.
template <typename Fn>
void guarded(Report& report, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    report.check(name, false, e.what());
  }
}

std::string seq_str(const std::vector<Fraction>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < 8; ++i) s += (i ? " " : "") + v[i].str();
  if (v.size() > 8) s += " ...";
  return s;
}

void check_bijection(Report& report, int m, const std::vector<Fraction>& half, Side side,
                     Orientation orientation, const FareySeq& fm) {
  const std::string name = std::string("bijection ") + (side == Side::Left ? "left " : "right ") +
                           (orientation == Orientation::Preserving ? "preserving" : "reversing");
  guarded(report, name, [&] {
    std::vector<Fraction> image;
    for (const auto& f : half) image.push_back(map_half_to_farey(f, side, orientation));
    if (orientation == Orientation::Reversing) std::reverse(image.begin(), image.end());
    report.check(name, image == fm.entries(),
                 "m=" + std::to_string(m) + ": image of halfsequence is " + seq_str(image));

    std::vector<Fraction> back;
    for (const auto& f : fm) back.push_back(map_farey_to_half(f, side, orientation));
    if (orientation == Orientation::Reversing) std::reverse(back.begin(), back.end());
    report.check(name, back == half, "m=" + std::to_string(m) + ": image of F_m is " + seq_str(back));

    for (const auto& f : half) {
      const Fraction there = map_half_to_farey(f, side, orientation);
      const Fraction again = map_farey_to_half(there, side, orientation);
      report.check(name, again == f, "m=" + std::to_string(m) + ": " + f.str() + " -> " +
                                         there.str() + " -> " + again.str());
    }
  });
}

void check_third_involution(Report& report, int m, const std::vector<Fraction>& half, Side side) {
  const std::string name = side == Side::Right ? "third involution right" : "third involution left";
  guarded(report, name, [&] {
    std::vector<Fraction> image;
    for (const auto& f : half) {
      const Fraction g = third_symmetry_involution(f, side);
      report.check(name, third_symmetry_involution(g, side) == f,
                   "m=" + std::to_string(m) + ": not an involution at " + f.str());
      image.push_back(g);
    }
    std::reverse(image.begin(), image.end());
    report.check(name, image == half, "m=" + std::to_string(m) + ": reversed image is " + seq_str(image));
  });
}

}  // namespace

Report verify_halfsequence_symmetry(int m) {
  Report report("symmetry(m=" + std::to_string(m) + ")");
  const FareySeq seq = farey_boolean(2 * m, m);
  const auto s = seq.require_index(kHalf);
  const auto t = seq.require_index(kTwoThirds);
  const auto s1 = seq.require_index(kThird);

  const char* palindrome = "2/3 numerator palindrome";
  const char* denominators = "2/3 denominator sum";
  for (std::size_t v = 0; v <= t - s; ++v) {
    if (t + v >= seq.size()) {
      report.check(palindrome, false, "index t+v=" + std::to_string(t + v) + " past the end");
      break;
    }
    const Fraction& up = seq[t + v];
    const Fraction& down = seq[t - v];
    report.check(palindrome, up.num() == down.num(), "v=" + std::to_string(v) + ": " + at(t + v, up) +
                                                         " vs " + at(t - v, down));
    report.check(denominators, up.den() + down.den() == 3 * up.num(),
                 "v=" + std::to_string(v) + ": (" + std::to_string(up.den()) + "+" +
                     std::to_string(down.den()) + ")/" + std::to_string(up.num()) + " != 3");
  }

  const char* third = "1/3 identity";
  for (std::size_t v = 0; v <= s - s1; ++v) {
    if (v > s1) {
      report.check(third, false, "index s'-v below zero at v=" + std::to_string(v));
      break;
    }
    const Fraction& up = seq[s1 + v];
    const Fraction& down = seq[s1 - v];
    report.check(third, up.den() + down.den() == 3 * (up.num() + down.num()),
                 "v=" + std::to_string(v) + ": " + at(s1 + v, up) + ", " + at(s1 - v, down));
  }
  return report;
}

Report verify_boolean_farey(int m, int oracle_max_m) {
  const std::string ms = "m=" + std::to_string(m);
  Report report("farey(m=" + std::to_string(m) + ")");
  const int n = 2 * m;
  const FareySeq seq = farey_boolean(n, m);
  const auto& e = seq.entries();

  if (m <= oracle_max_m) {
    report.check("subset oracle", farey_boolean_oracle(n, m) == seq, ms);
  }

  for (std::size_t i = 0; i < e.size(); ++i) {
    const Fraction& f = e[i];
    const bool interior = i > 0 && i + 1 < e.size();
    if (interior) {
      guarded(report, "neighbor_general", [&] {
        const Fraction p = neighbor_general(n, m, f, Direction::Pred);
        const Fraction q = neighbor_general(n, m, f, Direction::Succ);
        report.check("neighbor_general", p == e[i - 1] && q == e[i + 1],
                     ms + ": " + f.str() + " gives " + p.str() + ", " + q.str());
      });
    }
    guarded(report, "neighbor_half", [&] {
      if (i > 0) {
        const Fraction p = neighbor_half(m, f, Direction::Pred);
        report.check("neighbor_half", p == e[i - 1], ms + ": pred of " + f.str() + " gives " + p.str());
      }
      if (i + 1 < e.size()) {
        const Fraction q = neighbor_half(m, f, Direction::Succ);
        report.check("neighbor_half", q == e[i + 1], ms + ": succ of " + f.str() + " gives " + q.str());
      }
    });
  }

  for (std::size_t i = 0; i + 2 < e.size(); ++i) {
    const Fraction &a = e[i], &b = e[i + 1], &c = e[i + 2];
    guarded(report, "triple_extend", [&] {
      const Fraction fwd = triple_extend(n, m, a, b, Extend::Forward);
      const Fraction back = triple_extend(n, m, b, c, Extend::Back);
      report.check("triple_extend", fwd == c && back == a,
                   ms + ": run " + a.str() + " " + b.str() + " " + c.str() + " gives " + back.str() +
                       " / " + fwd.str());
    });
    guarded(report, "triple_extend_half", [&] {
      if (a >= kHalf || b < kHalf) {
        const Fraction fwd = triple_extend_half(m, a, b, Extend::Forward);
        report.check("triple_extend_half", fwd == c, ms + ": forward from " + a.str() + " " + b.str());
      }
      if (b > kHalf || c <= kHalf) {
        const Fraction back = triple_extend_half(m, b, c, Extend::Back);
        report.check("triple_extend_half", back == a, ms + ": back from " + b.str() + " " + c.str());
      }
    });
  }

  {
    std::vector<Fraction> image;
    for (const auto& f : e) {
      image.push_back(reverse_involution(f));
      report.check("reverse involution", reverse_involution(image.back()) == f, ms + ": at " + f.str());
    }
    std::reverse(image.begin(), image.end());
    report.check("reverse involution", image == e, ms + ": reversed image differs");
  }

  const auto left = seq.halfsequence(false);
  const auto right = seq.halfsequence(true);
  const FareySeq fm = farey_sequence(m);
  for (Side side : {Side::Left, Side::Right})
    for (Orientation o : {Orientation::Preserving, Orientation::Reversing})
      check_bijection(report, m, side == Side::Left ? left : right, side, o, fm);

  check_third_involution(report, m, right, Side::Right);
  check_third_involution(report, m, left, Side::Left);

  guarded(report, "1/3 neighbors", [&] {
    const auto [p, q] = neighbors_of_one_third(m);
    const auto i = seq.require_index(kThird);
    report.check("1/3 neighbors", i > 0 && e[i - 1] == p && e[i + 1] == q,
                 ms + ": closed forms give " + p.str() + ", " + q.str());
  });

  report.merge(verify_halfsequence_symmetry(m));
  return report;
}

}  // namespace omc
