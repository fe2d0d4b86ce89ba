#include <bit>
#include <string>
#include <vector>

#include "omc/committees.hpp"
#include "omc/error.hpp"
#include "omc/farey.hpp"

namespace omc {

namespace {

struct Band {
  Fraction f;
  Fraction::Int max_s;
};

// Membership in the fraction-indexed decomposition for a single element:
// some band (f, s) with |K| = s * den f and count = s * num f.
bool in_bands(const std::vector<Band>& bands, Fraction::Int size, Fraction::Int count) {
  for (const auto& b : bands)
    for (Fraction::Int s = 1; s <= b.max_s; ++s)
      if (size == s * b.f.den() && count == s * b.f.num()) return true;
  return false;
}

std::string describe(const ToposSystem& sys, TopeMask mask) {
  std::string s = "{";
  bool first = true;
  for (TopeMask rest = mask; rest != 0; rest &= rest - 1) {
    s += (first ? "" : ",") + sys.topes()[static_cast<std::size_t>(std::countr_zero(rest))].str();
    first = false;
  }
  return s + "}";
}

struct Setup {
  std::size_t tope_count;
  std::size_t min_layer;
  std::size_t max_layer;
  bool no_opposites;
  std::vector<Band> bands;
  const FareySeq* signature_seq;
  // bound on s as a function of the signature
  bool bound_by_numerator;
};

Report run_decomposition_check(const std::string& title, const ToposSystem& sys, const Setup& setup,
                               bool force) {
  if (is_acyclic(sys))
    return Report::skipped(title, "the system is acyclic (all-plus tope present)");

  Report report(title);
  const TopeIndex index(sys);
  const CommitteeFamily family = enumerate_all(sys, {.no_opposites = setup.no_opposites, .force = force});

  std::vector<char> in_family(std::size_t{1} << sys.size(), 0);
  for (const auto& c : family.all()) in_family[c.mask()] = 1;

  const auto t = static_cast<Fraction::Int>(setup.tope_count);
  const TopeMask total = TopeMask{1} << sys.size();
  for (TopeMask mask = 1; mask < total; ++mask) {
    if (setup.no_opposites && index.has_opposite_pair(mask)) {
      report.check("family is opposite-free", !in_family[mask], describe(sys, mask));
      continue;
    }
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    const bool committee = in_family[mask] != 0;
    const bool in_range = k >= setup.min_layer && k <= setup.max_layer;

    report.check("enumeration agrees with majority test", committee == index.majority(mask),
                 describe(sys, mask));
    report.check("layer range [" + std::to_string(setup.min_layer) + "," + std::to_string(setup.max_layer) + "]",
                 !committee || in_range, describe(sys, mask) + " has size " + std::to_string(k));
    report.check("threshold layers", committee == (in_range && index.meets_threshold(mask)),
                 describe(sys, mask));

    bool rhs = true;
    for (std::size_t e = 0; e < sys.ground_size() && rhs; ++e)
      rhs = in_bands(setup.bands, static_cast<Fraction::Int>(k), std::popcount(mask & index.halfspace(e)));
    report.check("fraction decomposition", committee == rhs, describe(sys, mask));

    if (!committee) continue;
    const auto counts = index.counts(mask);
    for (std::size_t e = 0; e < counts.size(); ++e) {
      const Fraction f = reduce(counts[e], static_cast<Fraction::Int>(k));
      const std::string where = describe(sys, mask) + ", e=" + std::to_string(e + 1) + ", f=" + f.str();
      report.check("signature exceeds 1/2", f > kHalf, where);
      report.check("signature in " + setup.signature_seq->label(), setup.signature_seq->contains(f), where);
      const auto s = static_cast<Fraction::Int>(k) / f.den();
      report.check("signature multiple", s * f.den() == static_cast<Fraction::Int>(k) && s * f.num() == counts[e],
                   where);
      const Fraction::Int bound = setup.bound_by_numerator ? t / (2 * f.num()) : t / (2 * f.den());
      report.check("multiplier bound", s >= 1 && s <= bound,
                   where + ", s=" + std::to_string(s) + " > " + std::to_string(bound));
    }
  }
  return report;
}

}  // namespace

Report verify_layer_decomposition(const ToposSystem& sys, bool force) {
  const std::size_t t = sys.size();
  const FareySeq seq = farey_boolean(static_cast<int>(t), static_cast<int>(t / 2));
  Setup setup{t, 3, t >= 3 ? t - 3 : 0, false, {}, &seq, true};
  for (const auto& f : seq)
    if (f > kHalf) setup.bands.push_back({f, static_cast<Fraction::Int>(t) / (2 * f.num())});
  Report report = run_decomposition_check("layer-decomposition", sys, setup, force);
  if (report.verdict() == Verdict::SkippedHypothesis) return report;

  const CommitteeFamily minimal = minimal_committees(sys, force);
  for (const auto& c : minimal.all())
    report.check("minimal committees are opposite-free", !c.has_opposite_pair(), c.str());
  return report;
}

Report verify_opposite_free_decomposition(const ToposSystem& sys, bool force) {
  const std::size_t t = sys.size();
  const FareySeq seq = farey_sequence(static_cast<int>(t / 2));
  Setup setup{t, 3, t / 2, true, {}, &seq, false};
  for (const auto& f : seq)
    if (f > kHalf) setup.bands.push_back({f, static_cast<Fraction::Int>(t) / (2 * f.den())});
  return run_decomposition_check("opposite-free-decomposition", sys, setup, force);
}

}  // namespace omc
