#include "omc/committees.hpp"

#include <algorithm>
#include <bit>

#include "omc/error.hpp"

namespace omc {

namespace {

constexpr std::size_t kMaxTopes = 63;
constexpr double kLayerGuard = 1e8;
constexpr std::size_t kAllGuardBits = 24;

double binomial_estimate(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

void require_bitset_size(const ToposSystem& sys) {
  require(sys.size() <= kMaxTopes, ErrorKind::ResourceGuard,
          "committee enumeration supports at most 63 topes, got " + std::to_string(sys.size()));
}

// Visits every k-subset of {0..n-1} as a mask, in lexicographic order of
// the sorted index lists.
template <typename Visit>
void for_each_k_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k == 0 || k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    TopeMask mask = 0;
    for (auto i : idx) mask |= TopeMask{1} << i;
    visit(mask);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TopeIndex::TopeIndex(const ToposSystem& sys)
    : count_(sys.size()), halfspaces_(sys.ground_size(), 0), opposite_(sys.size()) {
  require_bitset_size(sys);
  const auto& topes = sys.topes();
  for (std::size_t i = 0; i < topes.size(); ++i) {
    for (std::size_t e = 0; e < sys.ground_size(); ++e)
      if (topes[i].is_plus(e)) halfspaces_[e] |= TopeMask{1} << i;
    opposite_[i] = *sys.index_of(opposite(topes[i]));
  }
}

std::vector<int> TopeIndex::counts(TopeMask k) const {
  std::vector<int> out(halfspaces_.size());
  for (std::size_t e = 0; e < halfspaces_.size(); ++e) out[e] = std::popcount(k & halfspaces_[e]);
  return out;
}

bool TopeIndex::has_opposite_pair(TopeMask k) const noexcept {
  for (TopeMask rest = k; rest != 0; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    if (k >> opposite_[i] & 1U) return true;
  }
  return false;
}

bool TopeIndex::majority(TopeMask k) const noexcept {
  const int size = std::popcount(k);
  if (size == 0) return false;
  for (TopeMask h : halfspaces_)
    if (2 * std::popcount(k & h) <= size) return false;
  return true;
}

bool TopeIndex::meets_threshold(TopeMask k) const noexcept {
  const int size = std::popcount(k);
  if (size == 0) return false;
  const int threshold = (size + 1 + 1) / 2;  // ceil((k+1)/2)
  for (TopeMask h : halfspaces_)
    if (std::popcount(k & h) < threshold) return false;
  return true;
}

TopeMask TopeIndex::mask_of(const ToposSystem& sys, std::span<const SignVector> members) const {
  require(!members.empty(), ErrorKind::Domain, "committee candidate is empty");
  TopeMask mask = 0;
  for (const auto& v : members) {
    const auto i = sys.index_of(v);
    require(i.has_value(), ErrorKind::Domain, v.str() + " is not a tope of the system");
    require(!(mask >> *i & 1U), ErrorKind::Domain, "tope " + v.str() + " listed twice");
    mask |= TopeMask{1} << *i;
  }
  return mask;
}

bool Committee::has_opposite_pair() const noexcept {
  for (const auto& v : members_)
    if (std::binary_search(members_.begin(), members_.end(), opposite(v))) return true;
  return false;
}

std::string Committee::str() const {
  std::string s;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += members_[i].str();
  }
  return s;
}

Committee committee_from_mask(const ToposSystem& sys, const TopeIndex& index, TopeMask mask) {
  require(mask != 0, ErrorKind::Domain, "committee candidate is empty");
  require(index.majority(mask), ErrorKind::Domain, "subset is not a tope committee");
  Committee c;
  c.mask_ = mask;
  c.counts_ = index.counts(mask);
  for (TopeMask rest = mask; rest != 0; rest &= rest - 1)
    c.members_.push_back(sys.topes()[static_cast<std::size_t>(std::countr_zero(rest))]);
  return c;
}

Committee make_committee(const ToposSystem& sys, std::span<const SignVector> members) {
  const TopeIndex index(sys);
  return committee_from_mask(sys, index, index.mask_of(sys, members));
}

bool is_committee(const ToposSystem& sys, std::span<const SignVector> members) {
  const TopeIndex index(sys);
  return index.majority(index.mask_of(sys, members));
}

bool is_committee_threshold(const ToposSystem& sys, std::span<const SignVector> members) {
  const TopeIndex index(sys);
  return index.meets_threshold(index.mask_of(sys, members));
}

void for_each_committee_in_layer(const ToposSystem& sys, std::size_t k, EnumerationOptions opts,
                                 const std::function<void(const Committee&)>& visit) {
  require(k >= 1 && k <= sys.size(), ErrorKind::Domain,
          "layer " + std::to_string(k) + " outside [1, " + std::to_string(sys.size()) + "]");
  require(opts.force || binomial_estimate(sys.size(), k) <= kLayerGuard, ErrorKind::ResourceGuard,
          "layer " + std::to_string(k) + " has more than 1e8 subsets; use --force");
  const TopeIndex index(sys);
  for_each_k_subset(sys.size(), k, [&](TopeMask mask) {
    if (opts.no_opposites && index.has_opposite_pair(mask)) return;
    if (index.majority(mask)) visit(committee_from_mask(sys, index, mask));
  });
}

std::vector<Committee> enumerate_layer(const ToposSystem& sys, std::size_t k, EnumerationOptions opts) {
  std::vector<Committee> out;
  for_each_committee_in_layer(sys, k, opts, [&](const Committee& c) { out.push_back(c); });
  return out;
}

std::size_t CommitteeFamily::total() const {
  std::size_t n = 0;
  for (const auto& [k, layer] : layers) n += layer.size();
  return n;
}

std::vector<Committee> CommitteeFamily::all() const {
  std::vector<Committee> out;
  for (const auto& [k, layer] : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

CommitteeFamily enumerate_all(const ToposSystem& sys, EnumerationOptions opts) {
  require_bitset_size(sys);
  require(opts.force || sys.size() <= kAllGuardBits, ErrorKind::ResourceGuard,
          "full enumeration visits 2^" + std::to_string(sys.size()) + " subsets; use --force");
  CommitteeFamily family;
  family.no_opposites = opts.no_opposites;
  const TopeIndex index(sys);
  for (std::size_t k = 1; k <= sys.size(); ++k) {
    auto& layer = family.layers[k];
    for_each_k_subset(sys.size(), k, [&](TopeMask mask) {
      if (opts.no_opposites && index.has_opposite_pair(mask)) return;
      if (index.majority(mask)) layer.push_back(committee_from_mask(sys, index, mask));
    });
  }
  return family;
}

CommitteeFamily minimal_committees(const ToposSystem& sys, bool force) {
  const CommitteeFamily all = enumerate_all(sys, {.no_opposites = false, .force = force});
  CommitteeFamily family;
  family.minimal = true;
  // Layers ascend, so each committee is tested against smaller minimal ones.
  std::vector<TopeMask> kept;
  for (const auto& [k, layer] : all.layers) {
    auto& out = family.layers[k];
    for (const auto& c : layer) {
      const bool dominated = std::any_of(kept.begin(), kept.end(),
                                         [&](TopeMask m) { return (m & c.mask()) == m; });
      if (!dominated) out.push_back(c);
    }
    for (const auto& c : out) kept.push_back(c.mask());
  }
  return family;
}

std::vector<Committee> minimum_committees(const ToposSystem& sys, bool force) {
  const CommitteeFamily minimal = minimal_committees(sys, force);
  for (const auto& [k, layer] : minimal.layers)
    if (!layer.empty()) return layer;
  return {};
}

Fraction fraction_signature(const ToposSystem& sys, const Committee& k, std::size_t e) {
  require(e >= 1 && e <= sys.ground_size(), ErrorKind::Domain,
          "element " + std::to_string(e) + " outside [1, " + std::to_string(sys.ground_size()) + "]");
  // Rejects committees of another system.
  const TopeIndex index(sys);
  const TopeMask mask = index.mask_of(sys, k.members());
  require(index.majority(mask), ErrorKind::Domain, "not a committee of this system");
  return reduce(k.counts()[e - 1], static_cast<Fraction::Int>(k.size()));
}

Committee augment_with_opposite_pair(const ToposSystem& sys, const Committee& k, const SignVector& tope) {
  const TopeIndex index(sys);
  const TopeMask base = index.mask_of(sys, k.members());
  const auto i = sys.index_of(tope);
  require(i.has_value(), ErrorKind::Domain, tope.str() + " is not a tope of the system");
  const std::size_t j = index.opposite_of(*i);
  require(!(base >> *i & 1U), ErrorKind::Domain, tope.str() + " is already in the committee");
  require(!(base >> j & 1U), ErrorKind::Domain, opposite(tope).str() + " is already in the committee");
  return committee_from_mask(sys, index, base | (TopeMask{1} << *i) | (TopeMask{1} << j));
}

Committee union_committees(const ToposSystem& sys, const Committee& a, const Committee& b) {
  const TopeIndex index(sys);
  const TopeMask ma = index.mask_of(sys, a.members());
  const TopeMask mb = index.mask_of(sys, b.members());
  require((ma & mb) == 0, ErrorKind::Domain, "committees overlap");
  return committee_from_mask(sys, index, ma | mb);
}

}  // namespace omc
