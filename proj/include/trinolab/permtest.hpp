// Permutation checks: bijection tests on finite maps, the subgroups mu_d of
// GF(3^2k)*, and the criterion for maps of the shape x^r h(x^((3^2k-1)/d)).
#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trinolab/gf3m.hpp"
#include "trinolab/polyring.hpp"

namespace trinolab {

/// mu_d = { x : x^d = 1 }, elements sorted by encoding.
class UnityGroup {
 public:
  UnityGroup(std::uint64_t d, std::vector<Element> elements) : d_(d), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].encoding(), i);
  }

  std::uint64_t d() const { return d_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Element& x) const { return index_.contains(x.encoding()); }
  std::optional<std::size_t> index_of(const Element& x) const {
    auto it = index_.find(x.encoding());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::uint64_t d_;
  std::vector<Element> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// The powers of alpha^((3^2k - 1)/d).
inline UnityGroup mu_enumerate(const FieldCtx& ctx, std::uint64_t d) {
  if (d == 0 || ctx.group_order() % d != 0) throw Error("not a subgroup order");
  const Element g = pow(ctx.alpha(), ctx.group_order() / d);
  std::vector<Element> elems;
  elems.reserve(d);
  Element x = ctx.one();
  for (std::uint64_t i = 0; i < d; ++i, x *= g) elems.push_back(x);
  return UnityGroup(d, std::move(elems));
}

/// mu_{q+1}, the group the trinomial families reduce to.
inline UnityGroup mu_q_plus_1(const FieldCtx& ctx) { return mu_enumerate(ctx, ctx.q() + 1); }

struct MapReport {
  bool is_bijection = false;
  /// First x2 (encoding order) whose image was already hit by x1.
  std::optional<std::pair<Element, Element>> collision;
  /// Smallest domain element with empty preimage.
  std::optional<Element> missed;
  /// First x whose image leaves the domain; set only for maps not into it.
  std::optional<Element> escaped;
};

using ElementMap = std::function<Element(const Element&)>;

/// Checks that map sends the (duplicate-free) domain bijectively onto itself.
inline MapReport is_bijection_on(const ElementMap& map, std::span<const Element> domain) {
  std::vector<Element> order(domain.begin(), domain.end());
  std::sort(order.begin(), order.end());
  std::unordered_map<std::uint64_t, std::size_t> position;
  position.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position.emplace(order[i].encoding(), i);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> preimage(order.size(), kNone);
  MapReport report;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Element y = map(order[i]);
    auto it = position.find(y.encoding());
    if (it == position.end() || y.field() != order[i].field()) {
      if (!report.escaped) report.escaped = order[i];
      continue;
    }
    std::size_t& slot = preimage[it->second];
    if (slot != kNone) {
      if (!report.collision) report.collision = std::make_pair(order[slot], order[i]);
      continue;
    }
    slot = i;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (preimage[i] == kNone) {
      report.missed = order[i];
      break;
    }
  }
  report.is_bijection = !report.collision && !report.missed && !report.escaped;
  return report;
}

struct ZieveResult {
  bool cond1 = false;  // gcd(r, (3^2k - 1)/d) = 1
  bool cond2 = false;  // x^r h(x)^((3^2k - 1)/d) permutes mu_d
};

/// The criterion for x^r h(x^((3^2k-1)/d)) to permute GF(3^2k). A zero of h
/// on mu_d fails cond2: the map then leaves mu_d.
inline ZieveResult zieve_criterion(const FieldCtx& ctx, std::uint64_t r, std::uint64_t d, const Poly& h) {
  const UnityGroup mu = mu_enumerate(ctx, d);
  const std::uint64_t s = ctx.group_order() / d;
  ZieveResult out;
  out.cond1 = std::gcd(r, s) == 1;
  for (const auto& x : mu.elements())
    if (h(x).is_zero()) return out;
  out.cond2 = is_bijection_on([&](const Element& x) { return pow(x, r) * pow(h(x), s); }, mu.elements())
                  .is_bijection;
  return out;
}

/// Direct route: does x^r h(x^((3^2k-1)/d)) permute the whole field?
inline MapReport form_permutes_field(const FieldCtx& ctx, std::uint64_t r, std::uint64_t d, const Poly& h) {
  if (d == 0 || ctx.group_order() % d != 0) throw Error("not a subgroup order");
  const std::uint64_t s = ctx.group_order() / d;
  const auto all = ctx.elements();
  return is_bijection_on([&](const Element& x) { return pow(x, r) * h(pow(x, s)); }, all);
}

}  // namespace trinolab
