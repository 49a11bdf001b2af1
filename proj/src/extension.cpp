#include "ssf/extension.hpp"

#include <algorithm>

#include "ssf/errors.hpp"
#include "ssf/group_algorithms.hpp"

namespace ssf {

namespace {

FiniteGroup make_total(const FiniteGroup& g, const Cocycle2& f) {
  const auto n = g.order();
  const auto t = 2 * n;
  std::vector<Elem> table(t * t);
  std::vector<std::string> labels(t);
  for (Elem a = 0; a < n; ++a) {
    for (unsigned ea = 0; ea < 2; ++ea) {
      const Elem x = 2 * a + ea;
      labels[x] = "(" + std::to_string(ea) + "," + g.label(a) + ")";
      for (Elem b = 0; b < n; ++b) {
        for (unsigned eb = 0; eb < 2; ++eb) {
          const unsigned eps = ea ^ eb ^ (f(a, b) ? 1u : 0u);
          table[x * t + 2 * b + eb] = 2 * g.mul(a, b) + eps;
        }
      }
    }
  }
  return FiniteGroup(t, std::move(table), std::move(labels));
}

}  // namespace

ExtensionGroup::ExtensionGroup(const FiniteGroup& base, const Cocycle2& cocycle)
    : base_(base), cocycle_(cocycle), total_(make_total(base, cocycle)) {}

ExtensionGroup build_extension(const FiniteGroup& g, const Cocycle2& f) {
  if (!f.group().same_table(g)) {
    throw ValidationError("cocycle is defined on a different group table");
  }
  return ExtensionGroup(g, f);
}

bool split_by_coboundary(const FiniteGroup& g, const Cocycle2& f) {
  if (!f.group().same_table(g)) {
    throw ValidationError("cocycle is defined on a different group table");
  }
  return coboundary_space(g).contains(f.bits());
}

bool split_by_complement(const ExtensionGroup& e) {
  const auto gens = generating_set(e.base());
  const auto k = gens.size();
  std::vector<Elem> lifts(k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    for (std::size_t i = 0; i < k; ++i) lifts[i] = ExtensionGroup::lift(gens[i], mask >> i & 1u);
    // The closure projects onto G, so it has order |G| exactly when it avoids z.
    if (subgroup_closure(e.total(), lifts).order() == e.base().order()) return true;
  }
  return false;
}

bool is_split(const FiniteGroup& g, const Cocycle2& f) {
  const bool by_coboundary = split_by_coboundary(g, f);
  const bool by_complement = split_by_complement(build_extension(g, f));
  if (by_coboundary != by_complement) {
    throw std::logic_error("coboundary and complement splitting tests disagree");
  }
  return by_coboundary;
}

Cocycle2 restrict_cocycle(const Cocycle2& f, const Subgroup& h) {
  if (!h.parent().same_table(f.group())) {
    throw ValidationError("subgroup does not belong to the cocycle's group");
  }
  const auto sub = h.as_group();
  const auto& el = h.elements();
  const auto k = el.size();
  BitVector bits(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) bits.set(i * k + j, f(el[i], el[j]));
  return Cocycle2(sub, std::move(bits));
}

std::vector<std::pair<std::size_t, std::size_t>> preimage_order_profile(const ExtensionGroup& e) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(e.base().order());
  for (Elem g = 0; g < e.base().order(); ++g) {
    auto a = e.total().element_order(ExtensionGroup::lift(g, false));
    auto b = e.total().element_order(ExtensionGroup::lift(g, true));
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

bool splits_on_cyclic(const ExtensionGroup& e, Elem g) {
  const auto d = e.base().element_order(g);
  return e.total().element_order(ExtensionGroup::lift(g, false)) == d ||
         e.total().element_order(ExtensionGroup::lift(g, true)) == d;
}

Subgroup lift_odd_normal(const ExtensionGroup& e) {
  const auto& base = e.base();
  std::optional<Subgroup> core;
  if (is_cyclic(sylow_subgroup(base, 2).as_group())) {
    core = odd_core(base);
  } else {
    core = odd_normal_subgroup(base);
  }
  if (!core) throw PreconditionError("base group has no normal subgroup of maximal odd order");

  const auto& total = e.total();
  std::vector<Elem> lifted;
  for (Elem x = 0; x < total.order(); ++x) {
    if (total.element_order(x) % 2 == 1 && core->contains(ExtensionGroup::project(x))) {
      lifted.push_back(x);
    }
  }
  if (lifted.size() != core->order()) {
    throw std::logic_error("odd-order lifts do not biject onto the odd core");
  }
  std::vector<char> hit(base.order(), 0);
  for (Elem x : lifted) {
    auto& h = hit[ExtensionGroup::project(x)];
    if (h) throw std::logic_error("two odd-order lifts of one element");
    h = 1;
  }
  Subgroup result(total, std::move(lifted));
  if (!result.is_normal()) throw std::logic_error("lifted odd subgroup is not normal");
  return result;
}

}  // namespace ssf
