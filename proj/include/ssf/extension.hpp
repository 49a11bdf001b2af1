#pragma once

#include <utility>
#include <vector>

#include "ssf/cohomology.hpp"
#include "ssf/group.hpp"

namespace ssf {

/// The central extension 1 -> Z2 -> E -> G -> 1 defined by a cocycle.
///
/// Elements of the total group are pairs (eps, g) stored at index 2*g + eps,
/// with product (eps1 + eps2 + f(g1,g2), g1 g2). The central involution z is
/// (1, e) at index 1; "-x" means z*x.
class ExtensionGroup {
 public:
  ExtensionGroup(const FiniteGroup& base, const Cocycle2& cocycle);

  const FiniteGroup& base() const noexcept { return base_; }
  const Cocycle2& cocycle() const noexcept { return cocycle_; }
  const FiniteGroup& total() const noexcept { return total_; }

  static constexpr Elem z() noexcept { return 1; }
  static constexpr Elem lift(Elem g, bool eps) noexcept { return 2 * g + (eps ? 1 : 0); }
  static constexpr Elem project(Elem x) noexcept { return x / 2; }
  static constexpr bool sign_bit(Elem x) noexcept { return x % 2 == 1; }

  Elem negate(Elem x) const noexcept { return total_.mul(z(), x); }

 private:
  FiniteGroup base_;
  Cocycle2 cocycle_;
  FiniteGroup total_;
};

/// Throws ValidationError if the cocycle is defined on a different table.
ExtensionGroup build_extension(const FiniteGroup& g, const Cocycle2& f);

/// f is a coboundary (GF(2) membership in the coboundary span).
bool split_by_coboundary(const FiniteGroup& g, const Cocycle2& f);

/// The total group has a subgroup mapping bijectively onto G. Searches over
/// the lifts of a generating set.
bool split_by_complement(const ExtensionGroup& e);

/// Both routes above; throws std::logic_error if they disagree.
bool is_split(const FiniteGroup& g, const Cocycle2& f);

/// Throws ValidationError if h is not a subgroup of f's group. The result
/// lives on h.as_group().
Cocycle2 restrict_cocycle(const Cocycle2& f, const Subgroup& h);

/// Orders of the two preimages of each base element, ascending.
std::vector<std::pair<std::size_t, std::size_t>> preimage_order_profile(const ExtensionGroup& e);

/// The restriction of the extension to <g> splits, i.e. some lift of g has the same order as g.
bool splits_on_cyclic(const ExtensionGroup& e, Elem g);

/// The normal subgroup of odd order |G|_odd of the total group that projects
/// isomorphically onto the odd normal subgroup of the base.
/// Throws PreconditionError if the base has no normal subgroup of maximal odd order.
Subgroup lift_odd_normal(const ExtensionGroup& e);

}  // namespace ssf
