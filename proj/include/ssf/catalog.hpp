#pragma once

#include <string>
#include <vector>

#include "ssf/group.hpp"

namespace ssf {

/// A named group from the bundled families. Tags are drawn from
/// cyclic_sylow2, quaternion_sylow2, odd_order, periodic, other.
struct CatalogEntry {
  std::string spec;
  FiniteGroup group;
  std::vector<std::string> tags;  // sorted

  bool has_tag(const std::string& t) const;
};

std::vector<std::string> catalog_tags(const FiniteGroup& g);

/// Family-based catalog, not every isomorphism type: cyclic groups, dihedral
/// D_m for odd m, generalized quaternion groups, C_odd x (cyclic or
/// quaternion 2-group), and every C_m : C_(2^k) @ r with r != 1. Sorted by
/// (order, spec). Throws BoundError above kDefaultCatalogBound.
std::vector<CatalogEntry> generate_catalog(std::size_t max_order);

}  // namespace ssf
