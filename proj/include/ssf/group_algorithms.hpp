#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ssf/group.hpp"

namespace ssf {

/// Size limit for the exhaustive oracles (normal subgroup enumeration, isomorphism).
inline constexpr std::size_t kDefaultCatalogBound = 64;

std::size_t element_order(const FiniteGroup& g, Elem a);

using ConjugacyClass = std::vector<Elem>;

/// Orbits under conjugation, each sorted, ordered by smallest member.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// class_index[a] is the position of a's class in conjugacy_classes(g).
std::vector<std::uint32_t> class_index_map(const FiniteGroup& g,
                                           const std::vector<ConjugacyClass>& classes);

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> generators);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

Subgroup normalizer(const Subgroup& h);

bool is_prime(std::uint64_t p);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// A Sylow p-subgroup, grown one factor of p at a time inside normalizers.
/// Throws PreconditionError if p is not prime.
Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

bool is_cyclic(const FiniteGroup& g);

enum class SylowType { Cyclic, GeneralizedQuaternion, Other };

const char* to_string(SylowType t);

/// For each prime dividing |G|, the isomorphism type class of a Sylow subgroup.
std::map<std::uint64_t, SylowType> periodicity_report(const FiniteGroup& g);

bool is_periodic(const std::map<std::uint64_t, SylowType>& report);

/// Every normal subgroup, by closing unions of conjugacy classes. Oracle only.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g,
                                       std::size_t bound = kDefaultCatalogBound);

/// The unique normal subgroup of maximal odd order, for groups with cyclic
/// 2-Sylow subgroup. Built by repeatedly passing to the kernel of the sign
/// of the regular representation. Throws PreconditionError otherwise.
Subgroup odd_core(const FiniteGroup& g);

/// The set of odd-order elements when it forms a subgroup of order |G|_odd.
std::optional<Subgroup> odd_normal_subgroup(const FiniteGroup& g);

/// Table isomorphism by backtracking over generator images. Throws
/// BoundError when either order exceeds `bound`.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                  std::size_t bound = kDefaultCatalogBound);
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                std::size_t bound = kDefaultCatalogBound);

/// Greedy generating set: repeatedly add the smallest-index element of
/// largest order not yet generated.
std::vector<Elem> generating_set(const FiniteGroup& g);

}  // namespace ssf
