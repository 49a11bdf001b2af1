#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include "ssf/gf2_matrix.hpp"
#include "ssf/group.hpp"

namespace ssf {

/// Largest |G| for which H^2(G; Z2) is computed.
inline constexpr std::size_t kDefaultCohomologyBound = 32;

/// A normalized Z2-valued 2-cocycle, stored as the |G|x|G| bit matrix
/// f(g,h) at bit g*|G| + h.
class Cocycle2 {
 public:
  /// Validates normalization and the cocycle identity
  /// f(g,h) + f(gh,k) + f(h,k) + f(g,hk) = 0. Throws ValidationError.
  Cocycle2(FiniteGroup group, BitVector values);

  static Cocycle2 zero(const FiniteGroup& group);

  const FiniteGroup& group() const noexcept { return group_; }
  const BitVector& bits() const noexcept { return values_; }
  bool operator()(Elem g, Elem h) const noexcept { return values_.get(g * group_.order() + h); }
  bool is_zero() const noexcept { return values_.is_zero(); }

  bool operator==(const Cocycle2& o) const { return values_ == o.values_; }

 private:
  FiniteGroup group_;
  BitVector values_;
};

/// delta u (g,h) = u(g) + u(h) + u(gh) for u : G -> Z2 with u(e) = 0.
BitVector coboundary_of(const FiniteGroup& g, const BitVector& u);

/// The span of all coboundaries, as an echelon subspace of the |G|^2 bit space.
Gf2Subspace coboundary_space(const FiniteGroup& g);

/// One element of H^2(G; Z2). The representative is the lexicographically
/// least bit matrix of its coset.
struct CohomologyClass {
  std::size_t index = 0;
  Cocycle2 representative;
  std::shared_ptr<const Gf2Subspace> coboundaries;

  bool is_zero() const noexcept { return representative.is_zero(); }
  bool contains(const Cocycle2& f) const {
    return coboundaries->contains(f.bits() ^ representative.bits());
  }
};

struct H2Data {
  FiniteGroup group;
  std::vector<Cocycle2> cocycle_basis;
  std::vector<Cocycle2> coboundary_basis;
  /// Sorted lexicographically by representative; index 0 is the zero class.
  std::vector<CohomologyClass> classes;

  std::size_t cocycle_dim() const noexcept { return cocycle_basis.size(); }
  std::size_t coboundary_dim() const noexcept { return coboundary_basis.size(); }
  std::size_t h2_dim() const noexcept { return cocycle_dim() - coboundary_dim(); }

  /// Index of the class containing f.
  std::size_t class_of(const Cocycle2& f) const;
};

/// Solves the cocycle identity over GF(2) by elimination and splits the
/// solution space into cohomology classes. Throws BoundError above `bound`.
H2Data cocycle_space(const FiniteGroup& g, std::size_t bound = kDefaultCohomologyBound);

void write_cocycle(std::ostream& out, const Cocycle2& f);
Cocycle2 read_cocycle(std::istream& in, const FiniteGroup& g);

}  // namespace ssf
