#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ssf {

/// Index of a group element inside its Cayley table. The identity is always 0.
using Elem = std::uint32_t;

inline constexpr Elem kIdentity = 0;

/// Hard ceiling on the size of any table this library will materialize.
inline constexpr std::size_t kMaxTableOrder = 512;

/// A finite group given by a validated Cayley table.
///
/// Copies are cheap: the table is shared and immutable. Construction checks
/// that the table is a Latin square with identity at index 0, that every
/// element has a two-sided inverse, and that the product is associative.
class FiniteGroup {
 public:
  /// Builds and validates. Throws ValidationError naming the first defect.
  /// `labels` may be empty, in which case elements are labelled by index.
  FiniteGroup(std::size_t order, std::vector<Elem> table,
              std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return data_->order; }

  Elem mul(Elem a, Elem b) const noexcept { return data_->table[a * data_->order + b]; }
  Elem inv(Elem a) const noexcept { return data_->inverse[a]; }
  Elem conj(Elem by, Elem a) const noexcept { return mul(mul(by, a), inv(by)); }
  Elem pow(Elem a, std::int64_t e) const;

  /// Smallest d >= 1 with a^d = e. Throws PreconditionError if a is out of range.
  std::size_t element_order(Elem a) const;

  std::span<const Elem> table() const noexcept { return data_->table; }
  std::span<const Elem> row(Elem a) const noexcept {
    return std::span<const Elem>(data_->table).subspan(a * data_->order, data_->order);
  }

  const std::string& label(Elem a) const { return data_->labels.at(a); }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  bool has_custom_labels() const noexcept { return data_->custom_labels; }
  std::optional<Elem> find_label(const std::string& name) const;

  bool is_abelian() const noexcept;

  /// Identical tables (labels are ignored).
  bool same_table(const FiniteGroup& other) const noexcept {
    return data_ == other.data_ || data_->table == other.data_->table;
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::uint32_t> orders;
    std::vector<std::string> labels;
    bool custom_labels = false;
  };
  std::shared_ptr<const Data> data_;
};

/// A subgroup of a parent group, stored as a sorted list of parent indices.
class Subgroup {
 public:
  /// Validates closure, identity and Lagrange. Throws ValidationError otherwise.
  Subgroup(FiniteGroup parent, std::vector<Elem> elements);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Elem a) const;

  bool is_normal() const;

  /// The subgroup as a standalone group; local index i is parent element elements()[i].
  FiniteGroup as_group() const;

  /// Local index of a parent element, or nullopt if absent.
  std::optional<Elem> local_index(Elem parent_elem) const;

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

 private:
  FiniteGroup parent_;
  std::vector<Elem> elements_;
};

}  // namespace ssf
