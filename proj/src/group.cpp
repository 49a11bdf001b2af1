#include "ssf/group.hpp"

#include <algorithm>
#include <sstream>

#include "ssf/errors.hpp"

namespace ssf {

namespace {

std::string triple_message(Elem a, Elem b, Elem c, Elem lhs, Elem rhs) {
  std::ostringstream os;
  os << "table is not associative: (" << a << "*" << b << ")*" << c << " = " << lhs << " but "
     << a << "*(" << b << "*" << c << ") = " << rhs;
  return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> table,
                         std::vector<std::string> labels) {
  if (order == 0) throw ValidationError("group order must be positive");
  if (order > kMaxTableOrder) {
    throw BoundError("group order " + std::to_string(order) + " exceeds table limit " +
                     std::to_string(kMaxTableOrder));
  }
  if (table.size() != order * order) {
    throw ValidationError("table has " + std::to_string(table.size()) + " entries, expected " +
                          std::to_string(order * order));
  }
  const auto n = order;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw ValidationError("entry at row " + std::to_string(i / n) + ", column " +
                            std::to_string(i % n) + " is out of range");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (table[a] != a || table[a * n] != a) {
      throw ValidationError("element 0 is not the identity (row/column " + std::to_string(a) +
                            ")");
    }
  }
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      auto v = table[r * n + c];
      if (seen[v]) throw ValidationError("not a Latin square: row " + std::to_string(r) +
                                         " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      auto v = table[r * n + c];
      if (seen[v]) throw ValidationError("not a Latin square: column " + std::to_string(c) +
                                         " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }

  auto data = std::make_shared<Data>();
  data->order = n;
  data->inverse.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    // Latin rows guarantee a unique right inverse.
    Elem b = 0;
    while (table[a * n + b] != kIdentity) ++b;
    if (table[b * n + a] != kIdentity) {
      throw ValidationError("element " + std::to_string(a) + " has no two-sided inverse");
    }
    data->inverse[a] = b;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = table[a * n + b];
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = table[ab * n + c];
        const Elem rhs = table[a * n + table[b * n + c]];
        if (lhs != rhs) throw ValidationError(triple_message(a, b, c, lhs, rhs));
      }
    }
  }

  data->orders.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    std::uint32_t d = 1;
    for (Elem x = a; x != kIdentity; x = table[x * n + a]) ++d;
    data->orders[a] = d;
  }

  if (!labels.empty()) {
    if (labels.size() != n) {
      throw ValidationError("expected " + std::to_string(n) + " labels, got " +
                            std::to_string(labels.size()));
    }
    data->custom_labels = true;
    data->labels = std::move(labels);
  } else {
    data->labels.reserve(n);
    for (Elem a = 0; a < n; ++a) data->labels.push_back(a == 0 ? "e" : "g" + std::to_string(a));
  }
  data->table = std::move(table);
  data_ = std::move(data);
}

Elem FiniteGroup::pow(Elem a, std::int64_t e) const {
  const auto ord = static_cast<std::int64_t>(element_order(a));
  e %= ord;
  if (e < 0) e += ord;
  Elem r = kIdentity;
  for (std::int64_t i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  if (a >= order()) {
    throw PreconditionError("element index " + std::to_string(a) + " out of range for order " +
                            std::to_string(order()));
  }
  return data_->orders[a];
}

std::optional<Elem> FiniteGroup::find_label(const std::string& name) const {
  const auto& ls = data_->labels;
  auto it = std::find(ls.begin(), ls.end(), name);
  if (it == ls.end()) return std::nullopt;
  return static_cast<Elem>(it - ls.begin());
}

bool FiniteGroup::is_abelian() const noexcept {
  const auto n = order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != kIdentity) {
    throw ValidationError("subgroup does not contain the identity");
  }
  if (elements_.back() >= parent_.order()) throw ValidationError("subgroup element out of range");
  for (Elem a : elements_) {
    if (!contains(parent_.inv(a))) throw ValidationError("subgroup not closed under inverse");
    for (Elem b : elements_) {
      if (!contains(parent_.mul(a, b))) throw ValidationError("subgroup not closed under product");
    }
  }
  if (parent_.order() % elements_.size() != 0) {
    throw ValidationError("subgroup order does not divide group order");
  }
}

bool Subgroup::contains(Elem a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

bool Subgroup::is_normal() const {
  for (Elem g = 0; g < parent_.order(); ++g)
    for (Elem a : elements_)
      if (!contains(parent_.conj(g, a))) return false;
  return true;
}

std::optional<Elem> Subgroup::local_index(Elem parent_elem) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), parent_elem);
  if (it == elements_.end() || *it != parent_elem) return std::nullopt;
  return static_cast<Elem>(it - elements_.begin());
}

FiniteGroup Subgroup::as_group() const {
  const auto k = elements_.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = *local_index(parent_.mul(elements_[i], elements_[j]));
  std::vector<std::string> labels;
  labels.reserve(k);
  for (Elem a : elements_) labels.push_back(parent_.label(a));
  return FiniteGroup(k, std::move(table), std::move(labels));
}

}  // namespace ssf
