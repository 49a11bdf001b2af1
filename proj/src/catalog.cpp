#include "ssf/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ssf/errors.hpp"
#include "ssf/group_algorithms.hpp"
#include "ssf/group_spec.hpp"

namespace ssf {

bool CatalogEntry::has_tag(const std::string& t) const {
  return std::binary_search(tags.begin(), tags.end(), t);
}

std::vector<std::string> catalog_tags(const FiniteGroup& g) {
  std::vector<std::string> tags;
  const auto report = periodicity_report(g);
  const auto two = report.find(2);
  if (two == report.end() || two->second == SylowType::Cyclic) tags.emplace_back("cyclic_sylow2");
  if (two != report.end() && two->second == SylowType::GeneralizedQuaternion) {
    tags.emplace_back("quaternion_sylow2");
  }
  if (g.order() % 2 == 1) tags.emplace_back("odd_order");
  tags.emplace_back(is_periodic(report) ? "periodic" : "other");
  std::sort(tags.begin(), tags.end());
  return tags;
}

std::vector<CatalogEntry> generate_catalog(std::size_t max_order) {
  if (max_order > kDefaultCatalogBound) {
    throw BoundError("catalog limited to order " + std::to_string(kDefaultCatalogBound));
  }
  std::set<std::string> specs;
  const auto n = max_order;
  for (std::size_t m = 1; m <= n; ++m) specs.insert("C" + std::to_string(m));
  for (std::size_t m = 3; 2 * m <= n; m += 2) specs.insert("D" + std::to_string(m));
  for (std::size_t q = 8; q <= n; q *= 2) specs.insert("Q" + std::to_string(q));
  for (std::size_t a = 3; a <= n; a += 2) {
    for (std::size_t c = 2; a * c <= n; c *= 2) {
      specs.insert("C" + std::to_string(a) + "xC" + std::to_string(c));
    }
    for (std::size_t q = 8; a * q <= n; q *= 2) {
      specs.insert("C" + std::to_string(a) + "xQ" + std::to_string(q));
    }
  }
  for (std::size_t m = 3; m <= n; ++m) {
    for (std::size_t k = 2; m * k <= n; k *= 2) {
      for (std::size_t r = 2; r < m; ++r) {
        if (std::gcd(r, m) != 1) continue;
        std::size_t p = 1;
        for (std::size_t i = 0; i < k; ++i) p = p * r % m;
        if (p != 1) continue;
        specs.insert("C" + std::to_string(m) + ":C" + std::to_string(k) + "@r" +
                     std::to_string(r));
      }
    }
  }

  std::vector<CatalogEntry> out;
  out.reserve(specs.size());
  for (const auto& s : specs) {
    auto g = make_group(s);
    auto tags = catalog_tags(g);
    out.push_back({s, std::move(g), std::move(tags)});
  }
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.spec < b.spec;
  });
  return out;
}

}  // namespace ssf
