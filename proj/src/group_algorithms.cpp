#include "ssf/group_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "ssf/errors.hpp"
#include "ssf/group_spec.hpp"

namespace ssf {

std::size_t element_order(const FiniteGroup& g, Elem a) { return g.element_order(a); }

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const auto n = g.order();
  std::vector<char> done(n, 0);
  std::vector<ConjugacyClass> classes;
  for (Elem a = 0; a < n; ++a) {
    if (done[a]) continue;
    ConjugacyClass cls;
    for (Elem x = 0; x < n; ++x) {
      const Elem c = g.conj(x, a);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::uint32_t> class_index_map(const FiniteGroup& g,
                                           const std::vector<ConjugacyClass>& classes) {
  std::vector<std::uint32_t> idx(g.order());
  for (std::uint32_t c = 0; c < classes.size(); ++c)
    for (Elem a : classes[c]) idx[a] = c;
  return idx;
}

namespace {

std::vector<Elem> closure_elements(const FiniteGroup& g, std::span<const Elem> gens,
                                   std::vector<char>& member) {
  member.assign(g.order(), 0);
  std::vector<Elem> out{kIdentity};
  member[kIdentity] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = g.mul(out[i], s);
      if (!member[y]) {
        member[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> generators) {
  for (Elem s : generators) {
    if (s >= g.order()) throw PreconditionError("generator index out of range");
  }
  std::vector<char> member;
  return Subgroup(g, closure_elements(g, generators, member));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {kIdentity}); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  for (Elem a = 0; a < all.size(); ++a) all[a] = a;
  return Subgroup(g, std::move(all));
}

Subgroup normalizer(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem a : h.elements()) {
      if (!h.contains(g.conj(x, a))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  std::size_t target = 1;
  for (auto n = g.order(); n % p == 0; n /= p) target *= p;

  Subgroup current = trivial_subgroup(g);
  while (current.order() < target) {
    // p divides [N(P):P] while P is not Sylow, so N(P)/P has an element of order p.
    const Subgroup norm = normalizer(current);
    std::optional<Elem> step;
    for (Elem x : norm.elements()) {
      if (current.contains(x)) continue;
      std::size_t j = 1;
      Elem xj = x;
      while (!current.contains(xj)) {
        xj = g.mul(xj, x);
        ++j;
      }
      if (j % p == 0) {
        step = g.pow(x, static_cast<std::int64_t>(j / p));
        break;
      }
    }
    if (!step) throw std::logic_error("Sylow growth stalled");
    std::vector<Elem> gens = current.elements();
    gens.push_back(*step);
    current = subgroup_closure(g, gens);
  }
  return current;
}

bool is_cyclic(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order(); ++a)
    if (g.element_order(a) == g.order()) return true;
  return false;
}

const char* to_string(SylowType t) {
  switch (t) {
    case SylowType::Cyclic:
      return "cyclic";
    case SylowType::GeneralizedQuaternion:
      return "generalized_quaternion";
    case SylowType::Other:
      break;
  }
  return "other";
}

std::map<std::uint64_t, SylowType> periodicity_report(const FiniteGroup& g) {
  std::map<std::uint64_t, SylowType> report;
  for (auto p : prime_divisors(g.order())) {
    const FiniteGroup sylow = sylow_subgroup(g, p).as_group();
    SylowType type = SylowType::Other;
    if (is_cyclic(sylow)) {
      type = SylowType::Cyclic;
    } else if (p == 2) {
      std::size_t involutions = 0;
      for (Elem a = 0; a < sylow.order(); ++a) involutions += sylow.element_order(a) == 2;
      if (involutions == 1 && sylow.order() >= 8 &&
          isomorphic(sylow, make_quaternion(sylow.order()), sylow.order())) {
        type = SylowType::GeneralizedQuaternion;
      }
    }
    report.emplace(p, type);
  }
  return report;
}

bool is_periodic(const std::map<std::uint64_t, SylowType>& report) {
  return std::none_of(report.begin(), report.end(),
                      [](const auto& kv) { return kv.second == SylowType::Other; });
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound) {
    throw BoundError("normal subgroup enumeration limited to order " + std::to_string(bound));
  }
  const auto classes = conjugacy_classes(g);
  std::set<std::vector<Elem>> seen;
  std::deque<std::vector<Elem>> queue;
  seen.insert({kIdentity});
  queue.push_back({kIdentity});
  std::vector<char> member;
  while (!queue.empty()) {
    const auto base = queue.front();
    queue.pop_front();
    for (const auto& cls : classes) {
      if (std::binary_search(base.begin(), base.end(), cls.front())) continue;
      std::vector<Elem> gens = base;
      gens.insert(gens.end(), cls.begin(), cls.end());
      auto elems = closure_elements(g, gens, member);
      std::sort(elems.begin(), elems.end());
      if (seen.insert(elems).second) queue.push_back(std::move(elems));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& e : seen) out.emplace_back(g, e);
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

Subgroup odd_core(const FiniteGroup& g) {
  const FiniteGroup sylow2 = sylow_subgroup(g, 2).as_group();
  if (!is_cyclic(sylow2)) throw PreconditionError("odd core requires a cyclic 2-Sylow subgroup");

  std::vector<Elem> current = whole_group(g).elements();
  while (current.size() % 2 == 0) {
    const auto h = current.size();
    // Left multiplication by x permutes h points in h/ord(x) cycles of length ord(x),
    // so its sign is (-1)^(h - h/ord(x)); with h even that is the parity of h/ord(x).
    std::vector<Elem> kernel;
    for (Elem x : current)
      if ((h / g.element_order(x)) % 2 == 0) kernel.push_back(x);
    if (kernel.size() * 2 != h) {
      throw PreconditionError("regular-representation sign is not surjective");
    }
    current = std::move(kernel);
  }
  Subgroup core(g, std::move(current));
  if (!core.is_normal()) throw std::logic_error("odd core is not normal");
  return core;
}

std::optional<Subgroup> odd_normal_subgroup(const FiniteGroup& g) {
  std::size_t odd_part = g.order();
  while (odd_part % 2 == 0) odd_part /= 2;
  std::vector<Elem> odd;
  for (Elem a = 0; a < g.order(); ++a)
    if (g.element_order(a) % 2 == 1) odd.push_back(a);
  if (odd.size() != odd_part) return std::nullopt;
  for (Elem a : odd)
    for (Elem b : odd)
      if (g.element_order(g.mul(a, b)) % 2 == 0) return std::nullopt;
  return Subgroup(g, std::move(odd));
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<char> member;
  closure_elements(g, gens, member);
  while (true) {
    std::optional<Elem> best;
    for (Elem a = 0; a < g.order(); ++a) {
      if (member[a]) continue;
      if (!best || g.element_order(a) > g.element_order(*best)) best = a;
    }
    if (!best) break;
    gens.push_back(*best);
    closure_elements(g, gens, member);
  }
  return gens;
}

namespace {

std::vector<std::size_t> order_profile(const FiniteGroup& g) {
  std::vector<std::size_t> v(g.order());
  for (Elem a = 0; a < g.order(); ++a) v[a] = g.element_order(a);
  std::sort(v.begin(), v.end());
  return v;
}

// Extends the generator assignment gens[0..k) -> images[0..k) to a map on
// <gens[0..k)>. Fails on inconsistency or non-injectivity.
bool extend_partial(const FiniteGroup& a, const FiniteGroup& b, std::span<const Elem> gens,
                    std::span<const Elem> images, std::vector<Elem>& map) {
  constexpr Elem kUnset = static_cast<Elem>(-1);
  map.assign(a.order(), kUnset);
  std::vector<char> used(b.order(), 0);
  std::vector<Elem> queue{kIdentity};
  map[kIdentity] = kIdentity;
  used[kIdentity] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = a.mul(x, gens[j]);
      const Elem fy = b.mul(map[x], images[j]);
      if (map[y] == kUnset) {
        if (used[fy]) return false;
        map[y] = fy;
        used[fy] = 1;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                  std::size_t bound) {
  if (a.order() > bound || b.order() > bound) {
    throw BoundError("isomorphism test limited to order " + std::to_string(bound));
  }
  if (a.order() != b.order()) return std::nullopt;
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  if (conjugacy_classes(a).size() != conjugacy_classes(b).size()) return std::nullopt;

  const auto gens = generating_set(a);
  std::vector<Elem> images;
  std::vector<Elem> map;
  std::vector<char> member;

  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) return extend_partial(a, b, gens, images, map);
    closure_elements(b, images, member);
    const auto prev_member = member;
    const auto want = a.element_order(gens[depth]);
    for (Elem c = 0; c < b.order(); ++c) {
      if (prev_member[c] || b.element_order(c) != want) continue;
      images.push_back(c);
      const std::span<const Elem> prefix(gens.data(), depth + 1);
      if (extend_partial(a, b, prefix, images, map) && search(depth + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return map;
}

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b, std::size_t bound) {
  return find_isomorphism(a, b, bound).has_value();
}

}  // namespace ssf
