#include "ssf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "ssf/catalog.hpp"
#include "ssf/cohomology.hpp"
#include "ssf/errors.hpp"
#include "ssf/extension.hpp"
#include "ssf/group_algorithms.hpp"
#include "ssf/group_spec.hpp"
#include "ssf/spaceform.hpp"

namespace ssf {

namespace {

// Per-item outcome; items are merged in index order so results do not depend on scheduling.
struct ItemResult {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

template <class Item>
void run_items(SuiteResult& out, const std::vector<Item>& items,
               const std::function<void(const Item&, ItemResult&)>& check,
               const std::function<std::string(const Item&)>& name) {
  std::vector<ItemResult> results(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    try {
      check(items[i], results[i]);
    } catch (const std::exception& e) {
      results[i].failures.push_back(std::string("exception: ") + e.what());
    }
  });
  out.groups += items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    out.checks += results[i].checks;
    for (const auto& f : results[i].failures) out.failures.push_back(name(items[i]) + ": " + f);
  }
}

std::vector<CatalogEntry> catalog_where(std::size_t max_order,
                                        const std::function<bool(const CatalogEntry&)>& keep) {
  std::vector<CatalogEntry> out;
  for (auto& e : generate_catalog(max_order))
    if (keep(e)) out.push_back(std::move(e));
  return out;
}

std::string entry_name(const CatalogEntry& e) { return e.spec; }

void odd_core_suite(SuiteResult& out, std::size_t max_order) {
  const auto groups = catalog_where(std::min<std::size_t>(max_order, 48), [](const auto& e) {
    return e.has_tag("cyclic_sylow2");
  });
  run_items<CatalogEntry>(
      out, groups,
      [](const CatalogEntry& e, ItemResult& r) {
        std::size_t odd = e.group.order();
        while (odd % 2 == 0) odd /= 2;
        const auto core = odd_core(e.group);
        r.expect(core.order() == odd, "odd core has order " + std::to_string(core.order()));
        std::vector<Subgroup> odd_normals;
        for (auto& n : normal_subgroups(e.group))
          if (n.order() == odd) odd_normals.push_back(std::move(n));
        r.expect(odd_normals.size() == 1,
                 std::to_string(odd_normals.size()) + " normal subgroups of order " +
                     std::to_string(odd));
        r.expect(!odd_normals.empty() && odd_normals.front() == core,
                 "odd core differs from the enumerated normal subgroup");
      },
      entry_name);
}

void sylow_restriction_suite(SuiteResult& out, std::size_t max_order) {
  const auto groups = catalog_where(std::min<std::size_t>(max_order, 24), [](const auto& e) {
    return e.has_tag("cyclic_sylow2");
  });
  run_items<CatalogEntry>(
      out, groups,
      [](const CatalogEntry& e, ItemResult& r) {
        const auto h2 = cocycle_space(e.group);
        const auto sylow = sylow_subgroup(e.group, 2);
        const auto sylow_group = sylow.as_group();
        for (const auto& cls : h2.classes) {
          const bool global = is_split(e.group, cls.representative);
          const bool local = is_split(sylow_group, restrict_cocycle(cls.representative, sylow));
          r.expect(global == local, "class " + std::to_string(cls.index) +
                                        ": global split " + std::to_string(global) +
                                        " vs Sylow split " + std::to_string(local));
        }
      },
      entry_name);
}

void odd_lift_suite(SuiteResult& out, std::size_t max_order) {
  const auto groups = catalog_where(std::min<std::size_t>(max_order, 24), [](const auto& e) {
    return e.has_tag("cyclic_sylow2");
  });
  run_items<CatalogEntry>(
      out, groups,
      [](const CatalogEntry& e, ItemResult& r) {
        const auto h2 = cocycle_space(e.group);
        const auto core = odd_core(e.group);
        for (const auto& cls : h2.classes) {
          const auto ext = build_extension(e.group, cls.representative);
          const auto lifted = lift_odd_normal(ext);
          const auto tag = "class " + std::to_string(cls.index);
          r.expect(lifted.order() == core.order(), tag + ": lifted order differs");
          r.expect(lifted.is_normal(), tag + ": lifted subgroup not normal");
          std::vector<Elem> image;
          for (Elem x : lifted.elements()) image.push_back(ExtensionGroup::project(x));
          std::sort(image.begin(), image.end());
          r.expect(image == core.elements(), tag + ": projection is not onto the odd core");
          bool hom = true;
          for (Elem a : lifted.elements())
            for (Elem b : lifted.elements())
              hom = hom && ExtensionGroup::project(ext.total().mul(a, b)) ==
                               e.group.mul(ExtensionGroup::project(a), ExtensionGroup::project(b));
          r.expect(hom, tag + ": projection is not a homomorphism");
        }
      },
      entry_name);
}

void splitting_agreement_suite(SuiteResult& out, std::size_t max_order) {
  const auto groups =
      catalog_where(std::min<std::size_t>(max_order, 24), [](const auto&) { return true; });
  run_items<CatalogEntry>(
      out, groups,
      [](const CatalogEntry& e, ItemResult& r) {
        const auto h2 = cocycle_space(e.group);
        const auto trivial_ext = direct_product(make_cyclic(2), e.group);
        for (const auto& cls : h2.classes) {
          const auto ext = build_extension(e.group, cls.representative);
          const bool by_coboundary = split_by_coboundary(e.group, cls.representative);
          const bool by_complement = split_by_complement(ext);
          const bool by_iso = isomorphic(ext.total(), trivial_ext);
          r.expect(by_coboundary == by_complement && by_complement == by_iso,
                   "class " + std::to_string(cls.index) + " splitting tests disagree");
          r.expect(by_coboundary == cls.is_zero(),
                   "class " + std::to_string(cls.index) + " split iff zero class");
        }
      },
      entry_name);
}

void quaternion_doubling_suite(SuiteResult& out, std::size_t max_order) {
  std::vector<std::string> specs;
  for (std::size_t q = 8; q <= std::min<std::size_t>(max_order, 32); q *= 2) {
    specs.push_back("Q" + std::to_string(q));
  }
  run_items<std::string>(
      out, specs,
      [](const std::string& spec, ItemResult& r) {
        const auto g = make_group(spec);
        const auto h2 = cocycle_space(g);
        for (const auto& cls : h2.classes) {
          const auto profile = preimage_order_profile(build_extension(g, cls.representative));
          bool undoubled = false;
          for (Elem a = 1; a < g.order(); ++a) undoubled |= profile[a].first == g.element_order(a);
          r.expect(undoubled, "class " + std::to_string(cls.index) +
                                  " doubles the order of every nontrivial element");
        }
      },
      [](const std::string& s) { return s; });
}

void quaternion_remark_suite(SuiteResult& out, std::size_t max_order) {
  if (max_order < 8) return;
  const auto g = make_group("Q8");
  const auto c4c4 = make_group("C4:C4@r3");
  const auto h2 = cocycle_space(g);
  std::size_t found = 0;
  ++out.groups;
  for (const auto& cls : h2.classes) {
    const auto ext = build_extension(g, cls.representative);
    if (is_split(g, cls.representative)) continue;
    bool cyclic_split = true;
    for (Elem a = 0; a < g.order(); ++a) {
      const Elem gen[] = {a};
      const auto c = subgroup_closure(g, gen);
      const bool by_order = splits_on_cyclic(ext, a);
      const bool by_restriction = is_split(c.as_group(), restrict_cocycle(cls.representative, c));
      ++out.checks;
      if (by_order != by_restriction) {
        out.failures.push_back("cyclic splitting tests disagree on element " + g.label(a));
      }
      cyclic_split = cyclic_split && by_restriction;
    }
    ++out.checks;
    if (cyclic_split && isomorphic(ext.total(), c4c4)) ++found;
  }
  ++out.checks;
  if (found == 0) {
    out.failures.push_back("no non-split class on Q8 splits on all cyclic subgroups with total C4:C4");
  }
  out.description += " (" + std::to_string(found) + " such class" + (found == 1 ? "" : "es") + ")";
}

void h2_cyclic_suite(SuiteResult& out, std::size_t max_order) {
  std::vector<std::size_t> orders;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_order, 16); ++n) orders.push_back(n);
  run_items<std::size_t>(
      out, orders,
      [](std::size_t n, ItemResult& r) {
        const auto g = make_cyclic(n);
        const auto h2 = cocycle_space(g);
        const std::size_t want = n % 2 == 0 ? 2 : 1;
        r.expect(h2.classes.size() == want,
                 std::to_string(h2.classes.size()) + " classes, expected " + std::to_string(want));
        if (n == 2 || n == 4) {
          const auto total = build_extension(g, h2.classes.back().representative).total();
          r.expect(isomorphic(total, make_cyclic(2 * n)),
                   "nonzero class total is not C" + std::to_string(2 * n));
        }
      },
      [](std::size_t n) { return "C" + std::to_string(n); });
}

struct SweepInstance {
  int n;
  std::size_t entry;
  std::optional<bool> alpha;
};

void main_sweep_suite(SuiteResult& out, std::size_t max_order) {
  const auto groups =
      catalog_where(std::min<std::size_t>(max_order, 32), [](const auto& e) {
        return e.group.order() > 1;
      });
  // H^2 is shared by every odd dimension.
  std::vector<std::optional<H2Data>> h2(groups.size());
  parallel_for(groups.size(), [&](std::size_t i) {
    if (groups[i].has_tag("periodic")) h2[i] = cocycle_space(groups[i].group);
  });

  std::vector<SweepInstance> instances;
  for (int n = 5; n <= 15; ++n) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      SpaceFormInstance inst(n, groups[i].group);
      if (!free_action_necessary(inst).pass) continue;
      const auto psc = psc_exists(inst);
      if (psc == Psc::Yes) instances.push_back({n, i, std::nullopt});
      if (psc == Psc::NeedsAlpha) instances.push_back({n, i, true});
    }
  }
  run_items<SweepInstance>(
      out, instances,
      [&](const SweepInstance& s, ItemResult& r) {
        const auto& g = groups[s.entry].group;
        SpaceFormInstance inst(s.n, g, s.alpha);
        const auto v = inst.odd() ? classify(inst, *h2[s.entry]) : classify(inst);
        r.expect(v.outcome == Outcome::InfinitelyManyComponents,
                 std::string("outcome ") + to_string(v.outcome));
        if (inst.odd()) {
          const auto want = inst.m() % 2 == 0 ? Theorem::OddConditionA : Theorem::OddConditionB;
          r.expect(v.theorem == want, "wrong theorem");
          const auto classes = consistent_extension_classes(inst, *h2[s.entry]);
          r.expect(!classes.empty(), "no consistent extension class");
          r.expect(v.witnesses.size() == classes.size(), "witness count differs from classes");
          for (std::size_t i = 0; i < std::min(classes.size(), v.witnesses.size()); ++i) {
            const auto ext = build_extension(g, classes[i].representative);
            r.expect(verify_bg2_witness(ext, inst.m(), v.witnesses[i].element),
                     "witness for class " + std::to_string(classes[i].index) + " fails recheck");
          }
        } else {
          r.expect(v.theorem == Theorem::EvenPin, "wrong theorem");
          r.expect(bg3_applicable(inst).applicable, "Pin structure missing");
        }
      },
      [&](const SweepInstance& s) {
        return "n=" + std::to_string(s.n) + " " + groups[s.entry].spec +
               (s.alpha ? " (alpha vanishes)" : "");
      });
}

void rpn_table_suite(SuiteResult& out, std::size_t) {
  std::vector<int> dims;
  for (int n = 2; n <= 30; n += 2) dims.push_back(n);
  run_items<int>(
      out, dims,
      [](int n, ItemResult& r) {
        const auto d = rpn_characteristic(n);
        r.expect(d.w1_nonzero, "w1 != a");
        r.expect(d.w2_nonzero == ((n * (n + 1) / 2) % 2 == 1), "w2 mismatch");
        r.expect(d.pin_plus == !d.w2_nonzero, "Pin+ criterion");
        r.expect(d.pin_minus == (d.w2_nonzero == d.w1_nonzero), "Pin- criterion");
        if (n >= 6) {
          const int m = n / 2;
          const auto want = m % 2 == 0 ? d.pin_plus : d.pin_minus;
          r.expect(want == true, "Pin^eps with eps = sign (-1)^m missing");
          const auto bg3 = bg3_applicable(SpaceFormInstance(n, make_cyclic(2)));
          r.expect(bg3.applicable && bg3.epsilon == (m % 2 == 0 ? '+' : '-'),
                   "even-dimensional criterion disagrees");
        }
      },
      [](int n) { return "n=" + std::to_string(n); });
}

void negative_gates_suite(SuiteResult& out, std::size_t) {
  struct Gate {
    int n;
    std::string spec;
    std::optional<bool> alpha;
    Outcome want;
  };
  const std::vector<Gate> gates{
      {9, "Q8", std::nullopt, Outcome::NotASpaceFormGroup},
      {9, "C3", false, Outcome::NoPscMetric},
      {9, "C3", std::nullopt, Outcome::NeedsAlphaInput},
      {4, "C2", std::nullopt, Outcome::DimensionOutOfScope},
  };
  run_items<Gate>(
      out, gates,
      [](const Gate& g, ItemResult& r) {
        const auto v = classify(SpaceFormInstance(g.n, make_group(g.spec), g.alpha));
        r.expect(v.outcome == g.want, std::string("got ") + to_string(v.outcome));
      },
      [](const Gate& g) { return "n=" + std::to_string(g.n) + " " + g.spec; });
}

struct SuiteDef {
  const char* name;
  const char* description;
  void (*run)(SuiteResult&, std::size_t);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs{
      {"odd-core", "odd core equals the unique odd normal subgroup (order <= 48)", odd_core_suite},
      {"sylow-restriction", "splitting iff splitting on a 2-Sylow subgroup (order <= 24)",
       sylow_restriction_suite},
      {"odd-lift", "odd normal subgroup lifts isomorphically to every extension (order <= 24)",
       odd_lift_suite},
      {"splitting-agreement", "coboundary, complement and C2 x G tests agree (order <= 24)",
       splitting_agreement_suite},
      {"quaternion-doubling", "no class on Q8, Q16, Q32 doubles every element order",
       quaternion_doubling_suite},
      {"quaternion-remark", "Q8 class split on cyclic subgroups, non-split, total C4:C4",
       quaternion_remark_suite},
      {"h2-cyclic", "|H^2(C_n)| is 2 for even n, 1 for odd n (n <= 16)", h2_cyclic_suite},
      {"main-sweep", "every admissible (n, G), 5 <= n <= 15, |G| <= 32, has infinitely many "
                     "components",
       main_sweep_suite},
      {"rpn-table", "Stiefel-Whitney and Pin data of RP^n, even n <= 30", rpn_table_suite},
      {"negative-gates", "out-of-scope and obstructed instances", negative_gates_suite},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, std::size_t max_order) {
  if (max_order > kDefaultCatalogBound) {
    throw BoundError("verification limited to order " + std::to_string(kDefaultCatalogBound));
  }
  for (const auto& def : suites()) {
    if (name != def.name) continue;
    SuiteResult out;
    out.name = def.name;
    out.description = def.description;
    const auto start = std::chrono::steady_clock::now();
    try {
      def.run(out, max_order);
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.pass = out.failures.empty();
    return out;
  }
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace ssf
