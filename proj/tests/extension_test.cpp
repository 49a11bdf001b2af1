#include <gtest/gtest.h>

#include <numeric>

#include "ssf/catalog.hpp"
#include "ssf/cohomology.hpp"
#include "ssf/errors.hpp"
#include "ssf/extension.hpp"
#include "ssf/group_algorithms.hpp"
#include "ssf/group_spec.hpp"
#include "test_support.hpp"

using namespace ssf;

namespace {

Cocycle2 nonzero_class(const FiniteGroup& g) { return cocycle_space(g).classes.at(1).representative; }

void expect_extension_invariants(const ExtensionGroup& e) {
  const auto& t = e.total();
  const auto& g = e.base();
  ASSERT_EQ(t.order(), 2 * g.order());
  const Elem z = ExtensionGroup::z();
  EXPECT_EQ(t.element_order(z), 2u);
  for (Elem x = 0; x < t.order(); ++x) {
    EXPECT_EQ(t.mul(z, x), t.mul(x, z));
    EXPECT_EQ(ExtensionGroup::project(ExtensionGroup::lift(ExtensionGroup::project(x),
                                                           ExtensionGroup::sign_bit(x))),
              ExtensionGroup::project(x));
    for (Elem y = 0; y < t.order(); ++y)
      ASSERT_EQ(ExtensionGroup::project(t.mul(x, y)),
                g.mul(ExtensionGroup::project(x), ExtensionGroup::project(y)));
  }
  for (Elem x = 0; x < t.order(); ++x)
    EXPECT_EQ(ExtensionGroup::project(x) == kIdentity, x == kIdentity || x == z);
}

}  // namespace

TEST(BuildExtension, Examples) {
  for (const char* spec : {"C1", "C3", "Q8", "D3", "C3xC4"}) {
    const auto g = make_group(spec);
    EXPECT_TRUE(isomorphic(build_extension(g, Cocycle2::zero(g)).total(),
                           direct_product(make_cyclic(2), g)))
        << spec;
  }
  EXPECT_TRUE(isomorphic(build_extension(make_group("C2"), nonzero_class(make_group("C2"))).total(),
                         make_cyclic(4)));
  EXPECT_TRUE(isomorphic(build_extension(make_group("C4"), nonzero_class(make_group("C4"))).total(),
                         make_cyclic(8)));
}

TEST(BuildExtension, Invariants) {
  for (const auto& e : generate_catalog(16)) {
    SCOPED_TRACE(e.spec);
    for (const auto& cls : cocycle_space(e.group).classes)
      expect_extension_invariants(build_extension(e.group, cls.representative));
  }
}

TEST(BuildExtension, LayoutAndLabels) {
  const auto g = make_group("C2");
  const auto ext = build_extension(g, nonzero_class(g));
  EXPECT_EQ(ExtensionGroup::lift(1, false), 2u);
  EXPECT_EQ(ExtensionGroup::lift(1, true), 3u);
  EXPECT_EQ(ext.total().label(2), "(0,x)");
  EXPECT_EQ(ext.total().label(1), "(1,e)");
  EXPECT_EQ(ext.negate(2), 3u);
  EXPECT_EQ(ext.total().mul(2, 2), ExtensionGroup::z());
}

TEST(BuildExtension, RejectsForeignCocycle) {
  const auto c4 = make_group("C4");
  const auto other = fixtures::relabel(make_group("C2xC2"), 1).group;
  EXPECT_THROW(build_extension(other, Cocycle2::zero(c4)), ValidationError);
}

TEST(IsSplit, Examples) {
  const auto c4 = make_group("C4");
  EXPECT_TRUE(is_split(c4, Cocycle2::zero(c4)));
  BitVector u(4);
  u.set(1);
  u.set(2);
  const Cocycle2 delta(c4, coboundary_of(c4, u));
  EXPECT_FALSE(delta.is_zero());
  EXPECT_TRUE(is_split(c4, delta));
  const auto f = nonzero_class(c4);
  EXPECT_FALSE(is_split(c4, f));
  EXPECT_FALSE(split_by_coboundary(c4, f));
  EXPECT_FALSE(split_by_complement(build_extension(c4, f)));
}

TEST(IsSplit, ThreeWayAgreement) {
  for (const auto& e : generate_catalog(16)) {
    SCOPED_TRACE(e.spec);
    const auto trivial = direct_product(make_cyclic(2), e.group);
    for (const auto& cls : cocycle_space(e.group).classes) {
      const auto ext = build_extension(e.group, cls.representative);
      const bool split = is_split(e.group, cls.representative);
      EXPECT_EQ(split, cls.is_zero());
      EXPECT_EQ(split, split_by_complement(ext));
      EXPECT_EQ(split, isomorphic(ext.total(), trivial));
    }
  }
}

TEST(RestrictCocycle, Examples) {
  const auto c4 = make_group("C4");
  const Elem two[] = {2};
  const auto sub = subgroup_closure(c4, two);
  ASSERT_EQ(sub.order(), 2u);
  const auto zero = restrict_cocycle(Cocycle2::zero(c4), sub);
  EXPECT_TRUE(zero.is_zero());

  const auto f = restrict_cocycle(nonzero_class(c4), sub);
  EXPECT_EQ(f.group().order(), 2u);
  EXPECT_FALSE(is_split(f.group(), f));
  EXPECT_TRUE(isomorphic(build_extension(f.group(), f).total(), make_cyclic(4)));

  const auto triv = restrict_cocycle(nonzero_class(c4), trivial_subgroup(c4));
  EXPECT_TRUE(is_split(triv.group(), triv));
}

TEST(RestrictCocycle, AgreesWithLiftOrder) {
  for (const auto& e : generate_catalog(16)) {
    SCOPED_TRACE(e.spec);
    for (const auto& cls : cocycle_space(e.group).classes) {
      const auto ext = build_extension(e.group, cls.representative);
      for (Elem a = 0; a < e.group.order(); ++a) {
        const Elem gen[] = {a};
        const auto c = subgroup_closure(e.group, gen);
        const auto r = restrict_cocycle(cls.representative, c);
        EXPECT_EQ(splits_on_cyclic(ext, a), is_split(r.group(), r));
      }
    }
  }
}

TEST(PreimageProfile, Examples) {
  const auto c4 = make_group("C4");
  const auto profile = preimage_order_profile(build_extension(c4, nonzero_class(c4)));
  EXPECT_EQ(profile[0], (std::pair<std::size_t, std::size_t>{1, 2}));
  EXPECT_EQ(profile[1], (std::pair<std::size_t, std::size_t>{8, 8}));

  for (const char* spec : {"C15", "D5", "C3xQ8", "C7:C4@r6"}) {
    const auto g = make_group(spec);
    const auto split = preimage_order_profile(build_extension(g, Cocycle2::zero(g)));
    for (Elem a = 0; a < g.order(); ++a) {
      const auto d = g.element_order(a);
      EXPECT_EQ(split[a], (std::pair<std::size_t, std::size_t>{d, std::lcm<std::size_t>(2, d)}))
          << spec << " " << g.label(a);
    }
  }
}

TEST(LiftOddNormal, Examples) {
  const auto c2 = make_group("C2");
  for (const auto& cls : cocycle_space(c2).classes)
    EXPECT_EQ(lift_odd_normal(build_extension(c2, cls.representative)).order(), 1u);

  const auto d7 = make_group("D7");
  const auto rotations = odd_core(d7);
  for (const auto& cls : cocycle_space(d7).classes) {
    const auto n = lift_odd_normal(build_extension(d7, cls.representative));
    EXPECT_EQ(n.order(), 7u);
    EXPECT_TRUE(n.is_normal());
    std::vector<Elem> image;
    for (Elem x : n.elements()) image.push_back(ExtensionGroup::project(x));
    std::sort(image.begin(), image.end());
    EXPECT_EQ(image, rotations.elements());
  }

  const auto c15 = make_group("C15");
  const auto n = lift_odd_normal(build_extension(c15, Cocycle2::zero(c15)));
  EXPECT_TRUE(isomorphic(n.as_group(), c15));
}

TEST(LiftOddNormal, QuaternionBaseAndPrecondition) {
  const auto g = make_group("C3xQ8");
  for (const auto& cls : cocycle_space(g).classes) {
    const auto n = lift_odd_normal(build_extension(g, cls.representative));
    EXPECT_EQ(n.order(), 3u);
    for (Elem x : n.elements()) EXPECT_EQ(n.parent().element_order(x) % 2, 1u);
  }
  const auto a4 = fixtures::alternating4();
  EXPECT_THROW(lift_odd_normal(build_extension(a4, Cocycle2::zero(a4))), PreconditionError);
}
