#include <gtest/gtest.h>

#include "ssf/catalog.hpp"
#include "ssf/errors.hpp"
#include "ssf/group_spec.hpp"
#include "ssf/spaceform.hpp"

using namespace ssf;

namespace {

SpaceFormInstance inst(int n, const char* spec, std::optional<bool> alpha = std::nullopt) {
  return SpaceFormInstance(n, make_group(spec), alpha);
}

bool has_zero_class(const std::vector<CohomologyClass>& classes) {
  for (const auto& c : classes)
    if (c.is_zero()) return true;
  return false;
}

}  // namespace

TEST(SpaceFormInstance, HalfDimension) {
  EXPECT_EQ(inst(5, "C2").m(), 3);
  EXPECT_EQ(inst(7, "C2").m(), 4);
  EXPECT_EQ(inst(6, "C2").m(), 3);
  EXPECT_EQ(inst(8, "C2").m(), 4);
  EXPECT_THROW(inst(1, "C2"), PreconditionError);
}

TEST(FreeAction, Examples) {
  const auto even = free_action_necessary(inst(6, "Q8"));
  EXPECT_FALSE(even.pass);
  ASSERT_EQ(even.failures.size(), 1u);
  EXPECT_NE(even.failures[0].cite.find("Lefschetz"), std::string::npos);

  const auto q8 = free_action_necessary(inst(9, "Q8"));
  EXPECT_FALSE(q8.pass);
  ASSERT_EQ(q8.failures.size(), 1u);
  EXPECT_NE(q8.failures[0].cite.find("quaternion"), std::string::npos);

  EXPECT_TRUE(free_action_necessary(inst(7, "Q16")).pass);
  EXPECT_TRUE(free_action_necessary(inst(5, "C2")).pass);
  EXPECT_TRUE(free_action_necessary(inst(6, "C2")).pass);

  const auto d4 = free_action_necessary(inst(7, "C4:C2@r3"));
  EXPECT_FALSE(d4.pass);
  EXPECT_NE(d4.failures[0].cite.find("Cartan-Eilenberg"), std::string::npos);
}

TEST(HomotopyModel, Examples) {
  EXPECT_EQ(homotopy_model(inst(5, "C1")).kind, HomotopyModel::Kind::Sphere);
  EXPECT_EQ(homotopy_model(inst(8, "C1")).kind, HomotopyModel::Kind::Sphere);
  EXPECT_EQ(homotopy_model(inst(6, "C2")).kind, HomotopyModel::Kind::RealProjective);
  const auto lens = homotopy_model(inst(5, "C5"));
  EXPECT_EQ(lens, (HomotopyModel{HomotopyModel::Kind::Lens, 5, 3}));
  EXPECT_EQ(lens.str(), "lens(5, 3)");
  EXPECT_THROW(homotopy_model(inst(7, "Q8")), PreconditionError);
}

TEST(LensSpin, Examples) {
  EXPECT_FALSE(lens_spin(2, 5));
  EXPECT_TRUE(lens_spin(5, 3));
  EXPECT_TRUE(lens_spin(2, 2));
}

TEST(SpinStructure, Examples) {
  const auto c4 = spin_structure(inst(7, "C4"));
  EXPECT_TRUE(c4.orientable);
  EXPECT_TRUE(c4.spin);
  const auto c2 = spin_structure(inst(5, "C2"));
  EXPECT_TRUE(c2.orientable);
  EXPECT_FALSE(c2.spin);
  EXPECT_FALSE(spin_structure(inst(6, "C2")).orientable);
  EXPECT_TRUE(spin_structure(inst(7, "Q8")).quaternion_case_cited);
  EXPECT_FALSE(spin_structure(inst(7, "C8")).quaternion_case_cited);
  EXPECT_THROW(spin_structure(inst(9, "Q8")), PreconditionError);
}

TEST(SpinStructure, AgreesWithLensModel) {
  for (const auto& e : generate_catalog(32)) {
    if (!is_cyclic(e.group) || e.group.order() == 1) continue;
    for (int n = 5; n <= 15; n += 2) {
      const SpaceFormInstance i(n, e.group);
      const auto model = homotopy_model(i);
      ASSERT_EQ(model.kind, HomotopyModel::Kind::Lens);
      EXPECT_EQ(spin_structure(i).spin, lens_spin(model.p, model.m)) << e.spec << " n=" << n;
    }
  }
}

TEST(SpinStructure, CharacteristicInvariants) {
  for (const auto& e : generate_catalog(24)) {
    for (int n = 5; n <= 12; ++n) {
      const SpaceFormInstance i(n, e.group);
      if (!free_action_necessary(i).pass) continue;
      const auto d = spin_structure(i);
      EXPECT_EQ(d.orientable, !d.w1_nonzero);
      if (d.spin) EXPECT_TRUE(d.orientable && d.pin_plus.value_or(false));
    }
  }
}

TEST(RpnCharacteristic, Examples) {
  const auto six = rpn_characteristic(6);
  EXPECT_TRUE(six.w2_nonzero);
  EXPECT_EQ(six.pin_minus, true);
  EXPECT_EQ(six.pin_plus, false);
  const auto eight = rpn_characteristic(8);
  EXPECT_FALSE(eight.w2_nonzero);
  EXPECT_EQ(eight.pin_plus, true);
  EXPECT_EQ(eight.pin_minus, false);
  const auto two = rpn_characteristic(2);
  EXPECT_TRUE(two.w2_nonzero);
  EXPECT_EQ(two.pin_minus, true);
  EXPECT_EQ(two.w1_str(), "a");
  EXPECT_EQ(two.w2_str(), "a^2");
  EXPECT_THROW(rpn_characteristic(7), PreconditionError);
  EXPECT_THROW(rpn_characteristic(0), PreconditionError);
}

TEST(RpnCharacteristic, PinFlagsFollowClasses) {
  for (int n = 2; n <= 30; n += 2) {
    const auto d = rpn_characteristic(n);
    EXPECT_TRUE(d.w1_nonzero);
    EXPECT_FALSE(d.orientable);
    EXPECT_FALSE(d.spin);
    // pin+ iff w2 = 0, pin- iff w2 + w1^2 = 0 with w1^2 = a^2.
    EXPECT_EQ(*d.pin_plus, !d.w2_nonzero);
    EXPECT_EQ(*d.pin_minus, d.w2_nonzero);
  }
}

TEST(PscExists, Examples) {
  EXPECT_EQ(psc_exists(inst(7, "Q16")), Psc::Yes);
  EXPECT_EQ(psc_exists(inst(9, "C2")), Psc::Yes);
  EXPECT_EQ(psc_exists(inst(9, "C3", false)), Psc::No);
  EXPECT_EQ(psc_exists(inst(9, "C3", true)), Psc::Yes);
  EXPECT_EQ(psc_exists(inst(9, "C3")), Psc::NeedsAlpha);
  EXPECT_EQ(psc_exists(inst(10, "C1")), Psc::NeedsAlpha);
  EXPECT_EQ(psc_exists(inst(11, "C3")), Psc::Yes);
  EXPECT_THROW(psc_exists(inst(4, "C2")), PreconditionError);
  EXPECT_STREQ(to_string(Psc::NeedsAlpha), "needs_alpha");
}

TEST(ConsistentClasses, Examples) {
  const auto c2 = consistent_extension_classes(inst(5, "C2"));
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_TRUE(isomorphic(build_extension(make_group("C2"), c2[0].representative).total(),
                         make_cyclic(4)));
  for (const char* spec : {"C2", "C12", "Q8", "C3xQ8", "C7:C4@r6"})
    EXPECT_TRUE(has_zero_class(consistent_extension_classes(inst(7, spec)))) << spec;
  const auto c3 = consistent_extension_classes(inst(5, "C3"));
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_TRUE(c3[0].is_zero());
  EXPECT_THROW(consistent_extension_classes(inst(6, "C2")), PreconditionError);
}

TEST(ConsistentClasses, ZeroClassIffSpin) {
  for (const auto& e : generate_catalog(24)) {
    if (e.group.order() == 1 || !e.has_tag("cyclic_sylow2")) continue;
    for (int n : {5, 7, 9, 11}) {
      const SpaceFormInstance i(n, e.group);
      if (!free_action_necessary(i).pass) continue;
      const auto classes = consistent_extension_classes(i);
      EXPECT_FALSE(classes.empty());
      EXPECT_EQ(has_zero_class(classes), spin_structure(i).spin) << e.spec << " n=" << n;
    }
  }
}

TEST(Bg2Witness, Examples) {
  const auto q8 = make_group("Q8");
  const auto trivial = build_extension(q8, Cocycle2::zero(q8));
  const auto w = bg2_witness(trivial, 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(trivial.total().label(*w), "(0,x)");
  EXPECT_TRUE(verify_bg2_witness(trivial, 4, *w));

  const auto c2 = make_group("C2");
  const auto c4 = build_extension(c2, cocycle_space(c2).classes[1].representative);
  const auto g = bg2_witness(c4, 3);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(c4.total().element_order(*g), 4u);
  EXPECT_TRUE(verify_bg2_witness(c4, 3, *g));

  const auto c1 = make_group("C1");
  EXPECT_FALSE(bg2_witness(build_extension(c1, Cocycle2::zero(c1)), 4).has_value());
}

TEST(Bg2Witness, FirstQualifyingElement) {
  for (const char* spec : {"C2", "C6", "Q8", "Q16", "C3xQ8", "D5"}) {
    const auto g = make_group(spec);
    for (const auto& cls : cocycle_space(g).classes) {
      const auto e = build_extension(g, cls.representative);
      for (int m : {3, 4}) {
        const auto w = bg2_witness(e, m);
        for (Elem x = 0; x < (w ? *w : e.total().order()); ++x)
          EXPECT_FALSE(verify_bg2_witness(e, m, x)) << spec << " m=" << m;
        if (w) EXPECT_TRUE(verify_bg2_witness(e, m, *w));
      }
    }
  }
}

TEST(Bg3, Examples) {
  const auto six = bg3_applicable(inst(6, "C2"));
  EXPECT_TRUE(six.applicable);
  EXPECT_EQ(six.epsilon, '-');
  const auto eight = bg3_applicable(inst(8, "C2"));
  EXPECT_TRUE(eight.applicable);
  EXPECT_EQ(eight.epsilon, '+');
  EXPECT_FALSE(bg3_applicable(inst(6, "C3")).applicable);
  EXPECT_FALSE(bg3_applicable(inst(4, "C2")).applicable);
  EXPECT_FALSE(bg3_applicable(inst(7, "C2")).applicable);
}

TEST(Bg3, MatchesPinStructureForAllEvenDimensions) {
  for (int n = 6; n <= 30; n += 2) {
    const auto r = bg3_applicable(inst(n, "C2"));
    const auto d = rpn_characteristic(n);
    const bool want = (n / 2) % 2 == 0 ? *d.pin_plus : *d.pin_minus;
    EXPECT_EQ(r.applicable, want) << n;
  }
}

TEST(Classify, Examples) {
  const auto c2 = classify(inst(5, "C2"));
  EXPECT_EQ(c2.outcome, Outcome::InfinitelyManyComponents);
  EXPECT_EQ(c2.theorem, Theorem::OddConditionB);
  ASSERT_EQ(c2.witnesses.size(), 1u);
  const auto ext = build_extension(make_group("C2"),
                                   cocycle_space(make_group("C2")).classes[c2.witnesses[0].class_index]
                                       .representative);
  EXPECT_EQ(ext.total().element_order(c2.witnesses[0].element), 4u);

  const auto q16 = classify(inst(7, "Q16"));
  EXPECT_EQ(q16.outcome, Outcome::InfinitelyManyComponents);
  EXPECT_EQ(q16.theorem, Theorem::OddConditionA);
  EXPECT_EQ(q16.witnesses.size(), q16.classes_considered);

  const auto rp6 = classify(inst(6, "C2"));
  EXPECT_EQ(rp6.outcome, Outcome::InfinitelyManyComponents);
  EXPECT_EQ(rp6.theorem, Theorem::EvenPin);

  EXPECT_EQ(classify(inst(9, "Q8")).outcome, Outcome::NotASpaceFormGroup);
  EXPECT_EQ(classify(inst(9, "C3")).outcome, Outcome::NeedsAlphaInput);
  EXPECT_EQ(classify(inst(9, "C3", false)).outcome, Outcome::NoPscMetric);
  EXPECT_EQ(classify(inst(4, "C2")).outcome, Outcome::DimensionOutOfScope);
  EXPECT_EQ(classify(inst(7, "C1")).outcome, Outcome::SimplyConnectedOutOfScope);
  EXPECT_EQ(classify(inst(6, "C3")).outcome, Outcome::NotASpaceFormGroup);
  EXPECT_THROW(classify(inst(5, "C33")), BoundError);
  EXPECT_STREQ(to_string(Theorem::OddConditionA), "Thm3.1a");
}

TEST(Classify, EvenDimensionsWithC2) {
  for (int n = 6; n <= 14; n += 2) {
    const auto v = classify(inst(n, "C2"));
    EXPECT_EQ(v.outcome, Outcome::InfinitelyManyComponents) << n;
    EXPECT_EQ(v.theorem, Theorem::EvenPin) << n;
  }
}

TEST(Classify, TraceCarriesCitations) {
  const auto v = classify(inst(7, "C3xQ8"));
  ASSERT_FALSE(v.trace.empty());
  for (const auto& s : v.trace) {
    EXPECT_FALSE(s.step.empty());
    EXPECT_FALSE(s.cite.empty());
    EXPECT_FALSE(s.result.empty());
  }
}

TEST(Classify, DeterministicAndCacheTransparent) {
  const auto i = inst(11, "C5:C4@r2");
  const auto a = classify(i);
  const auto b = classify(i, cocycle_space(i.group));
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_EQ(a.trace, b.trace);
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t k = 0; k < a.witnesses.size(); ++k)
    EXPECT_EQ(a.witnesses[k].element, b.witnesses[k].element);
}
