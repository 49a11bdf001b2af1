#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "ssf/catalog.hpp"
#include "ssf/cohomology.hpp"
#include "ssf/errors.hpp"
#include "ssf/extension.hpp"
#include "ssf/group_algorithms.hpp"
#include "ssf/group_spec.hpp"

using namespace ssf;

namespace {

// |H^2| by enumerating every normalized function G x G -> Z2 and every
// normalized u : G -> Z2. Only feasible for |G| <= 4.
std::size_t brute_class_count(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const std::size_t free = (n - 1) * (n - 1);
  std::size_t cocycles = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
    auto f = [&](Elem a, Elem b) -> int {
      if (a == 0 || b == 0) return 0;
      return (mask >> ((a - 1) * (n - 1) + (b - 1))) & 1u;
    };
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          ok = ((f(a, b) + f(g.mul(a, b), c) + f(b, c) + f(a, g.mul(b, c))) % 2) == 0;
    cocycles += ok;
  }
  std::set<std::vector<int>> coboundaries;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    auto u = [&](Elem a) -> int { return a == 0 ? 0 : (mask >> (a - 1)) & 1u; };
    std::vector<int> d;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) d.push_back((u(a) + u(b) + u(g.mul(a, b))) % 2);
    coboundaries.insert(d);
  }
  return cocycles / coboundaries.size();
}

}  // namespace

TEST(CocycleSpace, Examples) {
  EXPECT_EQ(cocycle_space(make_group("C1")).classes.size(), 1u);
  EXPECT_EQ(cocycle_space(make_group("C2")).classes.size(), 2u);
  EXPECT_EQ(cocycle_space(make_group("C3")).classes.size(), 1u);
  EXPECT_EQ(cocycle_space(make_group("C4")).classes.size(), 2u);
  EXPECT_EQ(cocycle_space(make_group("Q8")).classes.size(), 4u);
  EXPECT_EQ(cocycle_space(make_group("C2xC2")).classes.size(), 8u);
}

TEST(CocycleSpace, CyclicCounts) {
  for (std::uint64_t n = 1; n <= 16; ++n)
    EXPECT_EQ(cocycle_space(make_cyclic(n)).classes.size(), n % 2 ? 1u : 2u) << n;
}

TEST(CocycleSpace, MatchesEnumeration) {
  for (const char* spec : {"C1", "C2", "C3", "C4", "C2xC2"}) {
    const auto g = make_group(spec);
    EXPECT_EQ(cocycle_space(g).classes.size(), brute_class_count(g)) << spec;
  }
}

TEST(CocycleSpace, Structure) {
  for (const auto& e : generate_catalog(24)) {
    SCOPED_TRACE(e.spec);
    const auto& g = e.group;
    const auto h2 = cocycle_space(g);
    // B inside Z: adding the coboundary basis to the cocycle span adds nothing.
    Gf2Subspace z(g.order() * g.order());
    for (const auto& c : h2.cocycle_basis) z.insert(c.bits());
    EXPECT_EQ(z.dim(), h2.cocycle_dim());
    for (const auto& b : h2.coboundary_basis) EXPECT_FALSE(z.insert(b.bits()));
    EXPECT_EQ(h2.coboundary_dim(), coboundary_space(g).dim());
    ASSERT_EQ(h2.classes.size(), std::size_t{1} << h2.h2_dim());
    EXPECT_TRUE(h2.classes.front().is_zero());
    for (std::size_t i = 0; i < h2.classes.size(); ++i) {
      const auto& cls = h2.classes[i];
      EXPECT_EQ(cls.index, i);
      EXPECT_EQ(h2.class_of(cls.representative), i);
      // Representatives are already reduced: lex-least in their coset.
      EXPECT_EQ(cls.coboundaries->reduce(cls.representative.bits()), cls.representative.bits());
      if (i > 0) EXPECT_TRUE(h2.classes[i - 1].representative.bits().lex_less(cls.representative.bits()));
    }
  }
}

TEST(CocycleSpace, ClassOfShiftedRepresentative) {
  const auto g = make_group("Q8");
  const auto h2 = cocycle_space(g);
  BitVector u(g.order());
  u.set(1);
  u.set(5);
  const auto delta = coboundary_of(g, u);
  for (const auto& cls : h2.classes) {
    const Cocycle2 shifted(g, cls.representative.bits() ^ delta);
    EXPECT_EQ(h2.class_of(shifted), cls.index);
    EXPECT_TRUE(cls.contains(shifted));
  }
}

TEST(CocycleSpace, Bound) {
  EXPECT_THROW(cocycle_space(make_group("C33")), BoundError);
  EXPECT_NO_THROW(cocycle_space(make_group("C32")));
  EXPECT_THROW(cocycle_space(make_group("C4"), 3), BoundError);
}

TEST(Cocycle2, Validation) {
  const auto g = make_group("C2");
  BitVector bad(4);
  bad.set(1);  // f(e, x) = 1 breaks normalization
  EXPECT_THROW(Cocycle2(g, bad), ValidationError);
  EXPECT_THROW(Cocycle2(g, BitVector(5)), ValidationError);
  const auto c3 = make_group("C3");
  BitVector nonclosed(9);
  nonclosed.set(1 * 3 + 1);  // f(x, x) = 1 alone violates the identity on C3
  EXPECT_THROW(Cocycle2(c3, nonclosed), ValidationError);
  BitVector ok(4);
  ok.set(3);
  EXPECT_TRUE(Cocycle2(g, ok)(1, 1));
}

TEST(Cocycle2, FileRoundTrip) {
  const auto g = make_group("Q8");
  for (const auto& cls : cocycle_space(g).classes) {
    std::stringstream s;
    write_cocycle(s, cls.representative);
    EXPECT_EQ(read_cocycle(s, g), cls.representative);
  }
  std::istringstream wrong_order("3\n000\n000\n000\n");
  EXPECT_THROW(read_cocycle(wrong_order, make_group("C2")), Error);
  std::istringstream junk("2\n0x\n00\n");
  EXPECT_THROW(read_cocycle(junk, make_group("C2")), Error);
}

TEST(CocycleSpace, CohomologousTotalsAreIsomorphic) {
  const auto g = make_group("C3xC4");
  const auto h2 = cocycle_space(g);
  BitVector u(g.order());
  u.set(2);
  u.set(7);
  u.set(11);
  const auto delta = coboundary_of(g, u);
  for (const auto& cls : h2.classes) {
    const Cocycle2 shifted(g, cls.representative.bits() ^ delta);
    EXPECT_TRUE(isomorphic(build_extension(g, cls.representative).total(),
                           build_extension(g, shifted).total()));
  }
}
