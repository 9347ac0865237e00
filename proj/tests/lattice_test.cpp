#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace annsub;
using support::elems_of;
using support::model_of;

TEST(ModuleSpec, ParsesGroupsPerFactor) {
  auto r = RingSpec::parse("Z4xZ6");
  auto m = ModuleSpec::parse(r, "4,2;6");
  EXPECT_EQ(m.size(), 48u);
  EXPECT_EQ(m.to_string(), "4,2;6");
  EXPECT_EQ(ModuleSpec::parse(r, "1;3").to_string(), "1;3");
  EXPECT_EQ(ModuleSpec::parse(RingSpec::parse("Z12"), "1,2,3").to_string(), "2,3");
  EXPECT_THROW(ModuleSpec::parse(r, "4"), ParseError);
  EXPECT_THROW(ModuleSpec::parse(RingSpec::parse("Z12"), "2,5"), ParseError);
  EXPECT_THROW(ModuleSpec::parse(RingSpec::parse("Z12"), "1"), ParseError);
  EXPECT_THROW(ModuleSpec::parse(RingSpec::parse("Z12"), "0"), ParseError);
  EXPECT_THROW(ModuleSpec::parse(RingSpec::parse("Z12"), "a"), ParseError);
  EXPECT_THROW(ModuleSpec::parse(RingSpec::parse("Z2"), "2,2,2,2,2,2,2,2,2,2,2"), ResourceLimitError);
}

TEST(ModuleSpec, ActionMatchesCoordinates) {
  auto m = ModuleSpec::parse(RingSpec::parse("Z12"), "4,3");
  auto model = model_of(m);
  for (std::uint32_t r = 0; r < 12; ++r)
    for (std::uint32_t x = 0; x < m.size(); ++x) {
      EXPECT_EQ(m.act({r}, {x}).index, model.act(r, x));
      for (std::uint32_t y = 0; y < m.size(); ++y) EXPECT_EQ(m.add({x}, {y}).index, model.add(x, y));
    }
  EXPECT_EQ(m.element_to_string({1}), "(0,1)");
}

TEST(ModuleSpec, ZeroDivisorsAndAssociatedPrimes) {
  auto m = ModuleSpec::parse(RingSpec::parse("Z12"), "2,3");
  auto model = model_of(m);
  std::vector<RingElement> expected;
  for (std::uint32_t r = 0; r < 12; ++r)
    for (std::uint32_t x = 1; x < m.size(); ++x)
      if (model.act(r, x) == 0) {
        expected.push_back({r});
        break;
      }
  EXPECT_EQ(z_of_module(m), expected);
  auto a = ass(m);
  std::vector<std::string> names;
  for (auto& p : a) names.push_back(to_string(m.ring(), p));
  EXPECT_EQ(names, (std::vector<std::string>{"2Z12", "3Z12"}));
}

TEST(Lattice, CountsMatchClosureRecount) {
  struct Case {
    const char* ring;
    const char* module;
    std::size_t count;
  };
  for (auto c : std::vector<Case>{{"Z2", "2,2", 5}, {"Z4", "4,2", 8}, {"Z2", "2,2", 2 + 3},
                                  {"Z3", "3,3", 3 + 3}, {"Z5", "5,5", 5 + 3}}) {
    auto m = ModuleSpec::parse(RingSpec::parse(c.ring), c.module);
    auto L = SubmoduleLattice::enumerate(m);
    EXPECT_EQ(L.size(), c.count) << c.ring << " " << c.module;
    EXPECT_EQ(model_of(m).submodules().size(), c.count) << c.ring << " " << c.module;
  }
}

TEST(Lattice, SubmodulesMatchOracle) {
  for (auto& inst : support::small_instances()) {
    if (inst.module == "2,5") continue;
    auto m = support::module_of(inst);
    auto L = SubmoduleLattice::enumerate(m);
    auto model = model_of(m);
    std::set<oracle::Elems> expected;
    for (auto& s : model.submodules()) expected.insert(s);
    std::set<oracle::Elems> got;
    for (SubmoduleId id = 0; id < L.size(); ++id) got.insert(elems_of(L, id));
    EXPECT_EQ(got, expected) << inst.ring << " " << inst.module;
    EXPECT_EQ(L[L.zero()].size, 1u);
    EXPECT_EQ(L[L.whole()].size, m.size());
  }
}

TEST(Lattice, ColonAndProductMatchOracle) {
  for (auto& inst : support::small_instances()) {
    if (inst.module == "2,5") continue;
    auto m = support::module_of(inst);
    auto L = SubmoduleLattice::enumerate(m);
    auto model = model_of(m);
    for (SubmoduleId n = 0; n < L.size(); ++n) {
      auto en = elems_of(L, n);
      ASSERT_EQ(support::elems_of(m.ring(), L.colon(n)), model.colon(en)) << inst.ring << " " << inst.module;
      for (SubmoduleId k = 0; k < L.size(); ++k)
        ASSERT_EQ(elems_of(L, L.product(n, k)), model.product(en, elems_of(L, k)))
            << inst.ring << " " << inst.module << " " << L.label(n) << " * " << L.label(k);
    }
    EXPECT_EQ(support::elems_of(m.ring(), L.annihilator()), model.annihilator());
  }
}

TEST(Lattice, OrderSumAndIntersection) {
  auto m = ModuleSpec::parse(RingSpec::parse("Z4"), "4,2");
  auto L = SubmoduleLattice::enumerate(m);
  for (SubmoduleId a = 0; a < L.size(); ++a)
    for (SubmoduleId b = 0; b < L.size(); ++b) {
      auto ea = elems_of(L, a), eb = elems_of(L, b);
      EXPECT_EQ(L.leq(a, b), oracle::Model::subset(ea, eb));
      oracle::Elems meet;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(meet));
      EXPECT_EQ(elems_of(L, L.intersection(a, b)), meet);
      auto gens = ea;
      gens.insert(gens.end(), eb.begin(), eb.end());
      EXPECT_EQ(elems_of(L, L.sum(a, b)), model_of(m).close(gens));
    }
}

TEST(Lattice, LabelsUseGenerators) {
  auto m = ModuleSpec::parse(RingSpec::parse("Z12"), "2,3");
  auto L = SubmoduleLattice::enumerate(m);
  ASSERT_EQ(L.size(), 4u);
  EXPECT_EQ(L.label(L.zero()), "0");
  EXPECT_EQ(L.label(1), "<(1,0)>");
  EXPECT_EQ(L.label(2), "<(0,1)>");
}

TEST(Lattice, ResourceLimit) {
  auto m = ModuleSpec::parse(RingSpec::parse("Z2"), "2,2,2,2");
  EXPECT_NO_THROW(SubmoduleLattice::enumerate(m, 67));
  EXPECT_THROW(SubmoduleLattice::enumerate(m, 66), ResourceLimitError);
}

TEST(Lattice, KernelsAndScalarImages) {
  auto m = ModuleSpec::parse(RingSpec::parse("Z12"), "4,3");
  auto L = SubmoduleLattice::enumerate(m);
  auto model = model_of(m);
  for (std::uint32_t r = 0; r < 12; ++r) {
    oracle::Elems kernel, image;
    for (std::uint32_t x = 0; x < m.size(); ++x) {
      if (model.act(r, x) == 0) kernel.push_back(x);
      image.push_back(model.act(r, x));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    EXPECT_EQ(elems_of(L, L.kernel_of({r})), kernel);
    EXPECT_EQ(elems_of(L, L.scalar_image({r}, L.whole())), image);
  }
}

TEST(Lattice, IdempotentDecompositionSplitsSubmodulesAndProducts) {
  for (auto [ring, mod] : std::vector<std::pair<const char*, const char*>>{
           {"Z12", "12"}, {"Z12", "4,6"}, {"Z6", "2,2,3"}, {"Z2xZ4", "2;4,2"}, {"Z30", "6,5"}}) {
    auto m = ModuleSpec::parse(RingSpec::parse(ring), mod);
    auto L = SubmoduleLattice::enumerate(m);
    const auto& r = m.ring();
    for (auto e : idempotents(r)) {
      auto f = r.sub(r.one(), e);
      auto [em, fm] = decompose_by_idempotent(L, e);
      EXPECT_EQ(L.intersection(em, fm), L.zero());
      EXPECT_EQ(L.sum(em, fm), L.whole());
      for (SubmoduleId n = 0; n < L.size(); ++n) {
        auto n1 = L.intersection(n, em), n2 = L.intersection(n, fm);
        // N = N1 + N2, and (N:M) splits the same way.
        EXPECT_EQ(L.sum(n1, n2), n) << ring << " " << mod;
        EXPECT_EQ(L.scalar_image(e, n), n1);
        auto colon_parts = ideal_sum(ideal_product(r, principal_ideal(r, e), L.colon(n)),
                                     ideal_product(r, principal_ideal(r, f), L.colon(n)));
        EXPECT_EQ(colon_parts, L.colon(n));
        for (SubmoduleId k = 0; k < L.size(); ++k) {
          auto k1 = L.intersection(k, em), k2 = L.intersection(k, fm);
          auto nk = L.product(n, k);
          // NK = N1K1 + N2K2, each factor computed with the other summand filled in.
          EXPECT_EQ(L.scalar_image(e, nk), L.intersection(L.product(L.sum(n1, fm), L.sum(k1, fm)), em));
          EXPECT_EQ(L.scalar_image(f, nk), L.intersection(L.product(L.sum(n2, em), L.sum(k2, em)), fm));
        }
      }
    }
    EXPECT_THROW(decompose_by_idempotent(L, RingElement{2}), PreconditionError);
  }
}
