#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace annsub;
using support::elems_of;
using support::model_of;

namespace {

oracle::Graph as_oracle(const AnnGraph& g, const SubmoduleLattice& L) {
  oracle::Graph out;
  for (auto v : g.vertices) out.vertices.push_back(elems_of(L, v));
  for (auto [i, j] : g.edges()) out.edges.insert(std::minmax(out.vertices[i], out.vertices[j]));
  return out;
}

std::set<oracle::Elems> vertex_set(const oracle::Graph& g) { return {g.vertices.begin(), g.vertices.end()}; }

std::vector<std::vector<bool>> matrix(const AnnGraph& g) {
  std::vector<std::vector<bool>> adj(g.vertex_count(), std::vector<bool>(g.vertex_count()));
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = 0; j < g.vertex_count(); ++j) adj[i][j] = g.adjacent(i, j);
  return adj;
}

AnnGraph random_graph(std::mt19937& rng, std::size_t n, double p) {
  AnnGraph g;
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(static_cast<SubmoduleId>(i));
  g.adjacency.assign(n, Bitset(n));
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) {
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
      }
  return g;
}

}  // namespace

TEST(Graph, MatchesLiteralDefinitions) {
  for (auto& inst : support::small_instances()) {
    if (inst.module == "2,5") continue;
    auto m = support::module_of(inst);
    auto L = SubmoduleLattice::enumerate(m);
    auto model = model_of(m);
    auto ag = as_oracle(build_ag(L), L);
    auto expected = oracle::ag(model);
    EXPECT_EQ(vertex_set(ag), vertex_set(expected)) << inst.ring << " " << inst.module;
    EXPECT_EQ(ag.edges, expected.edges) << inst.ring << " " << inst.module;
    auto star = as_oracle(build_ag_star(L), L);
    auto expected_star = oracle::ag_star(model);
    EXPECT_EQ(vertex_set(star), vertex_set(expected_star)) << inst.ring << " " << inst.module;
    EXPECT_EQ(star.edges, expected_star.edges) << inst.ring << " " << inst.module;
    // AG(M)* is an induced subgraph of AG(M) and never contains M.
    for (auto& v : star.vertices) EXPECT_TRUE(vertex_set(ag).contains(v));
    EXPECT_FALSE(build_ag_star(L).position_of(L.whole()).has_value());
    EXPECT_EQ(build_ag(L).position_of(L.whole()).has_value(), whole_is_vertex_by_colon(L));
  }
}

TEST(Graph, TwoSimpleSummandsGiveOneEdge) {
  auto L = SubmoduleLattice::enumerate(ModuleSpec::parse(RingSpec::parse("Z12"), "2,3"));
  auto g = build_ag(L);
  ASSERT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(L.label(g.vertices[0]), "<(1,0)>");
  EXPECT_EQ(L.label(g.vertices[1]), "<(0,1)>");
  EXPECT_EQ(g.edge_count(), 1u);
  auto a = analyze(g);
  EXPECT_TRUE(a.star);
  EXPECT_TRUE(a.complete);
}

TEST(Graph, Z3PlusZ8OverZ48UnderTheProductDefinition) {
  // Brute force under NK = (N:M)(K:M)M: six vertices, seven edges, not a star.
  auto m = ModuleSpec::parse(RingSpec::parse("Z48"), "3,8");
  auto L = SubmoduleLattice::enumerate(m);
  auto g = build_ag(L);
  auto expected = oracle::ag(model_of(m));
  EXPECT_EQ(vertex_set(as_oracle(g, L)), vertex_set(expected));
  std::vector<std::string> labels;
  for (auto v : g.vertices) labels.push_back(L.label(v));
  EXPECT_EQ(labels, (std::vector<std::string>{"<(0,4)>", "<(1,0)>", "<(0,2)>", "<(0,4),(1,0)>", "<(0,1)>",
                                              "<(0,2),(1,0)>"}));
  EXPECT_EQ(g.edge_count(), 7u);
  auto a = analyze(g);
  EXPECT_FALSE(a.star);
  EXPECT_EQ(a.clique_number, 3u);
  EXPECT_EQ(a.chromatic_number, 3u);
  // Z3 + 0 is still adjacent to the three submodules of 0 + Z8.
  auto z3 = *g.position_of(L.cyclic(ModuleElement{8}));
  for (auto leaf : {"<(0,4)>", "<(0,2)>", "<(0,1)>"}) {
    std::size_t pos = 0;
    while (L.label(g.vertices[pos]) != leaf) ++pos;
    EXPECT_TRUE(g.adjacent(z3, pos)) << leaf;
  }
  // The leaves 0 + 2Z8 and 0 + 4Z8 multiply to zero: colons 6Z48 and 12Z48, 72 = 24 mod 48.
  EXPECT_EQ(L.product(3, 1), L.zero());
}

TEST(Graph, RegularModulesAreAnnihilatingIdealGraphs) {
  for (std::uint32_t n = 2; n <= 64; ++n) {
    RingSpec r({n});
    auto L = SubmoduleLattice::enumerate(ModuleSpec::regular(r));
    auto g = build_ag(L);
    // Ideals dZn, d | n: vertex iff nonzero with nonzero annihilator; edge iff product zero.
    std::set<std::uint32_t> expected;
    for (std::uint32_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      bool annihilated = false;
      for (std::uint32_t x = 1; x < n && !annihilated; ++x) annihilated = d * x % n == 0;
      if (annihilated) expected.insert(d);
    }
    std::set<std::uint32_t> got;
    for (auto v : g.vertices) got.insert(L[v].elements.find_next(1));  // smallest nonzero element = d
    EXPECT_EQ(got, expected) << n;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
        auto d = L[g.vertices[i]].elements.find_next(1), e = L[g.vertices[j]].elements.find_next(1);
        EXPECT_EQ(g.adjacent(i, j), (d * e) % n == 0) << n << ": " << d << "," << e;
      }
  }
}

TEST(Analysis, CliqueAndChromaticMatchExhaustiveSearch) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 9;
    double p = 0.2 + 0.6 * (trial % 7) / 6.0;
    auto g = random_graph(rng, n, p);
    auto a = analyze(g);
    auto adj = matrix(g);
    ASSERT_TRUE(a.exact());
    EXPECT_EQ(*a.clique_number, oracle::clique_number(adj)) << trial;
    EXPECT_EQ(*a.chromatic_number, oracle::chromatic_number(adj)) << trial;
    EXPECT_TRUE(is_clique(g, a.clique));
    EXPECT_EQ(a.clique.size(), *a.clique_number);
    EXPECT_TRUE(is_proper_coloring(g, a.coloring));
    std::set<std::size_t> used(a.coloring.begin(), a.coloring.end());
    EXPECT_EQ(used.size(), *a.chromatic_number);
  }
}

TEST(Analysis, LargerRandomGraphsStayConsistent) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(rng, 20 + trial % 30, 0.3 + 0.1 * (trial % 5));
    auto a = analyze(g);
    ASSERT_TRUE(a.exact());
    EXPECT_TRUE(is_clique(g, a.clique));
    EXPECT_TRUE(is_proper_coloring(g, a.coloring));
    EXPECT_GE(*a.chromatic_number, *a.clique_number);
  }
}

TEST(Analysis, BoundsAboveTheExactCap) {
  std::mt19937 rng(99);
  auto g = random_graph(rng, 40, 0.5);
  auto a = analyze(g, {10});
  EXPECT_LE(a.clique_lower, a.clique_upper);
  EXPECT_LE(a.chromatic_lower, a.chromatic_upper);
  EXPECT_TRUE(is_clique(g, a.clique));
  EXPECT_TRUE(is_proper_coloring(g, a.coloring));
  auto exact = analyze(g);
  EXPECT_GE(*exact.clique_number, a.clique_lower);
  EXPECT_LE(*exact.clique_number, a.clique_upper);
  EXPECT_GE(*exact.chromatic_number, a.chromatic_lower);
  EXPECT_LE(*exact.chromatic_number, a.chromatic_upper);
}

TEST(Analysis, ShapesAndDistances) {
  auto path = [](std::size_t n) {
    AnnGraph g;
    for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(static_cast<SubmoduleId>(i));
    g.adjacency.assign(n, Bitset(n));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      g.adjacency[i].set(i + 1);
      g.adjacency[i + 1].set(i);
    }
    return g;
  };
  auto p4 = analyze(path(4));
  EXPECT_TRUE(p4.connected);
  EXPECT_EQ(p4.diameter, 3u);
  EXPECT_TRUE(p4.bipartite);
  EXPECT_FALSE(p4.complete_bipartite);
  EXPECT_FALSE(p4.star);
  EXPECT_EQ(p4.chromatic_number, 2u);

  auto p3 = analyze(path(3));
  EXPECT_TRUE(p3.star);
  EXPECT_EQ(p3.center, 1u);
  EXPECT_TRUE(p3.complete_bipartite);

  auto single = analyze(path(1));
  EXPECT_FALSE(single.star);
  EXPECT_TRUE(is_star(single, true));
  EXPECT_EQ(single.chromatic_number, 1u);
  EXPECT_EQ(single.diameter, 0u);

  auto empty = analyze(path(0));
  EXPECT_EQ(empty.chromatic_number, 0u);
  EXPECT_EQ(empty.clique_number, 0u);

  AnnGraph two = path(2);
  two.adjacency.assign(2, Bitset(2));
  auto disconnected = analyze(two);
  EXPECT_FALSE(disconnected.connected);
  EXPECT_FALSE(disconnected.diameter.has_value());
}

TEST(Analysis, NearlyCompleteGraphBeyondCap) {
  // Z2^6: thousands of vertices; analysis must still finish with sound bounds.
  auto L = SubmoduleLattice::enumerate(ModuleSpec::parse(RingSpec::parse("Z4"), "4,2,2"));
  auto g = build_ag(L);
  auto a = analyze(g);
  EXPECT_TRUE(a.connected);
  ASSERT_TRUE(a.diameter.has_value());
  EXPECT_LE(*a.diameter, 3u);
  EXPECT_LE(a.chromatic_lower, a.chromatic_upper);
}
