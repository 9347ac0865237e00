#include <gtest/gtest.h>

#include <regex>

#include "support.hpp"

using namespace annsub;

namespace {

struct Fixture {
  SubmoduleLattice lattice;
  AnnGraph graph;
  GraphAnalysis analysis;
};

Fixture make(const char* ring, const char* module) {
  auto L = SubmoduleLattice::enumerate(ModuleSpec::parse(RingSpec::parse(ring), module));
  auto g = build_ag(L);
  auto a = analyze(g);
  return {std::move(L), std::move(g), std::move(a)};
}

}  // namespace

TEST(Export, DotListsNodesAndEdges) {
  auto f = make("Z12", "2,3");
  auto dot = to_dot(f.graph, f.lattice);
  EXPECT_EQ(dot,
            "graph AG {\n"
            "  n1 [label=\"<(1,0)>\"];\n"
            "  n2 [label=\"<(0,1)>\"];\n"
            "  n1 -- n2;\n"
            "}\n");
}

TEST(Export, DotLinesFollowTheGrammar) {
  auto f = make("Z48", "3,8");
  auto dot = to_dot(build_ag_star(f.lattice), f.lattice);
  std::regex node(R"(  n\d+ \[label="[^"]*"\];)"), edge(R"(  n\d+ -- n\d+;)");
  std::istringstream in(dot);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "graph AG_star {");
  while (std::getline(in, line) && line != "}") EXPECT_TRUE(std::regex_match(line, node) || std::regex_match(line, edge)) << line;
  EXPECT_EQ(line, "}");
}

TEST(Export, JsonSchema) {
  auto f = make("Z12", "2,3");
  auto doc = to_json(f.graph, f.lattice, &f.analysis);
  EXPECT_EQ(doc["schema"], "annsub.graph/1");
  EXPECT_EQ(doc["instance"]["ring"], "Z12");
  EXPECT_EQ(doc["instance"]["module"], "2,3");
  EXPECT_EQ(doc["variant"], "AG");
  ASSERT_EQ(doc["vertices"].size(), 2u);
  EXPECT_EQ(doc["vertices"][0]["id"], 1);
  EXPECT_EQ(doc["vertices"][0]["generators"], Json::array({"(1,0)"}));
  EXPECT_EQ(doc["vertices"][0]["elements"], Json::array({"(0,0)", "(1,0)"}));
  EXPECT_EQ(doc["vertices"][0]["colon"], "3Z12");
  EXPECT_EQ(doc["edges"], Json::array({Json::array({1, 2})}));
  for (auto key : {"connected", "diameter", "complete", "star", "center", "bipartite", "complete_bipartite", "clique",
                   "chromatic"})
    EXPECT_TRUE(doc["analysis"].contains(key)) << key;
  EXPECT_EQ(doc["analysis"]["star"], true);
  EXPECT_EQ(doc["analysis"]["chromatic"], 2);
  EXPECT_TRUE(doc["checks"].is_array());
}

TEST(Export, JsonIsDeterministic) {
  auto a = make("Z48", "3,8");
  auto b = make("Z48", "3,8");
  EXPECT_EQ(export_graph(a.graph, a.lattice, ExportFormat::json, &a.analysis),
            export_graph(b.graph, b.lattice, ExportFormat::json, &b.analysis));
}

TEST(Export, FormatNames) {
  EXPECT_EQ(parse_export_format("dot"), ExportFormat::dot);
  EXPECT_EQ(parse_export_format("json"), ExportFormat::json);
  EXPECT_THROW(parse_export_format("svg"), ParseError);
}
