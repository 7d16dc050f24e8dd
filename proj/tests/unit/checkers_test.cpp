// The checkers and oracles judge everything else, so they get their own
// tests against hand-written inputs.

#include <gtest/gtest.h>

#include "dot_check.hpp"
#include "oracles.hpp"
#include "xml_check.hpp"

#include "jmetrics/parser.hpp"

namespace {

using namespace jmtest;

TEST(DotCheck, AcceptsNodesEdgesAndClusters) {
  const auto s = check_dot(R"(digraph g {
    graph [rankdir=LR];
    node [shape=box, fontname="Helvetica"];
    subgraph cluster_0 { label="p"; "a" [label="A"]; b; }
    "a" -> b -> "c d" [style=dotted];
    // comment
    e;
  })");
  ASSERT_TRUE(s.ok) << s.error;
  EXPECT_TRUE(s.directed);
  EXPECT_EQ(s.name, "g");
  EXPECT_EQ(s.nodes, (std::vector<std::string>{"a", "b", "e"}));
  ASSERT_EQ(s.edges.size(), 2u);
  EXPECT_EQ(s.edges[1], std::make_pair(std::string("b"), std::string("c d")));
  EXPECT_EQ(s.edge_attrs[0], "style=dotted");
  EXPECT_EQ(s.subgraphs, 1);
}

TEST(DotCheck, RejectsMalformedDocuments) {
  EXPECT_FALSE(check_dot("digraph { a -> }").ok);
  EXPECT_FALSE(check_dot("digraph { a -> b ").ok);
  EXPECT_FALSE(check_dot("graph { a -> b }").ok);
  EXPECT_FALSE(check_dot("digraph { \"open }").ok);
  EXPECT_FALSE(check_dot("digraph { a [label] }").ok);
  EXPECT_FALSE(check_dot("digraph { } extra").ok);
  EXPECT_FALSE(check_dot("tree { }").ok);
  EXPECT_TRUE(check_dot("digraph packages {\n}\n").ok);
}

TEST(XmlCheck, CollectsElementsAndDecodesEntities) {
  const auto s = check_xml(R"(<?xml version="1.0"?>
<svg a="1"><!-- c --><rect class="bar x" title="a &amp; b"/><g><text>1 &lt; 2&#33;</text></g></svg>
)");
  ASSERT_TRUE(s.ok) << s.error;
  ASSERT_EQ(s.elements.size(), 4u);
  EXPECT_EQ(s.find("rect")[0]->attrs.at("title"), "a & b");
  EXPECT_EQ(s.find("text")[0]->text, "1 < 2!");
  EXPECT_EQ(s.find("text")[0]->depth, 2);
  EXPECT_EQ(s.find_with_class("rect", "bar").size(), 1u);
  EXPECT_TRUE(s.find_with_class("rect", "ba").empty());
}

TEST(XmlCheck, RejectsMalformedDocuments) {
  EXPECT_FALSE(check_xml("<a><b></a></b>").ok);
  EXPECT_FALSE(check_xml("<a x=1/>").ok);
  EXPECT_FALSE(check_xml("<a x=\"1\" x=\"2\"/>").ok);
  EXPECT_FALSE(check_xml("<a>&nbsp;</a>").ok);
  EXPECT_FALSE(check_xml("<a>1 < 2</a>").ok);
  EXPECT_FALSE(check_xml("<a/><b/>").ok);
  EXPECT_FALSE(check_xml("").ok);
  EXPECT_FALSE(check_xml("<a x=\"<\"/>").ok);
}

jmetrics::MethodDecl method(const std::string& body) {
  auto unit = jmetrics::parse_source("class T { int m(int a, int b) " + body + " }", "T.java");
  return unit.types.at(0).methods.at(0);
}

TEST(PathOracle, CountsNestedIfElsePaths) {
  EXPECT_EQ(enumerate_paths(method("{ }")).paths, 1);
  EXPECT_EQ(enumerate_paths(method("{ if (a > b) { a = 1; } else { a = 2; } return a; }")).paths, 2);
  const auto nested = enumerate_paths(method(
      "{ if (a > 0) { if (b > 0) return 1; else return 2; } else if (b < 0) { return 3; } return 4; }"));
  ASSERT_TRUE(nested.eligible) << nested.reason;
  EXPECT_EQ(nested.paths, 4);
  // A guard clause followed by another decision is still one path in.
  const auto guards = enumerate_paths(method("{ if (a == 0) throw e; if (b == 0) return 0; return a / b; }"));
  ASSERT_TRUE(guards.eligible) << guards.reason;
  EXPECT_EQ(guards.paths, 3);
}

TEST(PathOracle, RefusesBodiesOutsideItsSubset) {
  EXPECT_FALSE(enumerate_paths(method("{ if (a > 0) a = 1; if (b > 0) b = 1; return a; }")).eligible);
  EXPECT_FALSE(enumerate_paths(method("{ if (a > 0 && b > 0) return 1; return 0; }")).eligible);
  EXPECT_FALSE(enumerate_paths(method("{ return a > 0 ? a : b; }")).eligible);
  EXPECT_FALSE(enumerate_paths(method("{ while (a > 0) a--; return a; }")).eligible);
  const auto abstract = jmetrics::parse_source("abstract class T { abstract int m(); }", "T.java");
  EXPECT_FALSE(enumerate_paths(abstract.types[0].methods[0]).eligible);
}

TEST(PathOracle, EnforcesThePathLimit) {
  // Four nested levels on both sides: 16 paths.
  std::string body = "return 0;";
  for (int i = 0; i < 4; ++i) body = "if (a > " + std::to_string(i) + ") { " + body + " } else { " + body + " }";
  const auto count = enumerate_paths(method("{ " + body + " }"));
  EXPECT_EQ(count.paths, 16);
  EXPECT_FALSE(count.eligible);
  EXPECT_TRUE(enumerate_paths(method("{ " + body + " }"), 16).eligible);
}

TEST(DecisionTokens, CountsKeywordsAndOperators) {
  EXPECT_EQ(decision_tokens("{ }"), 0);
  EXPECT_EQ(decision_tokens("{ do { a++; } while (a < 3 && b); }"), 2);
  EXPECT_EQ(decision_tokens("{ switch (a) { case 1: case 2: break; default: } }"), 2);
  EXPECT_EQ(decision_tokens("{ String s = \"if ?\"; /* while */ x = a ? b : c; }"), 1);
}

TEST(InheritanceOracle, WalksChains) {
  const auto f = inheritance_oracle({"a", "b", "c", "d"}, {{"b", "a"}, {"c", "b"}, {"d", "a"}});
  EXPECT_EQ(f.depth.at("c"), 2);
  EXPECT_EQ(f.depth.at("a"), 0);
  EXPECT_EQ(f.children.at("a"), 2);
  EXPECT_EQ(f.longest_chain, 2);
  EXPECT_EQ(f.edge_count, 3);
}

}  // namespace
