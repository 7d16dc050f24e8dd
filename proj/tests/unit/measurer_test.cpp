#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixture.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include "jmetrics/measurer.hpp"
#include "jmetrics/parser.hpp"

namespace {

using namespace jmetrics;

using ValueMap = std::map<std::pair<std::string, std::string>, double>;

ValueMap as_map(const std::vector<MetricValue>& values) {
  ValueMap out;
  for (const auto& v : values) out[{v.metric_id, v.subject_id}] = v.value;
  return out;
}

double value(const std::vector<MetricValue>& values, std::string_view metric, std::string_view subject) {
  for (const auto& v : values) {
    if (v.metric_id == metric && v.subject_id == subject) return v.value;
  }
  ADD_FAILURE() << "no value for " << metric << " / " << subject;
  return -1;
}

TEST(SizeMetrics, EmptyModel) {
  SemanticModel m;
  m.application.name = "none";
  const auto values = compute_size_metrics(m);
  const auto app = "app:none";
  EXPECT_EQ(value(values, "artifact_count", app), 0);
  EXPECT_EQ(value(values, "component_count", app), 0);
  EXPECT_EQ(value(values, "package_count", app), 0);
  EXPECT_EQ(value(values, "library_package_count", app), 0);
  EXPECT_EQ(value(values, "class_count", app), 0);
  EXPECT_EQ(values.size(), 5u);
}

TEST(SizeMetrics, FixtureMatchesHandCount) {
  const auto expected = jmtest::printshop_expected()["size"];
  const auto p = jmtest::model_from_directory(jmtest::printshop_dir());
  const auto values = compute_size_metrics(p.model);
  const auto app = application_id(p.model.application.name);
  for (const auto& [metric, n] : expected["application"].items()) {
    EXPECT_EQ(value(values, metric, app), n.get<double>()) << metric;
  }
  for (const auto& [pkg, metrics] : expected["packages"].items()) {
    for (const auto& [metric, n] : metrics.items()) {
      EXPECT_EQ(value(values, metric, pkg), n.get<double>()) << metric << " " << pkg;
    }
  }
  // Five application values plus two per project package.
  EXPECT_EQ(values.size(), 5u + 2u * expected["packages"].size());
}

TEST(SizeMetrics, LibraryOnlyModel) {
  SemanticModel m;
  m.application.name = "lib";
  m.packages.push_back(PackageNode{"pkg:java.util", "java.util", PackageOrigin::Library, {"cls:java.util.Vector"}, 0});
  ClassNode v;
  v.id = "cls:java.util.Vector";
  v.qualified_name = "java.util.Vector";
  v.package_id = "pkg:java.util";
  v.resolved = false;
  m.classes.push_back(v);
  m.relationships.push_back({EdgeKind::Contains, "pkg:java.util", v.id});
  const auto values = compute_size_metrics(m);
  EXPECT_EQ(value(values, "package_count", "app:lib"), 0);
  EXPECT_EQ(value(values, "library_package_count", "app:lib"), 1);
  EXPECT_EQ(value(values, "class_count", "app:lib"), 0);
}

std::vector<MethodDecl> methods_of(const std::string& source) {
  return parse_source(source, "X.java").types.at(0).methods;
}

TEST(ClassComplexity, NoMethods) {
  ClassNode c;
  c.id = "cls:E";
  const auto v = compute_class_complexity(c, {});
  EXPECT_EQ(as_map(v), (ValueMap{{{"method_count", "cls:E"}, 0},
                                 {{"statement_count", "cls:E"}, 0},
                                 {{"weighted_complexity", "cls:E"}, 0}}));
}

TEST(ClassComplexity, TwoMethods) {
  ClassNode c;
  c.id = "cls:X";
  const auto methods = methods_of(
      "class X { int a; void f() { a = 1; a = 2; } void g() { if (a > 0) a = 0; else if (a < 0) a = 1; } }");
  // f: CC 1, two statements. g: CC 3, two ifs and two assignments.
  const auto v = compute_class_complexity(c, methods);
  EXPECT_EQ(value(v, "method_count", "cls:X"), 2);
  EXPECT_EQ(value(v, "statement_count", "cls:X"), 2 + 4);
  EXPECT_EQ(value(v, "weighted_complexity", "cls:X"), 1 + 3);

  const auto small = methods_of("class X { void f() { a = 1; } void g() { if (b) { a = 1; a = 2; } else { a = 3; } } }");
  const auto w = compute_class_complexity(c, small);
  EXPECT_EQ(as_map(w), (ValueMap{{{"method_count", "cls:X"}, 2},
                                 {{"statement_count", "cls:X"}, 5},
                                 {{"weighted_complexity", "cls:X"}, 3}}));
}

TEST(ClassComplexity, InterfaceWithAbstractMethods) {
  ClassNode c;
  c.id = "cls:I";
  c.kind = TypeKind::Interface;
  const auto methods = parse_source("interface I { void a(); int b(int x); String c(); }", "I.java").types[0].methods;
  const auto v = compute_class_complexity(c, methods);
  EXPECT_EQ(value(v, "method_count", "cls:I"), 3);
  EXPECT_EQ(value(v, "weighted_complexity", "cls:I"), 0);
}

TEST(ClassComplexity, ModelRouteMatchesSyntaxRoute) {
  const auto p = jmtest::model_from_directory(jmtest::printshop_dir());
  for (const auto& u : p.units) {
    for (const auto& t : u.types) {
      const auto* c = p.model.find_class(class_id((u.package_name ? *u.package_name + "." : "") + t.name));
      ASSERT_NE(c, nullptr);
      EXPECT_EQ(as_map(compute_class_complexity(*c, t.methods)), as_map(compute_class_complexity(p.model, *c)))
          << c->id;
    }
  }
}

TEST(InheritanceMetrics, ChainAndRoots) {
  const auto p = jmtest::model_from_sources({{"p/All.java",
                                              "package p; class A {} class B extends A {} class C extends B {}"
                                              " class D {} class E extends java.util.Vector {}"}});
  const auto v = compute_inheritance_metrics(p.model);
  EXPECT_EQ(value(v, "dit", "cls:p.D"), 0);
  EXPECT_EQ(value(v, "dit", "cls:p.C"), 2);
  EXPECT_EQ(value(v, "noc", "cls:p.A"), 1);
  EXPECT_EQ(value(v, "noc", "cls:p.B"), 1);
  EXPECT_EQ(value(v, "noc", "cls:p.C"), 0);
  EXPECT_EQ(value(v, "dit", "cls:java.util.Vector"), 0);
  EXPECT_EQ(value(v, "dit", "cls:p.E"), 1);
  EXPECT_EQ(value(v, "noc", "cls:java.util.Vector"), 1);
}

TEST(InheritanceMetrics, ImplementsDoesNotCount) {
  const auto p = jmtest::model_from_sources(
      {{"q/Q.java", "package q; interface I {} interface J extends I {} class K implements J {} class L extends K implements I {}"}});
  const auto v = compute_inheritance_metrics(p.model);
  EXPECT_EQ(value(v, "dit", "cls:q.J"), 0);
  EXPECT_EQ(value(v, "noc", "cls:q.I"), 0);
  EXPECT_EQ(value(v, "dit", "cls:q.L"), 1);
  EXPECT_EQ(value(v, "noc", "cls:q.K"), 1);
}

TEST(InheritanceMetrics, IdentitiesOnRandomForests) {
  jmtest::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto fc = jmtest::random_forest(rng, 30);
    const auto p = jmtest::model_from_sources(fc.sources);
    const auto v = compute_inheritance_metrics(p.model);
    const auto facts = jmtest::inheritance_oracle(fc.node_ids, fc.extends);
    double noc_sum = 0, max_dit = 0;
    for (const auto& x : v) {
      if (x.metric_id == "noc") noc_sum += x.value;
      if (x.metric_id == "dit") max_dit = std::max(max_dit, x.value);
    }
    ASSERT_EQ(noc_sum, static_cast<double>(p.model.count_edges(EdgeKind::Extends)));
    ASSERT_EQ(noc_sum, facts.edge_count);
    ASSERT_EQ(max_dit, facts.longest_chain);
    for (const auto& id : fc.node_ids) {
      ASSERT_EQ(value(v, "dit", id), facts.depth.at(id)) << id;
      ASSERT_EQ(value(v, "noc", id), facts.children.at(id)) << id;
    }
  }
}

TEST(Plan, DefaultPlanIsValidAndCoversTheCatalog) {
  const auto plan = default_plan();
  EXPECT_NO_THROW(validate_plan(plan));
  EXPECT_EQ(plan.goal, "assess fault-proneness indicators of the application");
  EXPECT_EQ(plan.questions.size(), 3u);
  EXPECT_EQ(plan.metrics.size(), metric_catalog().size());
}

TEST(Plan, JsonRoundTrip) {
  const auto plan = default_plan();
  const auto text = plan_to_json(plan);
  EXPECT_EQ(plan_from_json(text), plan);
  EXPECT_EQ(plan_to_json(plan_from_json(text)), text);
}

TEST(Plan, Validation) {
  auto plan = default_plan();
  plan.questions[0].metric_ids.push_back("xyz");
  try {
    validate_plan(plan);
    FAIL();
  } catch (const PlanError& e) {
    EXPECT_EQ(e.kind(), PlanError::Kind::UnknownMetricId);
    EXPECT_EQ(e.metric_id(), "xyz");
  }

  auto orphan = default_plan();
  orphan.questions.pop_back();  // dit and noc now answer no question
  EXPECT_THROW(validate_plan(orphan), PlanError);

  auto wrong_scope = default_plan();
  wrong_scope.metrics[0].scope = MetricScope::Method;
  EXPECT_THROW(validate_plan(wrong_scope), PlanError);

  try {
    plan_from_json("{\"goal\": 3}");
    FAIL();
  } catch (const PlanError& e) {
    EXPECT_EQ(e.kind(), PlanError::Kind::Malformed);
  }
  EXPECT_THROW(plan_from_json("not json"), PlanError);
}

TEST(Plan, SubsetPlan) {
  const auto plan = plan_from_json(R"({
    "goal": "size only",
    "questions": [{"question": "How many classes?", "metrics": ["class_count", "method_count"]}],
    "metrics": [
      {"id": "class_count", "name": "Classes", "unit": "classes", "scope": "Application"},
      {"id": "method_count", "name": "Methods", "unit": "methods", "scope": "Class"}
    ]
  })");
  EXPECT_NO_THROW(validate_plan(plan));
  const auto p = jmtest::model_from_directory(jmtest::printshop_dir());
  const auto report = build_report(p.model, plan);
  EXPECT_EQ(report.values.size(), 1u + 7u);
  EXPECT_EQ(report.values[0].metric_id, "class_count");
}

TEST(Report, DefaultPlanOverEmptyModel) {
  SemanticModel m;
  m.application.name = "e";
  const auto report = build_report(m, default_plan());
  EXPECT_EQ(report.values.size(), 5u);
  for (const auto& v : report.values) {
    EXPECT_EQ(v.value, 0);
    EXPECT_EQ(subject_scope(v.subject_id), MetricScope::Application);
  }
}

TEST(Report, RejectsUnknownMetric) {
  auto plan = default_plan();
  plan.metrics.push_back(MetricDef{"xyz", "?", "?", MetricScope::Class});
  plan.questions[0].metric_ids.push_back("xyz");
  try {
    build_report(SemanticModel{}, plan);
    FAIL();
  } catch (const PlanError& e) {
    EXPECT_EQ(e.kind(), PlanError::Kind::UnknownMetricId);
    EXPECT_EQ(e.metric_id(), "xyz");
  }
}

TEST(Report, FixtureRowCountsAndOrdering) {
  const auto expected = jmtest::printshop_expected();
  const auto p = jmtest::model_from_directory(jmtest::printshop_dir());
  const auto plan = default_plan();
  const auto report = build_report(p.model, plan);

  std::map<std::string, int> rows;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& v : report.values) {
    ++rows[v.metric_id];
    EXPECT_TRUE(seen.insert({v.metric_id, v.subject_id}).second) << v.metric_id << " " << v.subject_id;
  }
  const int methods_with_body = static_cast<int>(expected["control_paths"].size());
  for (const auto& def : plan.metrics) {
    int want = 0;
    switch (def.scope) {
      case MetricScope::Application: want = 1; break;
      case MetricScope::Package: want = 3; break;
      case MetricScope::Class: want = 7; break;
      case MetricScope::Method: want = methods_with_body; break;
    }
    EXPECT_EQ(rows[def.id], want) << def.id;
  }

  // Plan order, then subject id; subject kinds match scopes.
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < plan.metrics.size(); ++i) rank[plan.metrics[i].id] = i;
  for (std::size_t i = 1; i < report.values.size(); ++i) {
    const auto& a = report.values[i - 1];
    const auto& b = report.values[i];
    EXPECT_TRUE(rank[a.metric_id] < rank[b.metric_id] ||
                (rank[a.metric_id] == rank[b.metric_id] && a.subject_id < b.subject_id));
  }
  for (const auto& v : report.values) {
    EXPECT_EQ(subject_scope(v.subject_id), plan.metrics[rank[v.metric_id]].scope) << v.subject_id;
  }

  const auto values = as_map(report.values);
  for (const auto& [id, cc] : expected["control_paths"].items()) {
    EXPECT_EQ(values.at({"control_paths", id}), cc.get<double>()) << id;
  }
  for (const auto& [id, counts] : expected["size"]["classes"].items()) {
    EXPECT_EQ(values.at({"feature_count", id}), counts["feature_count"].get<double>()) << id;
  }
  for (const auto& [id, dit] : expected["inheritance"]["dit"].items()) {
    if (id == "cls:java.util.Vector") continue;  // placeholders are not reported
    EXPECT_EQ(values.at({"dit", id}), dit.get<double>()) << id;
  }
  EXPECT_EQ(build_report(p.model, plan), report);
}

}  // namespace
