#include "jmetrics/measurer.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "json.hpp"

namespace jmetrics {

std::string_view to_string(MetricScope scope) {
  switch (scope) {
    case MetricScope::Application: return "Application";
    case MetricScope::Package: return "Package";
    case MetricScope::Class: return "Class";
    case MetricScope::Method: return "Method";
  }
  return "?";
}

MetricScope metric_scope_from_string(std::string_view text) {
  for (auto s : {MetricScope::Application, MetricScope::Package, MetricScope::Class, MetricScope::Method}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown metric scope: " + std::string(text));
}

MetricScope subject_scope(std::string_view subject_id) {
  if (subject_id.starts_with("app:")) return MetricScope::Application;
  if (subject_id.starts_with("pkg:")) return MetricScope::Package;
  if (subject_id.starts_with("cls:")) return MetricScope::Class;
  if (subject_id.starts_with("mth:")) return MetricScope::Method;
  throw std::invalid_argument("subject id has no known prefix: " + std::string(subject_id));
}

namespace {

namespace ids = metric_ids;

const std::vector<MetricDef>& catalog() {
  static const std::vector<MetricDef> kCatalog{
      {std::string(ids::kArtifacts), "Number of artifacts", "files", MetricScope::Application},
      {std::string(ids::kComponents), "Number of components", "files", MetricScope::Application},
      {std::string(ids::kPackages), "Number of packages", "packages", MetricScope::Application},
      {std::string(ids::kLibraryPackages), "Number of library packages", "packages", MetricScope::Application},
      {std::string(ids::kClasses), "Number of classes", "classes", MetricScope::Application},
      {std::string(ids::kPackageClasses), "Classes in package", "classes", MetricScope::Package},
      {std::string(ids::kPackageBytes), "Package source size", "bytes", MetricScope::Package},
      {std::string(ids::kMethodCount), "Number of methods", "methods", MetricScope::Class},
      {std::string(ids::kStatementCount), "Number of statements", "statements", MetricScope::Class},
      {std::string(ids::kDeclarationCount), "Number of declarations", "variables", MetricScope::Class},
      {std::string(ids::kExpressionCount), "Number of expressions", "expressions", MetricScope::Class},
      {std::string(ids::kFeatureCount), "Number of features (fields + methods)", "members", MetricScope::Class},
      {std::string(ids::kWeightedComplexity), "Weighted methods complexity", "paths", MetricScope::Class},
      {std::string(ids::kDit), "Depth of inheritance tree", "levels", MetricScope::Class},
      {std::string(ids::kNoc), "Number of children", "classes", MetricScope::Class},
      {std::string(ids::kControlPaths), "Number of control paths", "paths", MetricScope::Method},
  };
  return kCatalog;
}

const MetricDef* find_catalog_entry(std::string_view id) {
  for (const auto& m : catalog()) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

double as_value(std::integral auto v) { return static_cast<double>(v); }

struct InheritanceFacts {
  std::unordered_map<std::string, int> dit;
  std::unordered_map<std::string, int> noc;
};

InheritanceFacts inheritance_facts(const SemanticModel& model) {
  std::unordered_map<std::string, std::string> parent;
  InheritanceFacts facts;
  for (const auto& e : model.relationships) {
    if (e.kind != EdgeKind::Extends) continue;
    parent[e.from_id] = e.to_id;
    ++facts.noc[e.to_id];
  }
  // Memoized walk up the (acyclic) superclass chain.
  std::function<int(const std::string&)> depth = [&](const std::string& id) -> int {
    if (auto it = facts.dit.find(id); it != facts.dit.end()) return it->second;
    auto p = parent.find(id);
    const int d = p == parent.end() ? 0 : depth(p->second) + 1;
    facts.dit[id] = d;
    return d;
  };
  for (const auto& c : model.classes) depth(c.id);
  return facts;
}

using Computer = std::function<std::vector<MetricValue>(const SemanticModel&)>;

std::vector<MetricValue> pick(const std::vector<MetricValue>& values, std::string_view id) {
  std::vector<MetricValue> out;
  std::copy_if(values.begin(), values.end(), std::back_inserter(out),
               [&](const MetricValue& v) { return v.metric_id == id; });
  return out;
}

std::vector<const ClassNode*> resolved_classes(const SemanticModel& model) {
  std::vector<const ClassNode*> out;
  for (const auto& c : model.classes) {
    if (c.resolved) out.push_back(&c);
  }
  return out;
}

std::vector<MetricValue> per_class(const SemanticModel& model, std::string_view id,
                                   const std::function<double(const ClassNode&)>& fn) {
  std::vector<MetricValue> out;
  for (const auto* c : resolved_classes(model)) out.push_back({std::string(id), c->id, fn(*c)});
  return out;
}

Computer computer_for(std::string_view id) {
  if (id == ids::kArtifacts || id == ids::kComponents || id == ids::kPackages || id == ids::kLibraryPackages ||
      id == ids::kClasses || id == ids::kPackageClasses || id == ids::kPackageBytes) {
    return [id](const SemanticModel& m) { return pick(compute_size_metrics(m), id); };
  }
  if (id == ids::kMethodCount || id == ids::kStatementCount || id == ids::kWeightedComplexity) {
    return [id](const SemanticModel& m) {
      std::vector<MetricValue> out;
      for (const auto* c : resolved_classes(m)) {
        auto triple = pick(compute_class_complexity(m, *c), id);
        out.insert(out.end(), triple.begin(), triple.end());
      }
      return out;
    };
  }
  if (id == ids::kDeclarationCount) {
    return [id](const SemanticModel& m) { return per_class(m, id, [](const ClassNode& c) { return c.declaration_count; }); };
  }
  if (id == ids::kExpressionCount) {
    return [id](const SemanticModel& m) { return per_class(m, id, [](const ClassNode& c) { return c.expression_count; }); };
  }
  if (id == ids::kFeatureCount) {
    return [id](const SemanticModel& m) {
      return per_class(m, id, [](const ClassNode& c) { return c.field_count + c.method_count; });
    };
  }
  if (id == ids::kDit || id == ids::kNoc) {
    return [id](const SemanticModel& m) {
      std::vector<MetricValue> out;
      for (auto& v : pick(compute_inheritance_metrics(m), id)) {
        const auto* c = m.find_class(v.subject_id);
        if (c && c->resolved) out.push_back(std::move(v));
      }
      return out;
    };
  }
  if (id == ids::kControlPaths) {
    return [id](const SemanticModel& m) {
      std::vector<MetricValue> out;
      for (const auto& method : m.methods) {
        const auto* c = m.find_class(method.class_id);
        if (method.control_paths && c && c->resolved) {
          out.push_back({std::string(id), method.id, as_value(*method.control_paths)});
        }
      }
      return out;
    };
  }
  return nullptr;
}

}  // namespace

std::span<const MetricDef> metric_catalog() { return catalog(); }

GqmPlan default_plan() {
  GqmPlan plan;
  plan.goal = "assess fault-proneness indicators of the application";
  plan.questions = {
      {"How large is the application?",
       {std::string(ids::kArtifacts), std::string(ids::kComponents), std::string(ids::kPackages),
        std::string(ids::kLibraryPackages), std::string(ids::kClasses), std::string(ids::kPackageClasses),
        std::string(ids::kPackageBytes)}},
      {"How complex are the methods and classes?",
       {std::string(ids::kControlPaths), std::string(ids::kMethodCount), std::string(ids::kStatementCount),
        std::string(ids::kWeightedComplexity), std::string(ids::kDeclarationCount),
        std::string(ids::kExpressionCount), std::string(ids::kFeatureCount)}},
      {"How deep and wide is the inheritance hierarchy?", {std::string(ids::kDit), std::string(ids::kNoc)}},
  };
  plan.metrics = catalog();
  return plan;
}

void validate_plan(const GqmPlan& plan) {
  std::set<std::string> defined;
  for (const auto& m : plan.metrics) {
    const auto* known = find_catalog_entry(m.id);
    if (!known) throw PlanError(PlanError::Kind::UnknownMetricId, "unknown metric id: " + m.id, m.id);
    if (known->scope != m.scope) {
      throw PlanError(PlanError::Kind::Malformed,
                      "metric " + m.id + " has scope " + std::string(to_string(known->scope)) + ", not " +
                          std::string(to_string(m.scope)),
                      m.id);
    }
    if (!defined.insert(m.id).second) throw PlanError(PlanError::Kind::Malformed, "metric defined twice: " + m.id, m.id);
  }
  std::set<std::string> asked;
  for (const auto& q : plan.questions) {
    for (const auto& id : q.metric_ids) {
      if (!defined.count(id)) {
        if (!find_catalog_entry(id)) throw PlanError(PlanError::Kind::UnknownMetricId, "unknown metric id: " + id, id);
        throw PlanError(PlanError::Kind::Malformed, "question references undefined metric: " + id, id);
      }
      asked.insert(id);
    }
  }
  for (const auto& id : defined) {
    if (!asked.count(id)) throw PlanError(PlanError::Kind::Malformed, "metric answers no question: " + id, id);
  }
}

GqmPlan plan_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    GqmPlan plan;
    plan.goal = j.at("goal").get<std::string>();
    for (const auto& q : j.at("questions")) {
      plan.questions.push_back({q.at("question").get<std::string>(), q.at("metrics").get<std::vector<std::string>>()});
    }
    for (const auto& m : j.at("metrics")) {
      MetricDef def;
      def.id = m.at("id").get<std::string>();
      if (const auto* known = find_catalog_entry(def.id)) {
        def.name = m.value("name", known->name);
        def.unit = m.value("unit", known->unit);
        def.scope = m.contains("scope") ? metric_scope_from_string(m.at("scope").get<std::string>()) : known->scope;
      } else {
        throw PlanError(PlanError::Kind::UnknownMetricId, "unknown metric id: " + def.id, def.id);
      }
      plan.metrics.push_back(std::move(def));
    }
    return plan;
  } catch (const nlohmann::json::exception& e) {
    throw PlanError(PlanError::Kind::Malformed, std::string("invalid plan file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw PlanError(PlanError::Kind::Malformed, std::string("invalid plan file: ") + e.what());
  }
}

std::string plan_to_json(const GqmPlan& plan) {
  nlohmann::json j;
  j["goal"] = plan.goal;
  j["questions"] = nlohmann::json::array();
  for (const auto& q : plan.questions) j["questions"].push_back({{"question", q.question}, {"metrics", q.metric_ids}});
  j["metrics"] = nlohmann::json::array();
  for (const auto& m : plan.metrics) {
    j["metrics"].push_back({{"id", m.id}, {"name", m.name}, {"unit", m.unit}, {"scope", to_string(m.scope)}});
  }
  return j.dump(2) + "\n";
}

std::vector<MetricValue> compute_size_metrics(const SemanticModel& model) {
  const auto app = application_id(model.application.name);
  std::size_t project_packages = 0;
  std::size_t library_packages = 0;
  for (const auto& p : model.packages) {
    (p.origin == PackageOrigin::ProjectFile ? project_packages : library_packages) += 1;
  }
  std::vector<MetricValue> out{
      {std::string(ids::kArtifacts), app, as_value(model.application.artifacts.size())},
      {std::string(ids::kComponents), app, as_value(model.application.components.size())},
      {std::string(ids::kPackages), app, as_value(project_packages)},
      {std::string(ids::kLibraryPackages), app, as_value(library_packages)},
      {std::string(ids::kClasses), app, as_value(resolved_classes(model).size())},
  };
  for (const auto& p : model.packages) {
    if (p.origin != PackageOrigin::ProjectFile) continue;
    const auto members = std::count_if(p.member_class_ids.begin(), p.member_class_ids.end(), [&](const auto& id) {
      const auto* c = model.find_class(id);
      return c && c->resolved;
    });
    out.push_back({std::string(ids::kPackageClasses), p.id, as_value(members)});
    out.push_back({std::string(ids::kPackageBytes), p.id, as_value(p.total_source_bytes)});
  }
  return out;
}

std::vector<MetricValue> compute_class_complexity(const ClassNode& cls, std::span<const MethodDecl> methods) {
  class StatementCounter : public AstVisitor {
   public:
    int count = 0;
    void visit(const Stmt& s) override {
      if (!s.as<BlockStmt>() && !s.as<EmptyStmt>()) ++count;
    }
  };
  StatementCounter statements;
  int weighted = 0;
  for (const auto& m : methods) {
    if (!m.body) continue;
    walk(*m.body, statements);
    weighted += compute_control_paths(m).value_or(0);
  }
  return {
      {std::string(ids::kMethodCount), cls.id, as_value(methods.size())},
      {std::string(ids::kStatementCount), cls.id, as_value(statements.count)},
      {std::string(ids::kWeightedComplexity), cls.id, as_value(weighted)},
  };
}

std::vector<MetricValue> compute_class_complexity(const SemanticModel& model, const ClassNode& cls) {
  int weighted = 0;
  for (const auto* m : model.methods_of(cls.id)) weighted += m->control_paths.value_or(0);
  return {
      {std::string(ids::kMethodCount), cls.id, as_value(cls.method_count)},
      {std::string(ids::kStatementCount), cls.id, as_value(cls.statement_count)},
      {std::string(ids::kWeightedComplexity), cls.id, as_value(weighted)},
  };
}

std::vector<MetricValue> compute_inheritance_metrics(const SemanticModel& model) {
  const auto facts = inheritance_facts(model);
  std::vector<MetricValue> out;
  out.reserve(model.classes.size() * 2);
  for (const auto& c : model.classes) {
    out.push_back({std::string(ids::kDit), c.id, as_value(facts.dit.at(c.id))});
    auto noc = facts.noc.find(c.id);
    out.push_back({std::string(ids::kNoc), c.id, as_value(noc == facts.noc.end() ? 0 : noc->second)});
  }
  return out;
}

MetricReport build_report(const SemanticModel& model, const GqmPlan& plan) {
  validate_plan(plan);
  MetricReport report{plan, {}};
  for (const auto& def : plan.metrics) {
    auto compute = computer_for(def.id);
    if (!compute) throw PlanError(PlanError::Kind::UnknownMetricId, "unknown metric id: " + def.id, def.id);
    auto values = compute(model);
    std::sort(values.begin(), values.end(),
              [](const MetricValue& a, const MetricValue& b) { return a.subject_id < b.subject_id; });
    report.values.insert(report.values.end(), values.begin(), values.end());
  }
  return report;
}

}  // namespace jmetrics
