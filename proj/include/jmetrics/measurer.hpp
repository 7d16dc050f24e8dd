#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jmetrics/ast.hpp"
#include "jmetrics/complexity.hpp"
#include "jmetrics/model.hpp"

namespace jmetrics {

enum class MetricScope { Application, Package, Class, Method };

std::string_view to_string(MetricScope scope);
MetricScope metric_scope_from_string(std::string_view text);

struct MetricDef {
  std::string id;
  std::string name;
  std::string unit;
  MetricScope scope = MetricScope::Application;
  bool operator==(const MetricDef&) const = default;
};

struct GqmQuestion {
  std::string question;
  std::vector<std::string> metric_ids;
  bool operator==(const GqmQuestion&) const = default;
};

// Goal -> questions -> metrics. Every question's metric ids are defined in
// `metrics` and every metric answers at least one question.
struct GqmPlan {
  std::string goal;
  std::vector<GqmQuestion> questions;
  std::vector<MetricDef> metrics;
  bool operator==(const GqmPlan&) const = default;
};

struct MetricValue {
  std::string metric_id;
  std::string subject_id;
  double value = 0;
  bool operator==(const MetricValue&) const = default;
};

struct MetricReport {
  GqmPlan plan;
  std::vector<MetricValue> values;  // plan metric order, then subject id
  bool operator==(const MetricReport&) const = default;
};

class PlanError : public std::runtime_error {
 public:
  enum class Kind { UnknownMetricId, Malformed };
  PlanError(Kind kind, const std::string& message, std::string metric_id = {})
      : std::runtime_error(message), kind_(kind), metric_id_(std::move(metric_id)) {}
  Kind kind() const { return kind_; }
  const std::string& metric_id() const { return metric_id_; }

 private:
  Kind kind_;
  std::string metric_id_;
};

namespace metric_ids {
inline constexpr std::string_view kArtifacts = "artifact_count";
inline constexpr std::string_view kComponents = "component_count";
inline constexpr std::string_view kPackages = "package_count";
inline constexpr std::string_view kLibraryPackages = "library_package_count";
inline constexpr std::string_view kClasses = "class_count";
inline constexpr std::string_view kPackageClasses = "package_class_count";
inline constexpr std::string_view kPackageBytes = "package_source_bytes";
inline constexpr std::string_view kMethodCount = "method_count";
inline constexpr std::string_view kStatementCount = "statement_count";
inline constexpr std::string_view kDeclarationCount = "declaration_count";
inline constexpr std::string_view kExpressionCount = "expression_count";
inline constexpr std::string_view kFeatureCount = "feature_count";
inline constexpr std::string_view kWeightedComplexity = "weighted_complexity";
inline constexpr std::string_view kDit = "dit";
inline constexpr std::string_view kNoc = "noc";
inline constexpr std::string_view kControlPaths = "control_paths";
}  // namespace metric_ids

// Every metric the measurer knows how to compute, with its scope.
std::span<const MetricDef> metric_catalog();

GqmPlan default_plan();

// Throws PlanError on unknown ids, scope mismatches, or dangling
// question/metric links.
void validate_plan(const GqmPlan& plan);

GqmPlan plan_from_json(std::string_view text);
std::string plan_to_json(const GqmPlan& plan);

/// Application counts (artifacts, components, project packages, library
/// packages, resolved classes) and per-project-package class count and
/// source bytes.
std::vector<MetricValue> compute_size_metrics(const SemanticModel& model);

/// method_count, statement_count and weighted_complexity (sum of control
/// paths over bodied methods) for one class, from its syntax tree.
std::vector<MetricValue> compute_class_complexity(const ClassNode& cls, std::span<const MethodDecl> methods);

// Same triple from the method summaries stored in the model.
std::vector<MetricValue> compute_class_complexity(const SemanticModel& model, const ClassNode& cls);

/// DIT and NOC for every class node, placeholders included. Only Extends
/// edges count; a placeholder has depth 0.
std::vector<MetricValue> compute_inheritance_metrics(const SemanticModel& model);

MetricReport build_report(const SemanticModel& model, const GqmPlan& plan);

// Scope a subject id belongs to, judged by its prefix.
MetricScope subject_scope(std::string_view subject_id);

}  // namespace jmetrics
