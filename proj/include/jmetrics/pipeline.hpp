#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jmetrics/measurer.hpp"

namespace jmetrics {

enum class EmitTarget { Store, ReportCsv, ReportJson, PackageGraph, ClassGraph, Treemap, Charts };

std::string_view to_string(EmitTarget target);
std::optional<EmitTarget> emit_target_from_string(std::string_view text);
std::set<EmitTarget> all_emit_targets();

struct RunConfig {
  std::filesystem::path input_root;
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> plan_path;
  std::set<EmitTarget> emit = all_emit_targets();
  bool fail_on_parse_error = false;
  std::ostream* ast_dump = nullptr;  // receives the tree of every parsed file
};

struct Diagnostic {
  std::string file;
  std::uint32_t line = 0;
  std::uint32_t col = 0;
  std::string message;

  // "file:line:col: error: message"
  std::string format() const;
};

// Exit codes returned by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitAnalysisError = 1;
inline constexpr int kExitIoError = 2;

struct RunSummary {
  int exit_code = kExitOk;
  std::size_t artifact_count = 0;
  std::size_t component_count = 0;
  std::size_t parsed_count = 0;
  std::size_t package_count = 0;
  std::size_t class_count = 0;
  std::vector<Diagnostic> diagnostics;
  std::vector<std::filesystem::path> outputs;  // relative to output_dir
};

// Output names inside output_dir.
namespace output_names {
inline constexpr std::string_view kStoreDir = "store";
inline constexpr std::string_view kReportCsv = "report.csv";
inline constexpr std::string_view kReportJson = "report.json";
inline constexpr std::string_view kPackageGraph = "package_graph.dot";
inline constexpr std::string_view kClassGraph = "class_graph.dot";
inline constexpr std::string_view kTreemap = "treemap.svg";
inline constexpr std::string_view kPackageChart = "package_chart.svg";
inline constexpr std::string_view kArtifactChart = "artifact_chart.svg";
}  // namespace output_names

/// scan -> lex/parse -> model -> persist -> measure -> render.
///
/// Files that fail to lex or parse are reported and left out of the model.
/// With fail_on_parse_error every file is still diagnosed, then the run
/// stops with kExitAnalysisError before writing outputs. Diagnostics go to
/// `err`, one per line.
RunSummary run(const RunConfig& config, std::ostream& err);

enum class ReportFormat { Csv, Json };

// CSV: metric_id,scope,subject,value sorted by metric then subject.
// JSON: the plan and every value, in canonical (sorted-key) form.
std::string export_report(const MetricReport& report, ReportFormat format);

}  // namespace jmetrics
