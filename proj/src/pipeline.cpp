#include "jmetrics/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "jmetrics/csv.hpp"
#include "jmetrics/model.hpp"
#include "jmetrics/parser.hpp"
#include "jmetrics/scanner.hpp"
#include "jmetrics/store.hpp"
#include "jmetrics/visualizer.hpp"

namespace jmetrics {

namespace fs = std::filesystem;

std::string_view to_string(EmitTarget target) {
  switch (target) {
    case EmitTarget::Store: return "store";
    case EmitTarget::ReportCsv: return "report_csv";
    case EmitTarget::ReportJson: return "report_json";
    case EmitTarget::PackageGraph: return "package_graph";
    case EmitTarget::ClassGraph: return "class_graph";
    case EmitTarget::Treemap: return "treemap";
    case EmitTarget::Charts: return "charts";
  }
  return "?";
}

std::set<EmitTarget> all_emit_targets() {
  return {EmitTarget::Store,      EmitTarget::ReportCsv, EmitTarget::ReportJson, EmitTarget::PackageGraph,
          EmitTarget::ClassGraph, EmitTarget::Treemap,   EmitTarget::Charts};
}

std::optional<EmitTarget> emit_target_from_string(std::string_view text) {
  for (auto t : all_emit_targets()) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

std::string Diagnostic::format() const {
  return file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": error: " + message;
}

namespace {

std::string format_value(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

nlohmann::json value_json(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9e15) return static_cast<std::int64_t>(v);
  return v;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

struct ParseOutcome {
  std::optional<CompilationUnit> unit;
  std::optional<Diagnostic> diagnostic;
};

ParseOutcome analyze_file(const fs::path& root, const FileRecord& file) {
  ParseOutcome outcome;
  try {
    const auto source = read_text(root / file.path);
    outcome.unit = parse_source(source, file.path);
  } catch (const LexError& e) {
    outcome.diagnostic = Diagnostic{file.path, e.line(), e.col(), e.what()};
  } catch (const ParseError& e) {
    outcome.diagnostic = Diagnostic{file.path, e.line(), e.col(), e.what()};
  } catch (const std::exception& e) {
    outcome.diagnostic = Diagnostic{file.path, 0, 0, e.what()};
  }
  return outcome;
}

// Lex and parse every component; results keep inventory order.
std::vector<ParseOutcome> analyze_all(const fs::path& root, const std::vector<FileRecord>& files) {
  std::vector<ParseOutcome> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) results[i] = analyze_file(root, files[i]);
  };
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(workers, files.size()); ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

std::string export_report(const MetricReport& report, ReportFormat format) {
  std::vector<const MetricValue*> rows;
  for (const auto& v : report.values) rows.push_back(&v);

  if (format == ReportFormat::Csv) {
    std::sort(rows.begin(), rows.end(), [](const MetricValue* a, const MetricValue* b) {
      if (a->metric_id != b->metric_id) return a->metric_id < b->metric_id;
      return a->subject_id < b->subject_id;
    });
    std::string out;
    csv::append_row(out, {"metric_id", "scope", "subject", "value"});
    for (const auto* v : rows) {
      csv::append_row(out, {v->metric_id, std::string(to_string(subject_scope(v->subject_id))), v->subject_id,
                            format_value(v->value)});
    }
    return out;
  }

  nlohmann::json j;
  j["plan"] = nlohmann::json::parse(plan_to_json(report.plan));
  j["values"] = nlohmann::json::array();
  for (const auto* v : rows) {
    j["values"].push_back({{"metric_id", v->metric_id},
                           {"scope", to_string(subject_scope(v->subject_id))},
                           {"subject", v->subject_id},
                           {"value", value_json(v->value)}});
  }
  return j.dump(2) + "\n";
}

RunSummary run(const RunConfig& config, std::ostream& err) {
  RunSummary summary;
  auto fail = [&](int code, const std::string& message) {
    err << "error: " << message << "\n";
    summary.exit_code = code;
    return summary;
  };

  if (config.emit.empty()) return fail(kExitIoError, "nothing to emit");

  GqmPlan plan = default_plan();
  try {
    if (config.plan_path) plan = plan_from_json(read_text(*config.plan_path));
    validate_plan(plan);
  } catch (const std::exception& e) {
    return fail(kExitIoError, e.what());
  }

  ProjectInventory inventory;
  try {
    ScanOptions options;
    options.exclude = config.output_dir;
    inventory = scan_project(config.input_root, options);
  } catch (const RootNotFound& e) {
    return fail(kExitIoError, e.what());
  }
  summary.artifact_count = inventory.files.size();

  const auto components = inventory.components();
  summary.component_count = components.size();
  auto outcomes = analyze_all(config.input_root, components);

  std::vector<CompilationUnit> units;
  for (auto& o : outcomes) {
    if (o.unit) {
      units.push_back(std::move(*o.unit));
    } else if (o.diagnostic) {
      summary.diagnostics.push_back(std::move(*o.diagnostic));
    }
  }
  summary.parsed_count = units.size();
  for (const auto& d : summary.diagnostics) err << d.format() << "\n";
  if (config.ast_dump) {
    for (const auto& u : units) *config.ast_dump << dump_unit(u);
  }
  if (!summary.diagnostics.empty() && config.fail_on_parse_error) {
    summary.exit_code = kExitAnalysisError;
    return summary;
  }

  // Excluded files stay in the artifact inventory but contribute no types.
  SemanticModel model;
  try {
    model = build_model(inventory, units);
  } catch (const ModelError& e) {
    return fail(kExitAnalysisError, e.what());
  }
  summary.package_count = static_cast<std::size_t>(std::count_if(
      model.packages.begin(), model.packages.end(), [](const auto& p) { return p.origin == PackageOrigin::ProjectFile; }));
  summary.class_count = static_cast<std::size_t>(
      std::count_if(model.classes.begin(), model.classes.end(), [](const auto& c) { return c.resolved; }));

  const MetricReport report = build_report(model, plan);
  const auto& emit = config.emit;
  const fs::path& out = config.output_dir;

  try {
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw std::runtime_error("cannot create " + out.string() + ": " + ec.message());

    auto write = [&](std::string_view name, const std::string& text) {
      write_text(out / name, text);
      summary.outputs.emplace_back(name);
    };
    const auto report_csv = export_report(report, ReportFormat::Csv);

    if (emit.count(EmitTarget::Store)) {
      auto bundle = persist(model, out / output_names::kStoreDir, report_csv);
      for (const auto& t : bundle.tables) summary.outputs.push_back(fs::path(output_names::kStoreDir) / t);
    }
    if (emit.count(EmitTarget::ReportCsv)) write(output_names::kReportCsv, report_csv);
    if (emit.count(EmitTarget::ReportJson)) write(output_names::kReportJson, export_report(report, ReportFormat::Json));
    if (emit.count(EmitTarget::PackageGraph)) write(output_names::kPackageGraph, emit_package_graph(model));
    if (emit.count(EmitTarget::ClassGraph)) write(output_names::kClassGraph, emit_class_graph(model));
    if (emit.count(EmitTarget::Treemap)) {
      const auto layout = layout_treemap(inventory, Rect{0, 0, 960, 640});
      write(output_names::kTreemap, emit_treemap_svg(layout));
    }
    if (emit.count(EmitTarget::Charts)) {
      write(output_names::kPackageChart, emit_package_bar_chart(report));
      write(output_names::kArtifactChart, emit_artifact_summary_chart(report));
    }
  } catch (const std::exception& e) {
    return fail(kExitIoError, e.what());
  }
  return summary;
}

}  // namespace jmetrics
