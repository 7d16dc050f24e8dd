#include "jmetrics/store.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "jmetrics/csv.hpp"
#include "jmetrics/version.hpp"

namespace jmetrics {

namespace fs = std::filesystem;

StoreError::StoreError(Kind kind, std::string message, std::string table, std::size_t line, std::string id)
    : std::runtime_error(std::move(message)),
      kind_(kind),
      table_(std::move(table)),
      line_(line),
      id_(std::move(id)) {}

std::string_view to_string(StoreError::Kind kind) {
  switch (kind) {
    case StoreError::Kind::Io: return "IoError";
    case StoreError::Kind::FormatVersionMismatch: return "FormatVersionMismatch";
    case StoreError::Kind::MissingTable: return "MissingTable";
    case StoreError::Kind::MalformedRow: return "MalformedRow";
    case StoreError::Kind::DanglingEdge: return "DanglingEdge";
  }
  return "?";
}

namespace {

const std::vector<std::string> kApplicationHeader{"name"};
const std::vector<std::string> kFilesHeader{"path", "size", "kind"};
const std::vector<std::string> kPackagesHeader{"id", "name", "origin", "total_source_bytes"};
const std::vector<std::string> kClassesHeader{"id",           "qualified_name",  "package_id",
                                              "kind",         "declaration_count", "field_count",
                                              "method_count", "statement_count", "expression_count",
                                              "file_id",      "resolved"};
const std::vector<std::string> kMethodsHeader{"id",       "class_id",        "name",         "parameter_types",
                                              "has_body", "statement_count", "control_paths"};
const std::vector<std::string> kEdgesHeader{"kind", "from_id", "to_id"};

void write_file(const fs::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StoreError(StoreError::Kind::Io, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw StoreError(StoreError::Kind::Io, "write failed: " + path.string());
}

std::string read_file(const fs::path& path, const std::string& table) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StoreError(StoreError::Kind::MissingTable, "missing table " + table, table);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_time(Timestamp t) {
  const auto days = std::chrono::floor<std::chrono::days>(t);
  const std::chrono::year_month_day ymd{days};
  const std::chrono::hh_mm_ss hms{t - days};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// One table being read: header check plus typed field access with
// row-precise errors.
class TableReader {
 public:
  TableReader(const fs::path& dir, std::string name, const std::vector<std::string>& header) : name_(std::move(name)) {
    const auto text = read_file(dir / name_, name_);
    try {
      records_ = csv::parse(text);
    } catch (const csv::SyntaxError& e) {
      throw malformed(e.line(), e.what());
    }
    if (records_.empty() || records_.front().fields != header) throw malformed(1, "unexpected header");
    for (std::size_t i = 1; i < records_.size(); ++i) {
      if (records_[i].fields.size() != header.size()) throw malformed(records_[i].line, "wrong column count");
    }
  }

  std::span<const csv::Record> rows() const { return std::span(records_).subspan(1); }

  StoreError malformed(std::size_t line, const std::string& why) const {
    return StoreError(StoreError::Kind::MalformedRow,
                      "malformed row in " + name_ + " at line " + std::to_string(line) + ": " + why, name_, line);
  }

  template <typename Int>
  Int integer(const csv::Record& r, std::size_t col) const {
    const auto& s = r.fields[col];
    Int value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw malformed(r.line, "not an integer: '" + s + "'");
    }
    return value;
  }

  bool boolean(const csv::Record& r, std::size_t col) const {
    const auto& s = r.fields[col];
    if (s == "true") return true;
    if (s == "false") return false;
    throw malformed(r.line, "not a boolean: '" + s + "'");
  }

  template <typename Fn>
  auto convert(const csv::Record& r, Fn&& fn) const {
    try {
      return fn();
    } catch (const std::invalid_argument& e) {
      throw malformed(r.line, e.what());
    }
  }

 private:
  std::string name_;
  std::vector<csv::Record> records_;
};

}  // namespace

StoreBundle persist(const SemanticModel& model, const fs::path& out_dir, std::optional<std::string_view> metrics_csv) {
  if (!model.pending_references.empty()) {
    throw std::invalid_argument("cannot persist a model with unresolved supertype references");
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw StoreError(StoreError::Kind::Io, "cannot create " + out_dir.string() + ": " + ec.message());

  StoreBundle bundle{out_dir, {}};
  auto emit = [&](const std::string& name, const std::string& bytes) {
    write_file(out_dir / name, bytes);
    bundle.tables.push_back(name);
  };

  std::string text;
  csv::append_row(text, kApplicationHeader);
  csv::append_row(text, {model.application.name});
  emit("application.csv", text);

  auto files = model.application.artifacts;
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) { return a.path < b.path; });
  text.clear();
  csv::append_row(text, kFilesHeader);
  for (const auto& f : files) csv::append_row(text, {f.path, std::to_string(f.size), std::string(to_string(f.kind))});
  emit("files.csv", text);

  auto packages = model.packages;
  std::sort(packages.begin(), packages.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  text.clear();
  csv::append_row(text, kPackagesHeader);
  for (const auto& p : packages) {
    csv::append_row(text, {p.id, p.name, std::string(to_string(p.origin)), std::to_string(p.total_source_bytes)});
  }
  emit("packages.csv", text);

  auto classes = model.classes;
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  text.clear();
  csv::append_row(text, kClassesHeader);
  for (const auto& c : classes) {
    csv::append_row(text, {c.id, c.qualified_name, c.package_id, std::string(to_string(c.kind)),
                           std::to_string(c.declaration_count), std::to_string(c.field_count),
                           std::to_string(c.method_count), std::to_string(c.statement_count),
                           std::to_string(c.expression_count), c.file_id, bool_text(c.resolved)});
  }
  emit("classes.csv", text);

  auto methods = model.methods;
  std::sort(methods.begin(), methods.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  text.clear();
  csv::append_row(text, kMethodsHeader);
  for (const auto& m : methods) {
    csv::append_row(text, {m.id, m.class_id, m.name, m.parameter_types, bool_text(m.has_body),
                           std::to_string(m.statement_count),
                           m.control_paths ? std::to_string(*m.control_paths) : std::string()});
  }
  emit("methods.csv", text);

  auto edges = model.relationships;
  std::sort(edges.begin(), edges.end());
  text.clear();
  csv::append_row(text, kEdgesHeader);
  for (const auto& e : edges) csv::append_row(text, {std::string(to_string(e.kind)), e.from_id, e.to_id});
  emit("edges.csv", text);

  if (metrics_csv) {
    emit("metrics.csv", std::string(*metrics_csv));
  } else {
    fs::remove(out_dir / "metrics.csv", ec);
  }

  nlohmann::json manifest;
  manifest["format_version"] = kStoreFormatVersion;
  manifest["tool_version"] = kToolVersion;
  manifest["scanned_at"] = format_time(model.application.scanned_at);
  manifest["scanned_at_epoch"] = model.application.scanned_at.time_since_epoch().count();
  manifest["tables"] = bundle.tables;
  emit("manifest.json", manifest.dump(2) + "\n");
  return bundle;
}

SemanticModel load(const fs::path& dir) {
  SemanticModel model;

  const auto manifest_text = read_file(dir / "manifest.json", "manifest.json");
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(manifest_text);
  } catch (const nlohmann::json::exception& e) {
    throw StoreError(StoreError::Kind::MalformedRow, std::string("manifest.json: ") + e.what(), "manifest.json", 1);
  }
  if (!manifest.contains("format_version") || manifest["format_version"] != kStoreFormatVersion) {
    throw StoreError(StoreError::Kind::FormatVersionMismatch,
                     "store format version " + (manifest.contains("format_version")
                                                    ? manifest["format_version"].dump()
                                                    : std::string("(none)")) +
                         " does not match " + std::to_string(kStoreFormatVersion),
                     "manifest.json");
  }
  if (manifest.contains("scanned_at_epoch") && manifest["scanned_at_epoch"].is_number_integer()) {
    model.application.scanned_at = Timestamp(std::chrono::seconds(manifest["scanned_at_epoch"].get<std::int64_t>()));
  }

  {
    TableReader t(dir, "application.csv", kApplicationHeader);
    if (t.rows().size() != 1) throw t.malformed(2, "expected exactly one application row");
    model.application.name = t.rows()[0].fields[0];
  }
  {
    TableReader t(dir, "files.csv", kFilesHeader);
    for (const auto& r : t.rows()) {
      FileRecord f{r.fields[0], t.integer<std::uint64_t>(r, 1),
                   t.convert(r, [&] { return file_kind_from_string(r.fields[2]); })};
      if (f.kind == FileKind::JavaSource) model.application.components.push_back(f);
      model.application.artifacts.push_back(std::move(f));
    }
  }
  {
    TableReader t(dir, "packages.csv", kPackagesHeader);
    for (const auto& r : t.rows()) {
      model.packages.push_back(PackageNode{r.fields[0], r.fields[1],
                                           t.convert(r, [&] { return package_origin_from_string(r.fields[2]); }),
                                           {},
                                           t.integer<std::uint64_t>(r, 3)});
    }
  }
  {
    TableReader t(dir, "classes.csv", kClassesHeader);
    for (const auto& r : t.rows()) {
      ClassNode c;
      c.id = r.fields[0];
      c.qualified_name = r.fields[1];
      c.package_id = r.fields[2];
      c.kind = t.convert(r, [&] { return type_kind_from_string(r.fields[3]); });
      c.declaration_count = t.integer<int>(r, 4);
      c.field_count = t.integer<int>(r, 5);
      c.method_count = t.integer<int>(r, 6);
      c.statement_count = t.integer<int>(r, 7);
      c.expression_count = t.integer<int>(r, 8);
      c.file_id = r.fields[9];
      c.resolved = t.boolean(r, 10);
      model.classes.push_back(std::move(c));
    }
  }
  {
    TableReader t(dir, "methods.csv", kMethodsHeader);
    for (const auto& r : t.rows()) {
      MethodNode m;
      m.id = r.fields[0];
      m.class_id = r.fields[1];
      m.name = r.fields[2];
      m.parameter_types = r.fields[3];
      m.has_body = t.boolean(r, 4);
      m.statement_count = t.integer<int>(r, 5);
      if (!r.fields[6].empty()) m.control_paths = t.integer<int>(r, 6);
      model.methods.push_back(std::move(m));
    }
  }
  {
    TableReader t(dir, "edges.csv", kEdgesHeader);
    for (const auto& r : t.rows()) {
      model.relationships.push_back(
          Edge{t.convert(r, [&] { return edge_kind_from_string(r.fields[0]); }), r.fields[1], r.fields[2]});
    }
  }

  auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
  std::sort(model.packages.begin(), model.packages.end(), by_id);
  std::sort(model.classes.begin(), model.classes.end(), by_id);
  std::sort(model.methods.begin(), model.methods.end(), by_id);
  std::sort(model.relationships.begin(), model.relationships.end());
  for (const auto& c : model.classes) {
    auto it = std::lower_bound(model.packages.begin(), model.packages.end(), c.package_id,
                               [](const PackageNode& p, const std::string& id) { return p.id < id; });
    if (it == model.packages.end() || it->id != c.package_id) {
      throw StoreError(StoreError::Kind::DanglingEdge, "class " + c.id + " references unknown package " + c.package_id,
                       "classes.csv", 0, c.package_id);
    }
    it->member_class_ids.push_back(c.id);
  }

  if (auto dangling = find_dangling_reference(model)) {
    throw StoreError(StoreError::Kind::DanglingEdge, "reference to unknown id " + *dangling, "edges.csv", 0,
                     *dangling);
  }
  return model;
}

}  // namespace jmetrics
