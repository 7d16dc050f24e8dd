#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "jmetrics/ast.hpp"
#include "jmetrics/model.hpp"
#include "jmetrics/scanner.hpp"

namespace jmtest {

namespace fs = std::filesystem;

fs::path fixtures_dir();
fs::path printshop_dir();
fs::path broken_dir();
nlohmann::json printshop_expected();

std::string read_file(const fs::path& path);
void write_file(const fs::path& path, std::string_view text);

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(std::string_view tag = "jmetrics");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const fs::path& rel) const { return path_ / rel; }

 private:
  fs::path path_;
};

// Source files given as (relative path, text).
using SourceSet = std::vector<std::pair<std::string, std::string>>;

// In-memory inventory + parse + build_model, without touching the disk.
struct ParsedProject {
  jmetrics::ProjectInventory inventory;
  std::vector<jmetrics::CompilationUnit> units;
  jmetrics::SemanticModel model;
};

ParsedProject model_from_sources(const SourceSet& sources, std::string root = "app");

// Scans, parses and models a directory on disk.
ParsedProject model_from_directory(const fs::path& root);

}  // namespace jmtest
