#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jmetrics/model.hpp"

namespace jmetrics {

// A persisted model: one CSV file per relation plus manifest.json.
// Entity tables hold the relations; edges.csv holds the relationships.
struct StoreBundle {
  std::filesystem::path directory;
  std::vector<std::string> tables;  // file names written, in write order
};

class StoreError : public std::runtime_error {
 public:
  enum class Kind { Io, FormatVersionMismatch, MissingTable, MalformedRow, DanglingEdge };

  StoreError(Kind kind, std::string message, std::string table = {}, std::size_t line = 0, std::string id = {});

  Kind kind() const { return kind_; }
  const std::string& table() const { return table_; }
  std::size_t line() const { return line_; }
  const std::string& id() const { return id_; }

 private:
  Kind kind_;
  std::string table_;
  std::size_t line_;
  std::string id_;
};

std::string_view to_string(StoreError::Kind kind);

/// Writes the model's tables into `out_dir` (created if needed). Table bytes
/// depend only on the model; the scan timestamp is written to the manifest.
/// `metrics_csv`, when given, is stored verbatim as metrics.csv.
StoreBundle persist(const SemanticModel& model, const std::filesystem::path& out_dir,
                    std::optional<std::string_view> metrics_csv = std::nullopt);

/// Reads a bundle back. Checks the format version, table headers, row
/// shapes and referential integrity.
SemanticModel load(const std::filesystem::path& dir);

}  // namespace jmetrics
