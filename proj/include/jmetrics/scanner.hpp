#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jmetrics {

enum class FileKind { JavaSource, CompiledClass, JarArchive, Image, OtherArtifact };

std::string_view to_string(FileKind kind);
FileKind file_kind_from_string(std::string_view text);

// One inventoried file. `path` is relative to the scan root and always
// uses '/' as separator.
struct FileRecord {
  std::string path;
  std::uint64_t size = 0;
  FileKind kind = FileKind::OtherArtifact;

  bool operator==(const FileRecord&) const = default;
};

using Timestamp = std::chrono::sys_seconds;

struct ProjectInventory {
  std::string root;
  std::vector<FileRecord> files;  // sorted by path
  Timestamp scanned_at{};

  // Files the parser consumes (JavaSource only).
  std::vector<FileRecord> components() const;
};

class RootNotFound : public std::runtime_error {
 public:
  explicit RootNotFound(const std::string& root)
      : std::runtime_error("project root not found or unreadable: " + root) {}
};

// Extension-based and case-insensitive; never fails.
FileKind classify_file(std::string_view path, std::uint64_t size = 0);

struct ScanOptions {
  // Receives one line per skipped entry (symlinks, unreadable entries).
  std::vector<std::string>* skipped = nullptr;
  // Subtree left out of the walk (e.g. an output directory inside the root).
  std::optional<std::filesystem::path> exclude;
};

/// Walks `root` recursively and returns every regular file it contains.
///
/// Entries whose name starts with '.' are skipped together with their
/// subtrees, and symbolic links are never followed. An empty directory
/// yields an empty inventory.
ProjectInventory scan_project(const std::filesystem::path& root, const ScanOptions& options = {});

}  // namespace jmetrics
