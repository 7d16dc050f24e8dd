#include "jmetrics/scanner.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <system_error>

namespace jmetrics {

namespace fs = std::filesystem;

std::string_view to_string(FileKind kind) {
  switch (kind) {
    case FileKind::JavaSource: return "JavaSource";
    case FileKind::CompiledClass: return "CompiledClass";
    case FileKind::JarArchive: return "JarArchive";
    case FileKind::Image: return "Image";
    case FileKind::OtherArtifact: return "OtherArtifact";
  }
  return "OtherArtifact";
}

FileKind file_kind_from_string(std::string_view text) {
  for (auto kind : {FileKind::JavaSource, FileKind::CompiledClass, FileKind::JarArchive,
                    FileKind::Image, FileKind::OtherArtifact}) {
    if (to_string(kind) == text) return kind;
  }
  throw std::invalid_argument("unknown file kind: " + std::string(text));
}

std::vector<FileRecord> ProjectInventory::components() const {
  std::vector<FileRecord> out;
  std::copy_if(files.begin(), files.end(), std::back_inserter(out),
               [](const FileRecord& f) { return f.kind == FileKind::JavaSource; });
  return out;
}

FileKind classify_file(std::string_view path, std::uint64_t /*size*/) {
  auto slash = path.find_last_of("/\\");
  auto name = slash == std::string_view::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot == std::string_view::npos || dot == 0) return FileKind::OtherArtifact;

  std::string ext;
  for (char c : name.substr(dot + 1)) ext.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

  if (ext == "java") return FileKind::JavaSource;
  if (ext == "class") return FileKind::CompiledClass;
  if (ext == "jar") return FileKind::JarArchive;
  static constexpr std::array<std::string_view, 5> kImageExts{"png", "jpg", "jpeg", "gif", "bmp"};
  if (std::find(kImageExts.begin(), kImageExts.end(), ext) != kImageExts.end()) return FileKind::Image;
  return FileKind::OtherArtifact;
}

ProjectInventory scan_project(const fs::path& root, const ScanOptions& options) {
  std::error_code ec;
  auto status = fs::status(root, ec);
  if (ec || !fs::is_directory(status)) throw RootNotFound(root.string());

  ProjectInventory inventory;
  inventory.root = root.string();
  inventory.scanned_at = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());

  auto note_skip = [&](const std::string& what) {
    if (options.skipped) options.skipped->push_back(what);
  };

  std::optional<fs::path> excluded;
  if (options.exclude) {
    auto canonical = fs::weakly_canonical(*options.exclude, ec);
    if (!ec) excluded = canonical;
    ec.clear();
  }

  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw RootNotFound(root.string());

  for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) {
      note_skip("unreadable entry: " + ec.message());
      ec.clear();
      continue;
    }
    const auto& entry = *it;
    const auto name = entry.path().filename().string();
    if (!name.empty() && name.front() == '.') {
      if (entry.is_directory(ec)) it.disable_recursion_pending();
      continue;
    }
    if (entry.is_symlink(ec)) {
      note_skip("symlink not followed: " + fs::relative(entry.path(), root).generic_string());
      it.disable_recursion_pending();
      continue;
    }
    if (entry.is_directory(ec)) {
      if (excluded && fs::weakly_canonical(entry.path(), ec) == *excluded) it.disable_recursion_pending();
      ec.clear();
      continue;
    }
    if (!entry.is_regular_file(ec)) continue;

    FileRecord record;
    record.path = entry.path().lexically_relative(root).generic_string();
    record.size = entry.file_size(ec);
    if (ec) {
      note_skip("cannot stat: " + record.path);
      ec.clear();
      continue;
    }
    record.kind = classify_file(record.path, record.size);
    inventory.files.push_back(std::move(record));
  }

  std::sort(inventory.files.begin(), inventory.files.end(),
            [](const FileRecord& a, const FileRecord& b) { return a.path < b.path; });
  return inventory;
}

}  // namespace jmetrics
