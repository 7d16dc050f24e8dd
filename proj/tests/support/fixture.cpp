#include "fixture.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "jmetrics/parser.hpp"

namespace jmtest {

fs::path fixtures_dir() { return JMETRICS_FIXTURES_DIR; }
fs::path printshop_dir() { return fixtures_dir() / "printshop"; }
fs::path broken_dir() { return fixtures_dir() / "broken"; }

nlohmann::json printshop_expected() {
  return nlohmann::json::parse(read_file(fixtures_dir() / "printshop.expected.json"));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

TempDir::TempDir(std::string_view tag) {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  for (;;) {
    auto name = std::string(tag) + "-" + std::to_string(rd()) + "-" + std::to_string(counter++);
    path_ = fs::temp_directory_path() / name;
    if (fs::create_directory(path_)) break;
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

ParsedProject model_from_sources(const SourceSet& sources, std::string root) {
  ParsedProject p;
  p.inventory.root = std::move(root);
  p.inventory.scanned_at = std::chrono::time_point_cast<std::chrono::seconds>(std::chrono::system_clock::now());
  for (const auto& [path, text] : sources) {
    p.inventory.files.push_back({path, text.size(), jmetrics::classify_file(path)});
  }
  std::sort(p.inventory.files.begin(), p.inventory.files.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });
  for (const auto& [path, text] : sources) {
    if (jmetrics::classify_file(path) == jmetrics::FileKind::JavaSource) {
      p.units.push_back(jmetrics::parse_source(text, path));
    }
  }
  p.model = jmetrics::build_model(p.inventory, p.units);
  return p;
}

ParsedProject model_from_directory(const fs::path& root) {
  ParsedProject p;
  p.inventory = jmetrics::scan_project(root);
  for (const auto& f : p.inventory.components()) {
    p.units.push_back(jmetrics::parse_source(read_file(root / f.path), f.path));
  }
  p.model = jmetrics::build_model(p.inventory, p.units);
  return p;
}

}  // namespace jmtest
