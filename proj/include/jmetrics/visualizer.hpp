#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "jmetrics/measurer.hpp"
#include "jmetrics/model.hpp"
#include "jmetrics/scanner.hpp"

namespace jmetrics {

struct Rect {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;

  double area() const { return w * h; }
  bool operator==(const Rect&) const = default;
};

struct ColorScheme {
  std::map<FileKind, std::string> fills;

  // Java sources blue, compiled classes orange, images pink.
  static ColorScheme defaults();
  const std::string& fill_for(FileKind kind) const;
};

struct TreemapCell {
  FileRecord file;
  Rect rect;
  std::string fill;
  bool operator==(const TreemapCell&) const = default;
};

struct TreemapLayout {
  Rect bounds;
  std::vector<TreemapCell> cells;
};

// Zero-byte files are laid out with this weight.
inline constexpr std::uint64_t kMinTreemapWeight = 1;

// Palette for package clusters in the class graph.
inline constexpr std::array<const char*, 12> kClusterPalette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

/// DOT digraph of packages and their import relationships. Library
/// packages are dashed.
std::string emit_package_graph(const SemanticModel& model);

/// DOT digraph of classes clustered by package. Extends edges are solid,
/// Implements edges dotted, unresolved placeholders dashed and grey.
std::string emit_class_graph(const SemanticModel& model);

/// Squarified treemap that nests directories as regions and files as leaf
/// cells, with each cell's area proportional to its file's weight.
TreemapLayout layout_treemap(std::span<const FileRecord> files, Rect bounds,
                             const ColorScheme& scheme = ColorScheme::defaults());
TreemapLayout layout_treemap(const ProjectInventory& inventory, Rect bounds,
                             const ColorScheme& scheme = ColorScheme::defaults());

std::string emit_treemap_svg(const TreemapLayout& layout, const ColorScheme& scheme = ColorScheme::defaults());

// Grouped vertical bars per package: classes on the left axis, source bytes
// on the right axis.
std::string emit_package_bar_chart(const MetricReport& report);

// Horizontal bars for artifact, component, package and class counts.
std::string emit_artifact_summary_chart(const MetricReport& report);

}  // namespace jmetrics
