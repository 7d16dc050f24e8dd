#include "jmetrics/visualizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>

#include <fmt/format.h>

namespace jmetrics {

ColorScheme ColorScheme::defaults() {
  return ColorScheme{{
      {FileKind::JavaSource, "blue"},
      {FileKind::CompiledClass, "orange"},
      {FileKind::JarArchive, "seagreen"},
      {FileKind::Image, "pink"},
      {FileKind::OtherArtifact, "lightgray"},
  }};
}

const std::string& ColorScheme::fill_for(FileKind kind) const {
  static const std::string kFallback = "lightgray";
  auto it = fills.find(kind);
  return it == fills.end() ? kFallback : it->second;
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0;  // no "-0.000"
  return fmt::format("{:.3f}", v);
}

std::string svg_open(double width, double height) {
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      num(width), num(height));
}

// ---- treemap ----

struct TreeNode {
  std::string name;
  double weight = 0;
  std::optional<std::size_t> file;  // leaf when set
  std::vector<std::unique_ptr<TreeNode>> children;
};

TreeNode* child_dir(TreeNode& parent, const std::string& name) {
  for (auto& c : parent.children) {
    if (!c->file && c->name == name) return c.get();
  }
  parent.children.push_back(std::make_unique<TreeNode>());
  parent.children.back()->name = name;
  return parent.children.back().get();
}

double accumulate_weights(TreeNode& node) {
  if (node.file) return node.weight;
  node.weight = 0;
  for (auto& c : node.children) node.weight += accumulate_weights(*c);
  std::sort(node.children.begin(), node.children.end(), [](const auto& a, const auto& b) {
    if (a->weight != b->weight) return a->weight > b->weight;
    return a->name < b->name;
  });
  return node.weight;
}

double worst_ratio(double row_sum, double row_min, double row_max, double side) {
  const double s2 = side * side;
  const double sum2 = row_sum * row_sum;
  return std::max(s2 * row_max / sum2, sum2 / (s2 * row_min));
}

// Partitions `bounds` into rectangles with areas proportional to `weights`
// (given in decreasing order), following the squarified heuristic.
std::vector<Rect> squarify(const std::vector<double>& weights, Rect bounds) {
  const std::size_t n = weights.size();
  std::vector<Rect> out(n);
  if (n == 0) return out;

  double total = 0;
  for (double w : weights) total += w;
  std::vector<double> areas(n);
  for (std::size_t i = 0; i < n; ++i) areas[i] = weights[i] / total * bounds.area();

  Rect free = bounds;
  std::size_t i = 0;
  while (i < n) {
    const double side = std::min(free.w, free.h);
    double row_sum = areas[i];
    double row_min = areas[i];
    double row_max = areas[i];
    double worst = worst_ratio(row_sum, row_min, row_max, side);
    std::size_t j = i + 1;
    for (; j < n; ++j) {
      const double s = row_sum + areas[j];
      const double candidate = worst_ratio(s, std::min(row_min, areas[j]), std::max(row_max, areas[j]), side);
      if (candidate > worst) break;
      row_sum = s;
      row_min = std::min(row_min, areas[j]);
      row_max = std::max(row_max, areas[j]);
      worst = candidate;
    }
    const bool last_row = j == n;

    if (free.w >= free.h) {
      // Column along the left edge.
      const double width = last_row ? free.w : std::min(free.w, row_sum / free.h);
      double y = free.y;
      for (std::size_t k = i; k < j; ++k) {
        const double h = k + 1 == j ? free.y + free.h - y : areas[k] / width;
        out[k] = Rect{free.x, y, width, std::max(0.0, h)};
        y += h;
      }
      free.x += width;
      free.w = std::max(0.0, free.w - width);
    } else {
      // Row along the top edge.
      const double height = last_row ? free.h : std::min(free.h, row_sum / free.w);
      double x = free.x;
      for (std::size_t k = i; k < j; ++k) {
        const double w = k + 1 == j ? free.x + free.w - x : areas[k] / height;
        out[k] = Rect{x, free.y, std::max(0.0, w), height};
        x += w;
      }
      free.y += height;
      free.h = std::max(0.0, free.h - height);
    }
    i = j;
  }
  return out;
}

void layout_node(const TreeNode& node, Rect rect, std::span<const FileRecord> files, const ColorScheme& scheme,
                 std::vector<TreemapCell>& cells) {
  if (node.file) {
    const auto& f = files[*node.file];
    cells.push_back(TreemapCell{f, rect, scheme.fill_for(f.kind)});
    return;
  }
  std::vector<double> weights;
  weights.reserve(node.children.size());
  for (const auto& c : node.children) weights.push_back(c->weight);
  const auto rects = squarify(weights, rect);
  for (std::size_t k = 0; k < node.children.size(); ++k) layout_node(*node.children[k], rects[k], files, scheme, cells);
}

// ---- charts ----

double nice_ceiling(double max) {
  if (max <= 0) return 1;
  const double magnitude = std::pow(10.0, std::floor(std::log10(max)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * magnitude >= max) return m * magnitude;
  }
  return 10 * magnitude;
}

std::string tick_label(double v) { return fmt::format("{:g}", v); }

std::optional<double> value_of(const MetricReport& report, std::string_view metric, std::string_view subject = {}) {
  for (const auto& v : report.values) {
    if (v.metric_id == metric && (subject.empty() || v.subject_id == subject)) return v.value;
  }
  return std::nullopt;
}

std::string label_of(std::string_view subject_id) {
  auto colon = subject_id.find(':');
  auto name = std::string(colon == std::string_view::npos ? subject_id : subject_id.substr(colon + 1));
  return name.empty() ? "(default)" : name;
}

}  // namespace

std::string emit_package_graph(const SemanticModel& model) {
  std::string out = "digraph packages {\n";
  out += "  graph [rankdir=LR, label=\"Package relationships\", labelloc=t];\n";
  out += "  node [shape=folder, fontname=\"Helvetica\"];\n";
  for (const auto& p : model.packages) {
    out += "  " + dot_quote(p.id) + " [label=" + dot_quote(p.display_name());
    if (p.origin == PackageOrigin::Library) out += ", style=dashed";
    out += "];\n";
  }
  for (const auto& e : model.relationships) {
    if (e.kind != EdgeKind::Imports) continue;
    out += "  " + dot_quote(e.from_id) + " -> " + dot_quote(e.to_id) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string emit_class_graph(const SemanticModel& model) {
  std::string out = "digraph classes {\n";
  out += "  graph [rankdir=BT, label=\"Class relationships\", labelloc=t, compound=true];\n";
  out += "  node [shape=box, fontname=\"Helvetica\"];\n";
  std::size_t cluster = 0;
  for (const auto& p : model.packages) {
    if (p.member_class_ids.empty()) continue;
    const char* color = kClusterPalette[cluster % kClusterPalette.size()];
    out += fmt::format("  subgraph cluster_{} {{\n", cluster++);
    out += "    label=" + dot_quote(p.display_name()) + ";\n";
    out += fmt::format("    color=\"{}\";\n", color);
    if (p.origin == PackageOrigin::Library) out += "    style=dashed;\n";
    for (const auto& id : p.member_class_ids) {
      const auto* c = model.find_class(id);
      if (!c) continue;
      out += "    " + dot_quote(c->id) + " [label=" + dot_quote(c->simple_name());
      if (c->kind == TypeKind::Interface) out += ", shape=ellipse";
      if (!c->resolved) out += ", style=dashed, color=gray50, fontcolor=gray50";
      out += "];\n";
    }
    out += "  }\n";
  }
  for (const auto& e : model.relationships) {
    if (e.kind == EdgeKind::Extends) {
      out += "  " + dot_quote(e.from_id) + " -> " + dot_quote(e.to_id) + " [style=solid, arrowhead=empty];\n";
    } else if (e.kind == EdgeKind::Implements) {
      out += "  " + dot_quote(e.from_id) + " -> " + dot_quote(e.to_id) + " [style=dotted, arrowhead=empty];\n";
    }
  }
  out += "}\n";
  return out;
}

TreemapLayout layout_treemap(std::span<const FileRecord> files, Rect bounds, const ColorScheme& scheme) {
  if (!(bounds.w > 0 && bounds.h > 0)) throw std::invalid_argument("treemap bounds must have positive area");
  TreemapLayout layout{bounds, {}};
  if (files.empty()) return layout;

  TreeNode root;
  for (std::size_t i = 0; i < files.size(); ++i) {
    TreeNode* dir = &root;
    std::string_view path = files[i].path;
    std::size_t slash;
    while ((slash = path.find('/')) != std::string_view::npos) {
      dir = child_dir(*dir, std::string(path.substr(0, slash)));
      path.remove_prefix(slash + 1);
    }
    auto leaf = std::make_unique<TreeNode>();
    leaf->name = std::string(path);
    leaf->weight = static_cast<double>(std::max(files[i].size, kMinTreemapWeight));
    leaf->file = i;
    dir->children.push_back(std::move(leaf));
  }
  accumulate_weights(root);
  layout_node(root, bounds, files, scheme, layout.cells);
  std::sort(layout.cells.begin(), layout.cells.end(),
            [](const TreemapCell& a, const TreemapCell& b) { return a.file.path < b.file.path; });
  return layout;
}

TreemapLayout layout_treemap(const ProjectInventory& inventory, Rect bounds, const ColorScheme& scheme) {
  return layout_treemap(std::span<const FileRecord>(inventory.files), bounds, scheme);
}

std::string emit_treemap_svg(const TreemapLayout& layout, const ColorScheme& scheme) {
  const auto& b = layout.bounds;
  std::string out = svg_open(b.x + b.w, b.y + b.h);
  for (const auto& cell : layout.cells) {
    const auto& r = cell.rect;
    out += fmt::format(
        "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"white\" stroke-width=\"0.5\">"
        "<title>{} ({} bytes)</title></rect>\n",
        num(r.x), num(r.y), num(r.w), num(r.h), xml_escape(scheme.fill_for(cell.file.kind)),
        xml_escape(cell.file.path), cell.file.size);
  }
  out += "</svg>\n";
  return out;
}

std::string emit_package_bar_chart(const MetricReport& report) {
  constexpr double kWidth = 720, kHeight = 420;
  constexpr double kLeft = 70, kRight = 650, kTop = 50, kBottom = 340;
  constexpr double kPlotW = kRight - kLeft, kPlotH = kBottom - kTop;
  constexpr int kTicks = 5;

  struct Group {
    std::string subject;
    double classes = 0;
    double bytes = 0;
  };
  std::vector<Group> groups;
  for (const auto& v : report.values) {
    if (v.metric_id == metric_ids::kPackageClasses) groups.push_back({v.subject_id, v.value, 0});
  }
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.subject < b.subject; });
  double max_classes = 0, max_bytes = 0;
  for (auto& g : groups) {
    g.bytes = value_of(report, metric_ids::kPackageBytes, g.subject).value_or(0);
    max_classes = std::max(max_classes, g.classes);
    max_bytes = std::max(max_bytes, g.bytes);
  }
  const double class_axis = nice_ceiling(max_classes);
  const double byte_axis = nice_ceiling(max_bytes);

  std::string out = svg_open(kWidth, kHeight);
  out += "  <title>Package overview</title>\n";
  out += fmt::format("  <text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">"
                     "Package overview: classes and size</text>\n",
                     num(kWidth / 2));
  out += fmt::format("  <line class=\"axis\" x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n",
                     num(kLeft), num(kTop), num(kBottom));
  out += fmt::format("  <line class=\"axis\" x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n",
                     num(kRight), num(kTop), num(kBottom));
  out += fmt::format("  <line class=\"axis\" x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"black\"/>\n",
                     num(kLeft), num(kRight), num(kBottom));
  for (int t = 0; t <= kTicks; ++t) {
    const double y = kBottom - kPlotH * t / kTicks;
    out += fmt::format("  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">{}"
                       "</text>\n",
                       num(kLeft - 6), num(y + 3), tick_label(class_axis * t / kTicks));
    out += fmt::format("  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"start\">{}"
                       "</text>\n",
                       num(kRight + 6), num(y + 3), tick_label(byte_axis * t / kTicks));
  }
  out += fmt::format("  <text x=\"16\" y=\"{0}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
                     "transform=\"rotate(-90 16 {0})\">classes</text>\n",
                     num((kTop + kBottom) / 2));
  out += fmt::format("  <text x=\"{0}\" y=\"{1}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
                     "transform=\"rotate(90 {0} {1})\">size (bytes)</text>\n",
                     num(kWidth - 14), num((kTop + kBottom) / 2));

  if (!groups.empty()) {
    const double group_w = kPlotW / static_cast<double>(groups.size());
    const double bar_w = group_w * 0.35;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const auto& g = groups[i];
      const double x0 = kLeft + group_w * static_cast<double>(i) + group_w * 0.12;
      const double h_classes = g.classes / class_axis * kPlotH;
      const double h_bytes = g.bytes / byte_axis * kPlotH;
      const auto label = xml_escape(label_of(g.subject));
      out += fmt::format(
          "  <rect class=\"bar classes\" data-package=\"{}\" data-value=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" "
          "height=\"{}\" fill=\"steelblue\"><title>{}: {} classes</title></rect>\n",
          label, tick_label(g.classes), num(x0), num(kBottom - h_classes), num(bar_w), num(h_classes), label,
          tick_label(g.classes));
      out += fmt::format(
          "  <rect class=\"bar bytes\" data-package=\"{}\" data-value=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" "
          "height=\"{}\" fill=\"darkorange\"><title>{}: {} bytes</title></rect>\n",
          label, tick_label(g.bytes), num(x0 + bar_w + group_w * 0.06), num(kBottom - h_bytes), num(bar_w),
          num(h_bytes), label, tick_label(g.bytes));
      out += fmt::format("  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"10\" "
                         "text-anchor=\"middle\">{}</text>\n",
                         num(kLeft + group_w * (static_cast<double>(i) + 0.5)), num(kBottom + 16), label);
    }
  }
  out += fmt::format("  <rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"steelblue\"/>\n", num(kLeft),
                     num(kHeight - 40));
  out += fmt::format("  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\">classes</text>\n",
                     num(kLeft + 14), num(kHeight - 31));
  out += fmt::format("  <rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"darkorange\"/>\n",
                     num(kLeft + 90), num(kHeight - 40));
  out += fmt::format("  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\">size (bytes)</text>\n",
                     num(kLeft + 104), num(kHeight - 31));
  out += "</svg>\n";
  return out;
}

std::string emit_artifact_summary_chart(const MetricReport& report) {
  constexpr double kWidth = 720, kHeight = 260;
  constexpr double kLeft = 170, kRight = 660, kTop = 50;
  constexpr double kRowH = 40, kBarH = 24;
  constexpr double kPlotW = kRight - kLeft;
  constexpr int kTicks = 5;

  const std::array<std::pair<std::string_view, const char*>, 4> rows{{
      {metric_ids::kArtifacts, "artifacts"},
      {metric_ids::kComponents, "components"},
      {metric_ids::kPackages, "packages"},
      {metric_ids::kClasses, "classes"},
  }};
  std::array<double, 4> values{};
  double max_value = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    values[i] = value_of(report, rows[i].first).value_or(0);
    max_value = std::max(max_value, values[i]);
  }
  const double axis = nice_ceiling(max_value);
  const double bottom = kTop + kRowH * static_cast<double>(rows.size());

  std::string out = svg_open(kWidth, kHeight);
  out += "  <title>Source artifacts</title>\n";
  out += fmt::format("  <text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">"
                     "Source artifacts</text>\n",
                     num(kWidth / 2));
  out += fmt::format("  <line class=\"axis\" x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n",
                     num(kLeft), num(kTop), num(bottom));
  out += fmt::format("  <line class=\"axis\" x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"black\"/>\n",
                     num(kLeft), num(kRight), num(bottom));
  for (int t = 0; t <= kTicks; ++t) {
    const double x = kLeft + kPlotW * t / kTicks;
    out += fmt::format("  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"10\" "
                       "text-anchor=\"middle\">{}</text>\n",
                       num(x), num(bottom + 14), tick_label(axis * t / kTicks));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double y = kTop + kRowH * static_cast<double>(i) + (kRowH - kBarH) / 2;
    const double len = values[i] / axis * kPlotW;
    out += fmt::format("  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" "
                       "text-anchor=\"end\">{}</text>\n",
                       num(kLeft - 8), num(y + kBarH / 2 + 4), rows[i].second);
    out += fmt::format(
        "  <rect class=\"bar\" data-metric=\"{}\" data-value=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" "
        "fill=\"steelblue\"><title>{}: {}</title></rect>\n",
        rows[i].first, tick_label(values[i]), num(kLeft), num(y), num(len), num(kBarH), rows[i].second,
        tick_label(values[i]));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace jmetrics
