#include "jmetrics/model.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <unordered_map>

#include "jmetrics/complexity.hpp"

namespace jmetrics {

std::string_view to_string(PackageOrigin origin) {
  return origin == PackageOrigin::ProjectFile ? "ProjectFile" : "Library";
}

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Contains: return "Contains";
    case EdgeKind::Extends: return "Extends";
    case EdgeKind::Implements: return "Implements";
    case EdgeKind::Imports: return "Imports";
  }
  return "?";
}

PackageOrigin package_origin_from_string(std::string_view text) {
  if (text == "ProjectFile") return PackageOrigin::ProjectFile;
  if (text == "Library") return PackageOrigin::Library;
  throw std::invalid_argument("unknown package origin: " + std::string(text));
}

EdgeKind edge_kind_from_string(std::string_view text) {
  for (auto k : {EdgeKind::Contains, EdgeKind::Extends, EdgeKind::Implements, EdgeKind::Imports}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown edge kind: " + std::string(text));
}

TypeKind type_kind_from_string(std::string_view text) {
  if (text == "Class") return TypeKind::Class;
  if (text == "Interface") return TypeKind::Interface;
  throw std::invalid_argument("unknown type kind: " + std::string(text));
}

std::string package_id(std::string_view package_name) { return "pkg:" + std::string(package_name); }
std::string class_id(std::string_view qualified_name) { return "cls:" + std::string(qualified_name); }
std::string application_id(std::string_view application_name) { return "app:" + std::string(application_name); }

std::string ClassNode::simple_name() const {
  auto dot = qualified_name.rfind('.');
  return dot == std::string::npos ? qualified_name : qualified_name.substr(dot + 1);
}

const PackageNode* SemanticModel::find_package(std::string_view id) const {
  auto it = std::lower_bound(packages.begin(), packages.end(), id,
                             [](const PackageNode& p, std::string_view v) { return p.id < v; });
  return it != packages.end() && it->id == id ? &*it : nullptr;
}

const ClassNode* SemanticModel::find_class(std::string_view id) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), id,
                             [](const ClassNode& c, std::string_view v) { return c.id < v; });
  return it != classes.end() && it->id == id ? &*it : nullptr;
}

std::vector<const MethodNode*> SemanticModel::methods_of(std::string_view id) const {
  std::vector<const MethodNode*> out;
  for (const auto& m : methods) {
    if (m.class_id == id) out.push_back(&m);
  }
  return out;
}

std::size_t SemanticModel::count_edges(EdgeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(relationships.begin(), relationships.end(), [&](const Edge& e) { return e.kind == kind; }));
}

ModelError::ModelError(Kind kind, std::string message, std::vector<std::string> subjects)
    : std::runtime_error(std::move(message)), kind_(kind), subjects_(std::move(subjects)) {}

namespace {

std::string qualify(std::string_view package_name, std::string_view simple) {
  if (package_name.empty()) return std::string(simple);
  return std::string(package_name) + "." + std::string(simple);
}

std::string package_of(std::string_view qualified_name) {
  auto dot = qualified_name.rfind('.');
  return dot == std::string_view::npos ? std::string() : std::string(qualified_name.substr(0, dot));
}

std::string application_name(const std::string& root) {
  namespace fs = std::filesystem;
  fs::path p = fs::path(root).lexically_normal();
  if (p.filename().empty()) p = p.parent_path();
  auto name = p.filename().string();
  if (name.empty() || name == "." || name == "..") {
    std::error_code ec;
    auto abs = fs::weakly_canonical(fs::path(root), ec);
    name = ec ? std::string() : abs.filename().string();
  }
  return name.empty() ? "application" : name;
}

// Per-type tallies of the tree.
class TypeTally : public AstVisitor {
 public:
  int declarations = 0;
  int statements = 0;
  int expressions = 0;

  void visit(const Stmt& s) override {
    if (!s.as<BlockStmt>() && !s.as<EmptyStmt>()) ++statements;
    if (const auto* d = s.as<LocalDeclStmt>()) declarations += static_cast<int>(d->decl.names.size());
  }
  void visit(const Expr&) override { ++expressions; }
};

std::string join_parameter_types(const MethodDecl& m) {
  std::string out;
  for (std::size_t i = 0; i < m.params.size(); ++i) {
    if (i) out += ",";
    out += m.params[i].type_name;
  }
  return out;
}

template <typename T>
void sort_by_id(std::vector<T>& items) {
  std::sort(items.begin(), items.end(), [](const T& a, const T& b) { return a.id < b.id; });
}

void finalize(SemanticModel& model) {
  sort_by_id(model.packages);
  sort_by_id(model.classes);
  sort_by_id(model.methods);

  std::map<std::string, std::vector<std::string>> members;
  for (const auto& c : model.classes) members[c.package_id].push_back(c.id);
  for (auto& p : model.packages) {
    p.member_class_ids = members[p.id];
    std::sort(p.member_class_ids.begin(), p.member_class_ids.end());
  }

  auto& edges = model.relationships;
  edges.erase(std::remove_if(edges.begin(), edges.end(), [](const Edge& e) { return e.kind == EdgeKind::Contains; }),
              edges.end());
  for (const auto& c : model.classes) edges.push_back(Edge{EdgeKind::Contains, c.package_id, c.id});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void verify_acyclic(const SemanticModel& model) {
  std::unordered_map<std::string, std::string> parent;
  for (const auto& e : model.relationships) {
    if (e.kind != EdgeKind::Extends) continue;
    if (!parent.emplace(e.from_id, e.to_id).second) {
      throw ModelError(ModelError::Kind::InheritanceCycle, "class has more than one superclass: " + e.from_id,
                       {e.from_id});
    }
  }

  enum class Mark { None, Active, Done };
  std::unordered_map<std::string, Mark> mark;
  for (const auto& c : model.classes) {
    std::vector<std::string> chain;
    for (std::string cur = c.id;;) {
      const Mark m = mark[cur];
      if (m == Mark::Done) break;
      if (m == Mark::Active) {
        std::vector<std::string> cycle(std::find(chain.begin(), chain.end(), cur), chain.end());
        // Start at the smallest member for deterministic reporting.
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
        std::vector<std::string> names;
        std::string text;
        for (const auto& id : cycle) {
          const auto* node = model.find_class(id);
          names.push_back(node ? node->qualified_name : id);
          text += (text.empty() ? "" : " -> ") + names.back();
        }
        throw ModelError(ModelError::Kind::InheritanceCycle, "inheritance cycle: " + text, names);
      }
      mark[cur] = Mark::Active;
      chain.push_back(cur);
      auto it = parent.find(cur);
      if (it == parent.end()) break;
      cur = it->second;
    }
    for (const auto& id : chain) mark[id] = Mark::Done;
  }
}

}  // namespace

SemanticModel build_model(const ProjectInventory& inventory, std::span<const CompilationUnit> units) {
  SemanticModel model;
  model.application.name = application_name(inventory.root);
  model.application.artifacts = inventory.files;
  model.application.components = inventory.components();
  model.application.scanned_at = inventory.scanned_at;

  std::unordered_map<std::string, std::uint64_t> source_size;
  for (const auto& f : model.application.components) source_size[f.path] = f.size;

  std::map<std::string, std::uint64_t> declared;  // package name -> bytes
  for (const auto& unit : units) {
    auto it = source_size.find(unit.file_id);
    if (it == source_size.end()) {
      throw ModelError(ModelError::Kind::UnknownUnit, "unit is not a Java source in the inventory: " + unit.file_id,
                       {unit.file_id});
    }
    declared[unit.package_name.value_or("")] += it->second;
  }
  for (const auto& [name, bytes] : declared) {
    model.packages.push_back(PackageNode{package_id(name), name, PackageOrigin::ProjectFile, {}, bytes});
  }

  std::set<std::string> library;
  std::set<std::pair<std::string, std::string>> import_edges;
  std::unordered_map<std::string, std::string> seen_types;  // qualified name -> file

  for (const auto& unit : units) {
    const std::string pkg = unit.package_name.value_or("");

    for (const auto& imp : unit.imports) {
      const std::string target = imp.on_demand ? imp.name : package_of(imp.name);
      if (target.empty()) continue;
      if (!declared.count(target)) library.insert(target);
      if (target != pkg) import_edges.emplace(package_id(pkg), package_id(target));
    }

    for (const auto& type : unit.types) {
      ClassNode node;
      node.qualified_name = qualify(pkg, type.name);
      node.id = class_id(node.qualified_name);
      node.package_id = package_id(pkg);
      node.kind = type.kind;
      node.file_id = unit.file_id;

      if (auto [it, inserted] = seen_types.emplace(node.qualified_name, unit.file_id); !inserted) {
        throw ModelError(ModelError::Kind::DuplicateType,
                         "duplicate type " + node.qualified_name + " in " + it->second + " and " + unit.file_id,
                         {it->second, unit.file_id});
      }

      TypeTally tally;
      for (const auto& f : type.fields) {
        node.field_count += static_cast<int>(f.names.size());
        walk(f, tally);
      }
      std::set<std::string> method_ids;
      for (const auto& m : type.methods) {
        MethodNode mn;
        mn.class_id = node.id;
        mn.name = m.name;
        mn.parameter_types = join_parameter_types(m);
        mn.id = "mth:" + node.qualified_name + "." + m.name + "(" + mn.parameter_types + ")";
        for (int n = 2; method_ids.count(mn.id); ++n) {
          mn.id = "mth:" + node.qualified_name + "." + m.name + "(" + mn.parameter_types + ")#" + std::to_string(n);
        }
        method_ids.insert(mn.id);
        mn.has_body = m.body.has_value();
        if (m.body) {
          TypeTally method_tally;
          walk(*m.body, method_tally);
          mn.statement_count = method_tally.statements;
          walk(*m.body, tally);
        }
        mn.control_paths = compute_control_paths(m);
        model.methods.push_back(std::move(mn));
      }
      node.method_count = static_cast<int>(type.methods.size());
      node.declaration_count = node.field_count + tally.declarations;
      node.statement_count = tally.statements;
      node.expression_count = tally.expressions;

      if (type.superclass_name) {
        model.pending_references.push_back(
            TypeReference{node.id, EdgeKind::Extends, *type.superclass_name, pkg, unit.imports});
      }
      for (const auto& iface : type.interface_names) {
        model.pending_references.push_back(TypeReference{node.id, EdgeKind::Implements, iface, pkg, unit.imports});
      }
      model.classes.push_back(std::move(node));
    }
  }

  for (const auto& name : library) {
    model.packages.push_back(PackageNode{package_id(name), name, PackageOrigin::Library, {}, 0});
  }
  for (const auto& [from, to] : import_edges) model.relationships.push_back(Edge{EdgeKind::Imports, from, to});

  finalize(model);
  return resolve_inheritance(std::move(model));
}

SemanticModel resolve_inheritance(SemanticModel model) {
  std::set<std::string> known;
  for (const auto& c : model.classes) {
    if (c.resolved) known.insert(c.qualified_name);
  }
  std::set<std::string> project_packages;
  for (const auto& p : model.packages) {
    if (p.origin == PackageOrigin::ProjectFile) project_packages.insert(p.name);
  }

  auto ensure_placeholder = [&](const std::string& qualified, EdgeKind via) {
    const auto id = class_id(qualified);
    if (std::any_of(model.classes.begin(), model.classes.end(), [&](const ClassNode& c) { return c.id == id; })) {
      return id;
    }
    const auto pkg = package_of(qualified);
    if (std::none_of(model.packages.begin(), model.packages.end(),
                     [&](const PackageNode& p) { return p.name == pkg; })) {
      model.packages.push_back(PackageNode{package_id(pkg), pkg, PackageOrigin::Library, {}, 0});
    }
    ClassNode node;
    node.id = id;
    node.qualified_name = qualified;
    node.package_id = package_id(pkg);
    node.kind = via == EdgeKind::Extends ? TypeKind::Class : TypeKind::Interface;
    node.resolved = false;
    model.classes.push_back(std::move(node));
    return id;
  };

  for (const auto& ref : model.pending_references) {
    std::string target;
    if (ref.name.find('.') != std::string::npos) {
      target = ref.name;
    } else if (known.count(qualify(ref.package_name, ref.name))) {
      target = qualify(ref.package_name, ref.name);
    } else {
      for (const auto& imp : ref.imports) {
        if (!imp.on_demand && imp.name.size() > ref.name.size() &&
            imp.name.ends_with("." + ref.name)) {
          target = imp.name;
          break;
        }
      }
      if (target.empty()) {
        for (const auto& imp : ref.imports) {
          if (imp.on_demand && known.count(imp.name + "." + ref.name)) {
            target = imp.name + "." + ref.name;
            break;
          }
        }
      }
      if (target.empty()) {
        // External and unqualified: attribute it to the first on-demand
        // library import, else to the implicitly imported java.lang.
        std::string home = "java.lang";
        for (const auto& imp : ref.imports) {
          if (imp.on_demand && !project_packages.count(imp.name)) {
            home = imp.name;
            break;
          }
        }
        target = home + "." + ref.name;
      }
    }
    const auto to = known.count(target) ? class_id(target) : ensure_placeholder(target, ref.kind);
    model.relationships.push_back(Edge{ref.kind, ref.from_class_id, to});
  }
  model.pending_references.clear();

  finalize(model);

  verify_acyclic(model);
  return model;
}

std::optional<std::string> find_dangling_reference(const SemanticModel& model) {
  auto exists = [&](const std::string& id) {
    return model.find_class(id) != nullptr || model.find_package(id) != nullptr;
  };
  for (const auto& e : model.relationships) {
    if (!exists(e.from_id)) return e.from_id;
    if (!exists(e.to_id)) return e.to_id;
  }
  for (const auto& c : model.classes) {
    if (!model.find_package(c.package_id)) return c.package_id;
  }
  for (const auto& p : model.packages) {
    for (const auto& id : p.member_class_ids) {
      if (!model.find_class(id)) return id;
    }
  }
  for (const auto& m : model.methods) {
    if (!model.find_class(m.class_id)) return m.class_id;
  }
  return std::nullopt;
}

}  // namespace jmetrics
