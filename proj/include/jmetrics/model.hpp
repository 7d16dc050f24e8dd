#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jmetrics/ast.hpp"
#include "jmetrics/scanner.hpp"

namespace jmetrics {

enum class PackageOrigin { ProjectFile, Library };
enum class EdgeKind { Contains, Extends, Implements, Imports };

std::string_view to_string(PackageOrigin origin);
std::string_view to_string(EdgeKind kind);
PackageOrigin package_origin_from_string(std::string_view text);
EdgeKind edge_kind_from_string(std::string_view text);
TypeKind type_kind_from_string(std::string_view text);

// Entity ids are derived from (kind, qualified name) only, so they are
// stable across runs.
std::string package_id(std::string_view package_name);
std::string class_id(std::string_view qualified_name);
std::string application_id(std::string_view application_name);

struct ApplicationNode {
  std::string name;
  std::vector<FileRecord> artifacts;   // every inventoried file
  std::vector<FileRecord> components;  // JavaSource subset
  Timestamp scanned_at{};

  bool operator==(const ApplicationNode&) const = default;
};

struct PackageNode {
  std::string id;
  std::string name;  // "" is the default package
  PackageOrigin origin = PackageOrigin::ProjectFile;
  std::vector<std::string> member_class_ids;  // sorted
  std::uint64_t total_source_bytes = 0;

  std::string display_name() const { return name.empty() ? "(default)" : name; }
  bool operator==(const PackageNode&) const = default;
};

struct ClassNode {
  std::string id;
  std::string qualified_name;
  std::string package_id;
  TypeKind kind = TypeKind::Class;
  int declaration_count = 0;  // field variables + local variables
  int field_count = 0;
  int method_count = 0;  // methods and constructors
  int statement_count = 0;  // every statement except blocks and empty statements
  int expression_count = 0;
  std::string file_id;  // empty for placeholders
  bool resolved = true;  // false only for placeholders of external supertypes

  std::string simple_name() const;
  bool operator==(const ClassNode&) const = default;
};

struct MethodNode {
  std::string id;
  std::string class_id;
  std::string name;
  std::string parameter_types;  // comma separated, as written
  bool has_body = false;
  int statement_count = 0;
  std::optional<int> control_paths;  // absent for bodiless methods

  bool operator==(const MethodNode&) const = default;
};

struct Edge {
  EdgeKind kind = EdgeKind::Contains;
  std::string from_id;
  std::string to_id;

  auto operator<=>(const Edge&) const = default;
};

// A supertype name not yet bound to a class, with the lookup context of the
// file that mentions it.
struct TypeReference {
  std::string from_class_id;
  EdgeKind kind = EdgeKind::Extends;
  std::string name;
  std::string package_name;
  std::vector<ImportDecl> imports;

  bool operator==(const TypeReference&) const = default;
};

struct SemanticModel {
  ApplicationNode application;
  std::vector<PackageNode> packages;  // sorted by id
  std::vector<ClassNode> classes;     // sorted by id
  std::vector<MethodNode> methods;    // sorted by id
  std::vector<Edge> relationships;    // sorted
  std::vector<TypeReference> pending_references;  // empty once resolved

  const PackageNode* find_package(std::string_view id) const;
  const ClassNode* find_class(std::string_view id) const;
  std::vector<const MethodNode*> methods_of(std::string_view class_id) const;
  std::size_t count_edges(EdgeKind kind) const;

  bool operator==(const SemanticModel&) const = default;
};

class ModelError : public std::runtime_error {
 public:
  enum class Kind { DuplicateType, InheritanceCycle, UnknownUnit };

  ModelError(Kind kind, std::string message, std::vector<std::string> subjects);

  Kind kind() const { return kind_; }
  // File paths for DuplicateType, cycle members (qualified names) for
  // InheritanceCycle.
  const std::vector<std::string>& subjects() const { return subjects_; }

 private:
  Kind kind_;
  std::vector<std::string> subjects_;
};

/// Assembles the application/package/class model from the inventory and
/// the parsed units, then resolves inheritance.
SemanticModel build_model(const ProjectInventory& inventory, std::span<const CompilationUnit> units);

/// Binds every pending supertype reference (same package, then single-type
/// imports, then on-demand imports, else an unresolved placeholder) and
/// verifies that the Extends relation is acyclic.
SemanticModel resolve_inheritance(SemanticModel model);

// Referential integrity: every edge endpoint and member id exists.
// Returns the first dangling id, if any.
std::optional<std::string> find_dangling_reference(const SemanticModel& model);

}  // namespace jmetrics
