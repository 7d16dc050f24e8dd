#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jmetrics/lexer.hpp"

namespace jmetrics {

// Copyable owning indirection for recursive tree nodes. Never null unless
// moved from.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  const T& operator*() const { return *ptr_; }
  T& operator*() { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  T* operator->() { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

// Half-open byte range into the source file.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool contains(const Span& inner) const { return begin <= inner.begin && inner.end <= end; }
  bool operator==(const Span&) const = default;
};

enum Modifier : std::uint16_t {
  kPublic = 1 << 0,
  kProtected = 1 << 1,
  kPrivate = 1 << 2,
  kStatic = 1 << 3,
  kFinal = 1 << 4,
  kAbstract = 1 << 5,
  kNative = 1 << 6,
  kSynchronized = 1 << 7,
  kTransient = 1 << 8,
  kVolatile = 1 << 9,
  kStrictfp = 1 << 10,
};
using Modifiers = std::uint16_t;

struct Expr;
struct Stmt;

// ---- expressions -----------------------------------------------------------

struct LiteralExpr {
  TokenKind kind = TokenKind::IntLiteral;
  std::string text;
  bool operator==(const LiteralExpr&) const = default;
};

// A simple name: an identifier, `this` or `super`.
struct NameExpr {
  std::string name;
  bool operator==(const NameExpr&) const = default;
};

struct FieldAccessExpr {
  Box<Expr> target;
  std::string name;
  bool operator==(const FieldAccessExpr&) const = default;
};

struct CallExpr {
  std::optional<Box<Expr>> target;
  std::string name;
  std::vector<Expr> args;
  bool operator==(const CallExpr&) const = default;
};

// Object creation, array creation, and bare array initializers `{a, b}`
// (type_name empty).
struct NewExpr {
  std::string type_name;
  std::vector<Expr> args;
  bool is_array = false;
  std::vector<Expr> dimensions;
  std::vector<Expr> initializer;
  bool operator==(const NewExpr&) const = default;
};

struct UnaryExpr {
  std::string op;
  Box<Expr> operand;
  bool postfix = false;
  bool operator==(const UnaryExpr&) const = default;
};

struct BinaryExpr {
  std::string op;  // includes "instanceof"; rhs is then a NameExpr holding the type
  Box<Expr> lhs;
  Box<Expr> rhs;
  bool operator==(const BinaryExpr&) const = default;
};

struct TernaryExpr {
  Box<Expr> cond;
  Box<Expr> if_true;
  Box<Expr> if_false;
  bool operator==(const TernaryExpr&) const = default;
};

struct AssignExpr {
  std::string op;
  Box<Expr> target;
  Box<Expr> value;
  bool operator==(const AssignExpr&) const = default;
};

struct CastExpr {
  std::string type_name;
  Box<Expr> operand;
  bool operator==(const CastExpr&) const = default;
};

struct ArrayAccessExpr {
  Box<Expr> array;
  Box<Expr> index;
  bool operator==(const ArrayAccessExpr&) const = default;
};

struct Expr {
  using Node = std::variant<LiteralExpr, NameExpr, FieldAccessExpr, CallExpr, NewExpr, UnaryExpr,
                            BinaryExpr, TernaryExpr, AssignExpr, CastExpr, ArrayAccessExpr>;
  Span span;
  Node node;

  template <typename T>
  const T* as() const { return std::get_if<T>(&node); }
  bool operator==(const Expr&) const = default;
};

// ---- declarations shared with statements ------------------------------------

// One declaration statement: `int a = 1, b;`
struct VarDecl {
  Modifiers modifiers = 0;
  std::string type_name;
  std::vector<std::string> names;
  std::vector<std::optional<Expr>> initializers;  // parallel to names
  Span span;
  bool operator==(const VarDecl&) const = default;
};
using FieldDecl = VarDecl;

struct Parameter {
  std::string type_name;
  std::string name;
  bool operator==(const Parameter&) const = default;
};

// ---- statements ------------------------------------------------------------

struct BlockStmt {
  std::vector<Stmt> stmts;
  bool operator==(const BlockStmt&) const = default;
};

struct IfStmt {
  Expr cond;
  Box<Stmt> then_branch;
  std::optional<Box<Stmt>> else_branch;
  bool operator==(const IfStmt&) const = default;
};

struct WhileStmt {
  Expr cond;
  Box<Stmt> body;
  bool operator==(const WhileStmt&) const = default;
};

struct DoWhileStmt {
  Box<Stmt> body;
  Expr cond;
  bool operator==(const DoWhileStmt&) const = default;
};

struct ForStmt {
  std::vector<Stmt> init;  // LocalDecl or ExprStmt
  std::optional<Expr> cond;
  std::vector<Expr> update;
  Box<Stmt> body;
  bool operator==(const ForStmt&) const = default;
};

// Consecutive `case X:` / `default:` labels followed by their statements.
struct SwitchGroup {
  std::vector<Expr> labels;
  bool has_default = false;
  std::vector<Stmt> stmts;
  bool operator==(const SwitchGroup&) const = default;
};

struct SwitchStmt {
  Expr scrutinee;
  std::vector<SwitchGroup> groups;
  bool operator==(const SwitchStmt&) const = default;
};

struct CatchClause {
  Parameter param;
  Box<Stmt> body;  // always a BlockStmt
  bool operator==(const CatchClause&) const = default;
};

struct TryStmt {
  Box<Stmt> body;
  std::vector<CatchClause> catches;
  std::optional<Box<Stmt>> finally_block;
  bool operator==(const TryStmt&) const = default;
};

struct ReturnStmt {
  std::optional<Expr> value;
  bool operator==(const ReturnStmt&) const = default;
};

struct ThrowStmt {
  Expr value;
  bool operator==(const ThrowStmt&) const = default;
};

struct ExprStmt {
  Expr expr;
  bool operator==(const ExprStmt&) const = default;
};

struct LocalDeclStmt {
  VarDecl decl;
  bool operator==(const LocalDeclStmt&) const = default;
};

struct BreakStmt {
  std::string label;
  bool operator==(const BreakStmt&) const = default;
};

struct ContinueStmt {
  std::string label;
  bool operator==(const ContinueStmt&) const = default;
};

struct EmptyStmt {
  bool operator==(const EmptyStmt&) const = default;
};

struct Stmt {
  using Node = std::variant<BlockStmt, IfStmt, WhileStmt, DoWhileStmt, ForStmt, SwitchStmt, TryStmt,
                            ReturnStmt, ThrowStmt, ExprStmt, LocalDeclStmt, BreakStmt, ContinueStmt,
                            EmptyStmt>;
  Span span;
  Node node;

  template <typename T>
  const T* as() const { return std::get_if<T>(&node); }
  bool operator==(const Stmt&) const = default;
};

// ---- top level --------------------------------------------------------------

struct MethodDecl {
  Modifiers modifiers = 0;
  std::string name;
  std::vector<Parameter> params;
  std::optional<std::string> return_type;  // absent for constructors
  std::vector<std::string> throws;
  std::optional<Stmt> body;                // absent for abstract/interface methods
  Span span;

  bool is_constructor() const { return !return_type.has_value(); }
  bool operator==(const MethodDecl&) const = default;
};

enum class TypeKind { Class, Interface };

std::string_view to_string(TypeKind kind);

struct TypeDecl {
  Modifiers modifiers = 0;
  std::string name;
  TypeKind kind = TypeKind::Class;
  std::optional<std::string> superclass_name;
  std::vector<std::string> interface_names;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  Span span;
  bool operator==(const TypeDecl&) const = default;
};

struct ImportDecl {
  std::string name;  // without the trailing ".*"
  bool on_demand = false;
  bool operator==(const ImportDecl&) const = default;
};

struct CompilationUnit {
  std::string file_id;
  std::optional<std::string> package_name;
  std::vector<ImportDecl> imports;
  std::vector<TypeDecl> types;
  bool operator==(const CompilationUnit&) const = default;
};

// Preorder traversal over statements and expressions. Override what you need.
class AstVisitor {
 public:
  virtual ~AstVisitor() = default;
  virtual void visit(const Stmt&) {}
  virtual void visit(const Expr&) {}
};

void walk(const Stmt& stmt, AstVisitor& visitor);
void walk(const Expr& expr, AstVisitor& visitor);
void walk(const VarDecl& decl, AstVisitor& visitor);

}  // namespace jmetrics
