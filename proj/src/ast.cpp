#include "jmetrics/ast.hpp"

namespace jmetrics {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view to_string(TypeKind kind) { return kind == TypeKind::Class ? "Class" : "Interface"; }

void walk(const VarDecl& decl, AstVisitor& visitor) {
  for (const auto& init : decl.initializers) {
    if (init) walk(*init, visitor);
  }
}

void walk(const Expr& expr, AstVisitor& visitor) {
  visitor.visit(expr);
  std::visit(overloaded{
                 [](const LiteralExpr&) {},
                 [](const NameExpr&) {},
                 [&](const FieldAccessExpr& e) { walk(*e.target, visitor); },
                 [&](const CallExpr& e) {
                   if (e.target) walk(**e.target, visitor);
                   for (const auto& a : e.args) walk(a, visitor);
                 },
                 [&](const NewExpr& e) {
                   for (const auto& a : e.args) walk(a, visitor);
                   for (const auto& d : e.dimensions) walk(d, visitor);
                   for (const auto& i : e.initializer) walk(i, visitor);
                 },
                 [&](const UnaryExpr& e) { walk(*e.operand, visitor); },
                 [&](const BinaryExpr& e) {
                   walk(*e.lhs, visitor);
                   walk(*e.rhs, visitor);
                 },
                 [&](const TernaryExpr& e) {
                   walk(*e.cond, visitor);
                   walk(*e.if_true, visitor);
                   walk(*e.if_false, visitor);
                 },
                 [&](const AssignExpr& e) {
                   walk(*e.target, visitor);
                   walk(*e.value, visitor);
                 },
                 [&](const CastExpr& e) { walk(*e.operand, visitor); },
                 [&](const ArrayAccessExpr& e) {
                   walk(*e.array, visitor);
                   walk(*e.index, visitor);
                 },
             },
             expr.node);
}

void walk(const Stmt& stmt, AstVisitor& visitor) {
  visitor.visit(stmt);
  std::visit(overloaded{
                 [&](const BlockStmt& s) {
                   for (const auto& c : s.stmts) walk(c, visitor);
                 },
                 [&](const IfStmt& s) {
                   walk(s.cond, visitor);
                   walk(*s.then_branch, visitor);
                   if (s.else_branch) walk(**s.else_branch, visitor);
                 },
                 [&](const WhileStmt& s) {
                   walk(s.cond, visitor);
                   walk(*s.body, visitor);
                 },
                 [&](const DoWhileStmt& s) {
                   walk(*s.body, visitor);
                   walk(s.cond, visitor);
                 },
                 [&](const ForStmt& s) {
                   for (const auto& i : s.init) walk(i, visitor);
                   if (s.cond) walk(*s.cond, visitor);
                   for (const auto& u : s.update) walk(u, visitor);
                   walk(*s.body, visitor);
                 },
                 [&](const SwitchStmt& s) {
                   walk(s.scrutinee, visitor);
                   for (const auto& g : s.groups) {
                     for (const auto& l : g.labels) walk(l, visitor);
                     for (const auto& c : g.stmts) walk(c, visitor);
                   }
                 },
                 [&](const TryStmt& s) {
                   walk(*s.body, visitor);
                   for (const auto& c : s.catches) walk(*c.body, visitor);
                   if (s.finally_block) walk(**s.finally_block, visitor);
                 },
                 [&](const ReturnStmt& s) {
                   if (s.value) walk(*s.value, visitor);
                 },
                 [&](const ThrowStmt& s) { walk(s.value, visitor); },
                 [&](const ExprStmt& s) { walk(s.expr, visitor); },
                 [&](const LocalDeclStmt& s) { walk(s.decl, visitor); },
                 [](const BreakStmt&) {},
                 [](const ContinueStmt&) {},
                 [](const EmptyStmt&) {},
             },
             stmt.node);
}

}  // namespace jmetrics
