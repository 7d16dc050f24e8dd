#include "jmetrics/complexity.hpp"

namespace jmetrics {

namespace {

class DecisionCounter : public AstVisitor {
 public:
  int count = 0;

  void visit(const Stmt& s) override {
    if (s.as<IfStmt>() || s.as<WhileStmt>() || s.as<DoWhileStmt>() || s.as<ForStmt>()) {
      ++count;
    } else if (const auto* sw = s.as<SwitchStmt>()) {
      for (const auto& g : sw->groups) count += static_cast<int>(g.labels.size());
    } else if (const auto* t = s.as<TryStmt>()) {
      count += static_cast<int>(t->catches.size());
    }
  }

  void visit(const Expr& e) override {
    if (e.as<TernaryExpr>()) {
      ++count;
    } else if (const auto* b = e.as<BinaryExpr>()) {
      if (b->op == "&&" || b->op == "||") ++count;
    }
  }
};

}  // namespace

int count_decision_points(const Stmt& body) {
  DecisionCounter counter;
  walk(body, counter);
  return counter.count;
}

std::optional<int> compute_control_paths(const MethodDecl& method) {
  if (!method.body) return std::nullopt;
  return 1 + count_decision_points(*method.body);
}

}  // namespace jmetrics
