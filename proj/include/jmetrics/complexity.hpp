#pragma once

#include <optional>

#include "jmetrics/ast.hpp"

namespace jmetrics {

// Decision points: if, while, do-while, for, each `case` label, each catch
// clause, each ternary, and each && / || operator.
int count_decision_points(const Stmt& body);

/// Cyclomatic complexity (1 + decision points) of a method body, or
/// nullopt for abstract and interface methods.
std::optional<int> compute_control_paths(const MethodDecl& method);

}  // namespace jmetrics
