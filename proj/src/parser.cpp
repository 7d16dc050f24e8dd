#include "jmetrics/parser.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace jmetrics {

ParseError::ParseError(std::uint32_t line, std::uint32_t col, std::string expected, std::string found)
    : std::runtime_error("expected " + expected + ", found " + found),
      line_(line),
      col_(col),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

constexpr std::array<std::string_view, 8> kPrimitiveTypes{"boolean", "byte", "char", "short",
                                                         "int",     "long", "float", "double"};

constexpr std::array<std::pair<std::string_view, Modifier>, 11> kModifiers{{
    {"public", kPublic},
    {"protected", kProtected},
    {"private", kPrivate},
    {"static", kStatic},
    {"final", kFinal},
    {"abstract", kAbstract},
    {"native", kNative},
    {"synchronized", kSynchronized},
    {"transient", kTransient},
    {"volatile", kVolatile},
    {"strictfp", kStrictfp},
}};

constexpr std::array<std::string_view, 12> kAssignOps{"=",  "+=", "-=", "*=",  "/=",  "%=",
                                                      "&=", "|=", "^=", "<<=", ">>=", ">>>="};

// Binary precedence, higher binds tighter. 0 = not a binary operator.
int binary_precedence(const Token& t) {
  if (t.kind == TokenKind::Keyword) return t.lexeme == "instanceof" ? 7 : 0;
  if (t.kind != TokenKind::Operator) return 0;
  const auto& op = t.lexeme;
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return 0;
}

bool is_primitive(const Token& t) {
  return t.kind == TokenKind::Keyword &&
         std::find(kPrimitiveTypes.begin(), kPrimitiveTypes.end(), t.lexeme) != kPrimitiveTypes.end();
}

bool is_literal(const Token& t) {
  switch (t.kind) {
    case TokenKind::IntLiteral:
    case TokenKind::FloatLiteral:
    case TokenKind::StringLiteral:
    case TokenKind::CharLiteral:
    case TokenKind::BoolLiteral:
    case TokenKind::NullLiteral:
      return true;
    default:
      return false;
  }
}

class Parser {
 public:
  Parser(std::span<const Token> tokens, std::string_view file_id) : file_id_(file_id) {
    for (const auto& t : tokens) {
      if (!t.is_trivia()) toks_.push_back(&t);
    }
    if (toks_.empty() || toks_.back()->kind != TokenKind::EndOfFile) {
      throw std::invalid_argument("token stream must end with EndOfFile");
    }
  }

  CompilationUnit unit() {
    CompilationUnit cu;
    cu.file_id = std::string(file_id_);
    if (accept_kw("package")) {
      cu.package_name = qualified_name();
      expect_sep(";");
    }
    while (at_kw("import")) cu.imports.push_back(import_decl());
    while (!at(TokenKind::EndOfFile)) {
      if (accept_sep(";")) continue;
      cu.types.push_back(type_decl());
    }
    return cu;
  }

 private:
  // ---- token helpers ----

  const Token& peek(std::size_t k = 0) const {
    return *toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(TokenKind kind, std::size_t k = 0) const { return peek(k).kind == kind; }
  bool at_kw(std::string_view kw, std::size_t k = 0) const { return peek(k).is(TokenKind::Keyword, kw); }
  bool at_sep(std::string_view s, std::size_t k = 0) const { return peek(k).is(TokenKind::Separator, s); }
  bool at_op(std::string_view s, std::size_t k = 0) const { return peek(k).is(TokenKind::Operator, s); }

  const Token& take() {
    const Token& t = peek();
    if (t.kind != TokenKind::EndOfFile) ++pos_;
    prev_end_ = t.end_offset();
    return t;
  }

  bool accept_kw(std::string_view kw) {
    if (!at_kw(kw)) return false;
    take();
    return true;
  }
  bool accept_sep(std::string_view s) {
    if (!at_sep(s)) return false;
    take();
    return true;
  }
  bool accept_op(std::string_view s) {
    if (!at_op(s)) return false;
    take();
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) const { fail_at(peek(), expected); }

  [[noreturn]] static void fail_at(const Token& t, const std::string& expected) {
    std::string found = t.kind == TokenKind::EndOfFile ? "end of file" : "'" + t.lexeme + "'";
    throw ParseError(t.line, t.col, expected, found);
  }

  const Token& expect_sep(std::string_view s) {
    if (!at_sep(s)) fail("'" + std::string(s) + "'");
    return take();
  }
  const Token& expect_op(std::string_view s) {
    if (!at_op(s)) fail("'" + std::string(s) + "'");
    return take();
  }
  const Token& expect_kw(std::string_view s) {
    if (!at_kw(s)) fail("'" + std::string(s) + "'");
    return take();
  }
  std::string identifier() {
    if (!at(TokenKind::Identifier)) fail("identifier");
    return take().lexeme;
  }

  std::size_t here() const { return peek().byte_offset; }
  Span span_from(std::size_t begin) const { return Span{begin, std::max(begin, prev_end_)}; }

  // ---- names and types ----

  std::string qualified_name() {
    std::string name = identifier();
    while (at_sep(".") && at(TokenKind::Identifier, 1)) {
      take();
      name += "." + take().lexeme;
    }
    return name;
  }

  std::vector<std::string> qualified_name_list() {
    std::vector<std::string> names{qualified_name()};
    while (accept_sep(",")) names.push_back(qualified_name());
    return names;
  }

  std::string dims() {
    std::string out;
    while (at_sep("[") && at_sep("]", 1)) {
      take();
      take();
      out += "[]";
    }
    return out;
  }

  std::string type() {
    std::string name;
    if (is_primitive(peek())) {
      name = take().lexeme;
    } else if (at(TokenKind::Identifier)) {
      name = qualified_name();
    } else {
      fail("type");
    }
    return name + dims();
  }

  // Lookahead: does a type start at `k` and end right before an identifier?
  // Returns the index of that identifier.
  std::optional<std::size_t> scan_type(std::size_t k) const {
    if (is_primitive(peek(k))) {
      ++k;
    } else if (at(TokenKind::Identifier, k)) {
      ++k;
      while (at_sep(".", k) && at(TokenKind::Identifier, k + 1)) k += 2;
    } else {
      return std::nullopt;
    }
    while (at_sep("[", k) && at_sep("]", k + 1)) k += 2;
    return k;
  }

  Modifiers modifiers() {
    Modifiers mods = 0;
    for (;;) {
      const Token& t = peek();
      if (t.kind != TokenKind::Keyword) return mods;
      auto it = std::find_if(kModifiers.begin(), kModifiers.end(),
                             [&](const auto& m) { return m.first == t.lexeme; });
      if (it == kModifiers.end()) return mods;
      mods |= it->second;
      take();
    }
  }

  // ---- declarations ----

  ImportDecl import_decl() {
    expect_kw("import");
    ImportDecl decl{identifier(), false};
    while (accept_sep(".")) {
      if (accept_op("*")) {
        decl.on_demand = true;
        break;
      }
      decl.name += "." + identifier();
    }
    expect_sep(";");
    return decl;
  }

  TypeDecl type_decl() {
    const auto begin = here();
    TypeDecl decl;
    decl.modifiers = modifiers();
    if (accept_kw("class")) {
      decl.kind = TypeKind::Class;
      decl.name = identifier();
      if (accept_kw("extends")) decl.superclass_name = qualified_name();
      if (accept_kw("implements")) decl.interface_names = qualified_name_list();
    } else if (accept_kw("interface")) {
      decl.kind = TypeKind::Interface;
      decl.name = identifier();
      if (accept_kw("extends")) decl.interface_names = qualified_name_list();
    } else {
      fail("'class' or 'interface'");
    }
    class_body(decl);
    decl.span = span_from(begin);
    return decl;
  }

  void class_body(TypeDecl& decl) {
    interface_body_ = decl.kind == TypeKind::Interface;
    expect_sep("{");
    while (!accept_sep("}")) {
      if (at(TokenKind::EndOfFile)) fail("'}'");
      if (accept_sep(";")) continue;
      member(decl);
    }
  }

  void member(TypeDecl& decl) {
    const auto begin = here();
    const Modifiers mods = modifiers();
    if (at_sep("{") || at_kw("class") || at_kw("interface")) {
      fail("field, method or constructor declaration");
    }

    if (at(TokenKind::Identifier) && peek().lexeme == decl.name && at_sep("(", 1)) {
      MethodDecl m;
      m.modifiers = mods;
      m.name = take().lexeme;
      method_rest(m, begin);
      decl.methods.push_back(std::move(m));
      return;
    }

    std::string type_name;
    if (accept_kw("void")) {
      type_name = "void";
    } else {
      type_name = type();
    }
    if (at(TokenKind::Identifier) && at_sep("(", 1)) {
      MethodDecl m;
      m.modifiers = mods;
      m.return_type = type_name;
      m.name = take().lexeme;
      method_rest(m, begin);
      decl.methods.push_back(std::move(m));
      return;
    }
    if (type_name == "void") fail("method name");
    decl.fields.push_back(var_declarators(mods, std::move(type_name), begin));
    expect_sep(";");
    decl.fields.back().span = span_from(begin);
  }

  void method_rest(MethodDecl& m, std::size_t begin) {
    expect_sep("(");
    if (!at_sep(")")) {
      do {
        modifiers();
        Parameter p;
        p.type_name = type();
        p.name = identifier();
        p.type_name += dims();
        m.params.push_back(std::move(p));
      } while (accept_sep(","));
    }
    expect_sep(")");
    if (m.return_type) *m.return_type += dims();
    if (accept_kw("throws")) m.throws = qualified_name_list();
    if (!accept_sep(";")) {
      if (interface_body_) fail("';'");
      if (!at_sep("{")) fail("'{' or ';'");
      m.body = block();
    }
    m.span = span_from(begin);
  }

  VarDecl var_declarators(Modifiers mods, std::string type_name, std::size_t begin) {
    VarDecl decl;
    decl.modifiers = mods;
    decl.type_name = std::move(type_name);
    do {
      decl.names.push_back(identifier());
      dims();
      if (accept_op("=")) {
        decl.initializers.emplace_back(variable_initializer());
      } else {
        decl.initializers.emplace_back(std::nullopt);
      }
    } while (accept_sep(","));
    decl.span = span_from(begin);
    return decl;
  }

  Expr variable_initializer() {
    if (at_sep("{")) return array_initializer("");
    return expression();
  }

  Expr array_initializer(std::string type_name) {
    const auto begin = here();
    expect_sep("{");
    NewExpr n;
    n.type_name = std::move(type_name);
    n.is_array = true;
    while (!at_sep("}")) {
      n.initializer.push_back(variable_initializer());
      if (!accept_sep(",")) break;
    }
    expect_sep("}");
    return Expr{span_from(begin), std::move(n)};
  }

  // ---- statements ----

  Stmt block() {
    const auto begin = here();
    expect_sep("{");
    BlockStmt b;
    while (!at_sep("}")) {
      if (at(TokenKind::EndOfFile)) fail("'}'");
      b.stmts.push_back(statement());
    }
    take();
    return Stmt{span_from(begin), std::move(b)};
  }

  bool at_local_decl() const {
    if (at_kw("final")) return true;
    auto after = scan_type(0);
    return after && at(TokenKind::Identifier, *after);
  }

  Stmt local_decl() {
    const auto begin = here();
    const Modifiers mods = modifiers();
    auto t = type();
    LocalDeclStmt d{var_declarators(mods, std::move(t), begin)};
    return Stmt{span_from(begin), std::move(d)};
  }

  Stmt statement() {
    const auto begin = here();
    if (at_sep("{")) return block();
    if (accept_sep(";")) return Stmt{span_from(begin), EmptyStmt{}};

    if (accept_kw("if")) {
      Expr cond = paren_expression();
      Stmt then_branch = statement();
      std::optional<Box<Stmt>> else_branch;
      if (accept_kw("else")) else_branch.emplace(statement());
      return Stmt{span_from(begin), IfStmt{std::move(cond), std::move(then_branch), std::move(else_branch)}};
    }
    if (accept_kw("while")) {
      Expr cond = paren_expression();
      Stmt body = statement();
      return Stmt{span_from(begin), WhileStmt{std::move(cond), std::move(body)}};
    }
    if (accept_kw("do")) {
      Stmt body = statement();
      expect_kw("while");
      Expr cond = paren_expression();
      expect_sep(";");
      return Stmt{span_from(begin), DoWhileStmt{std::move(body), std::move(cond)}};
    }
    if (accept_kw("for")) return for_rest(begin);
    if (accept_kw("switch")) return switch_rest(begin);
    if (accept_kw("try")) return try_rest(begin);
    if (accept_kw("return")) {
      ReturnStmt r;
      if (!at_sep(";")) r.value = expression();
      expect_sep(";");
      return Stmt{span_from(begin), std::move(r)};
    }
    if (accept_kw("throw")) {
      Expr value = expression();
      expect_sep(";");
      return Stmt{span_from(begin), ThrowStmt{std::move(value)}};
    }
    if (accept_kw("break")) {
      BreakStmt b;
      if (at(TokenKind::Identifier)) b.label = take().lexeme;
      expect_sep(";");
      return Stmt{span_from(begin), std::move(b)};
    }
    if (accept_kw("continue")) {
      ContinueStmt c;
      if (at(TokenKind::Identifier)) c.label = take().lexeme;
      expect_sep(";");
      return Stmt{span_from(begin), std::move(c)};
    }
    if (at_local_decl()) {
      Stmt s = local_decl();
      expect_sep(";");
      s.span = span_from(begin);
      return s;
    }
    Stmt s = expression_statement();
    expect_sep(";");
    s.span = span_from(begin);
    return s;
  }

  static bool is_statement_expression(const Expr& e) {
    if (e.as<AssignExpr>() || e.as<CallExpr>()) return true;
    if (const auto* n = e.as<NewExpr>()) return !n->is_array;
    if (const auto* u = e.as<UnaryExpr>()) return u->op == "++" || u->op == "--";
    return false;
  }

  Stmt expression_statement() {
    const Token& start = peek();
    const auto begin = here();
    Expr e = expression();
    if (!is_statement_expression(e)) fail_at(start, "statement");
    return Stmt{span_from(begin), ExprStmt{std::move(e)}};
  }

  Expr paren_expression() {
    expect_sep("(");
    Expr e = expression();
    expect_sep(")");
    return e;
  }

  Stmt for_rest(std::size_t begin) {
    expect_sep("(");
    ForStmt f{{}, std::nullopt, {}, Stmt{}};
    if (!at_sep(";")) {
      if (at_local_decl()) {
        f.init.push_back(local_decl());
      } else {
        do {
          f.init.push_back(expression_statement());
        } while (accept_sep(","));
      }
    }
    expect_sep(";");
    if (!at_sep(";")) f.cond = expression();
    expect_sep(";");
    if (!at_sep(")")) {
      do {
        const Token& start = peek();
        Expr e = expression();
        if (!is_statement_expression(e)) fail_at(start, "statement expression");
        f.update.push_back(std::move(e));
      } while (accept_sep(","));
    }
    expect_sep(")");
    f.body = statement();
    return Stmt{span_from(begin), std::move(f)};
  }

  Stmt switch_rest(std::size_t begin) {
    SwitchStmt s{paren_expression(), {}};
    expect_sep("{");
    while (!accept_sep("}")) {
      if (!at_kw("case") && !at_kw("default")) fail("'case', 'default' or '}'");
      SwitchGroup group;
      while (at_kw("case") || at_kw("default")) {
        if (accept_kw("case")) {
          group.labels.push_back(expression());
        } else {
          take();
          group.has_default = true;
        }
        expect_op(":");
      }
      while (!at_kw("case") && !at_kw("default") && !at_sep("}")) {
        if (at(TokenKind::EndOfFile)) fail("'}'");
        group.stmts.push_back(statement());
      }
      s.groups.push_back(std::move(group));
    }
    return Stmt{span_from(begin), std::move(s)};
  }

  Stmt try_rest(std::size_t begin) {
    if (!at_sep("{")) fail("'{'");
    TryStmt t{block(), {}, std::nullopt};
    while (accept_kw("catch")) {
      expect_sep("(");
      modifiers();
      Parameter p;
      p.type_name = type();
      p.name = identifier();
      expect_sep(")");
      if (!at_sep("{")) fail("'{'");
      t.catches.push_back(CatchClause{std::move(p), block()});
    }
    if (accept_kw("finally")) {
      if (!at_sep("{")) fail("'{'");
      t.finally_block.emplace(block());
    }
    if (t.catches.empty() && !t.finally_block) fail("'catch' or 'finally'");
    return Stmt{span_from(begin), std::move(t)};
  }

  // ---- expressions ----

  Expr expression() { return assignment(); }

  Expr assignment() {
    const auto begin = here();
    const Token& start = peek();
    Expr lhs = ternary();
    const Token& t = peek();
    if (t.kind == TokenKind::Operator &&
        std::find(kAssignOps.begin(), kAssignOps.end(), t.lexeme) != kAssignOps.end()) {
      if (!lhs.as<NameExpr>() && !lhs.as<FieldAccessExpr>() && !lhs.as<ArrayAccessExpr>()) {
        fail_at(start, "assignable expression");
      }
      std::string op = take().lexeme;
      Expr rhs = assignment();
      return Expr{span_from(begin), AssignExpr{std::move(op), std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  Expr ternary() {
    const auto begin = here();
    Expr cond = binary(1);
    if (!accept_op("?")) return cond;
    Expr a = assignment();
    expect_op(":");
    Expr b = ternary();
    return Expr{span_from(begin), TernaryExpr{std::move(cond), std::move(a), std::move(b)}};
  }

  Expr binary(int min_prec) {
    const auto begin = here();
    Expr lhs = unary();
    for (;;) {
      const int prec = binary_precedence(peek());
      if (prec == 0 || prec < min_prec) return lhs;
      std::string op = take().lexeme;
      if (op == "instanceof") {
        const auto type_begin = here();
        Expr rhs{Span{}, NameExpr{type()}};
        rhs.span = span_from(type_begin);
        lhs = Expr{span_from(begin), BinaryExpr{std::move(op), std::move(lhs), std::move(rhs)}};
        continue;
      }
      Expr rhs = binary(prec + 1);
      lhs = Expr{span_from(begin), BinaryExpr{std::move(op), std::move(lhs), std::move(rhs)}};
    }
  }

  bool at_cast() const {
    if (!at_sep("(")) return false;
    if (is_primitive(peek(1))) {
      auto after = scan_type(1);
      return after && at_sep(")", *after);
    }
    if (!at(TokenKind::Identifier, 1)) return false;
    auto after = scan_type(1);
    if (!after || !at_sep(")", *after)) return false;
    const Token& next = peek(*after + 1);
    return next.kind == TokenKind::Identifier || is_literal(next) || next.is(TokenKind::Separator, "(") ||
           next.is(TokenKind::Operator, "!") || next.is(TokenKind::Operator, "~") ||
           next.is(TokenKind::Keyword, "this") || next.is(TokenKind::Keyword, "new") ||
           next.is(TokenKind::Keyword, "super");
  }

  Expr unary() {
    const auto begin = here();
    const Token& t = peek();
    if (t.kind == TokenKind::Operator &&
        (t.lexeme == "+" || t.lexeme == "-" || t.lexeme == "++" || t.lexeme == "--" || t.lexeme == "!" ||
         t.lexeme == "~")) {
      std::string op = take().lexeme;
      Expr operand = unary();
      if ((op == "++" || op == "--") && !operand.as<NameExpr>() && !operand.as<FieldAccessExpr>() &&
          !operand.as<ArrayAccessExpr>()) {
        fail_at(t, "assignable expression after '" + op + "'");
      }
      return Expr{span_from(begin), UnaryExpr{std::move(op), std::move(operand), false}};
    }
    if (at_cast()) {
      take();
      std::string type_name = type();
      expect_sep(")");
      Expr operand = unary();
      return Expr{span_from(begin), CastExpr{std::move(type_name), std::move(operand)}};
    }
    return postfix(primary());
  }

  std::vector<Expr> arguments() {
    expect_sep("(");
    std::vector<Expr> args;
    if (!at_sep(")")) {
      do {
        args.push_back(expression());
      } while (accept_sep(","));
    }
    expect_sep(")");
    return args;
  }

  Expr postfix(Expr e) {
    const auto begin = e.span.begin;
    for (;;) {
      if (accept_sep(".")) {
        std::string name;
        if (at_kw("class")) {
          name = take().lexeme;
        } else {
          name = identifier();
        }
        if (at_sep("(") && name != "class") {
          auto args = arguments();
          e = Expr{span_from(begin), CallExpr{Box<Expr>(std::move(e)), std::move(name), std::move(args)}};
        } else {
          e = Expr{span_from(begin), FieldAccessExpr{std::move(e), std::move(name)}};
        }
      } else if (at_sep("[")) {
        take();
        Expr index = expression();
        expect_sep("]");
        e = Expr{span_from(begin), ArrayAccessExpr{std::move(e), std::move(index)}};
      } else if (at_op("++") || at_op("--")) {
        if (!e.as<NameExpr>() && !e.as<FieldAccessExpr>() && !e.as<ArrayAccessExpr>()) {
          fail("';'");
        }
        std::string op = take().lexeme;
        e = Expr{span_from(begin), UnaryExpr{std::move(op), std::move(e), true}};
      } else {
        return e;
      }
    }
  }

  Expr primary() {
    const auto begin = here();
    const Token& t = peek();
    if (is_literal(t)) {
      take();
      return Expr{span_from(begin), LiteralExpr{t.kind, t.lexeme}};
    }
    if (accept_sep("(")) {
      Expr inner = expression();
      expect_sep(")");
      inner.span = span_from(begin);
      return inner;
    }
    if (at_kw("this") || at_kw("super")) {
      std::string name = take().lexeme;
      if (at_sep("(")) {
        auto args = arguments();
        return Expr{span_from(begin), CallExpr{std::nullopt, std::move(name), std::move(args)}};
      }
      return Expr{span_from(begin), NameExpr{std::move(name)}};
    }
    if (accept_kw("new")) return creation(begin);
    if (is_primitive(t) || at_kw("void")) {
      // int.class, String[].class
      std::string name = at_kw("void") ? take().lexeme : type();
      if (!at_sep(".") || !at_kw("class", 1)) fail("'.class'");
      take();
      take();
      Expr target{span_from(begin), NameExpr{std::move(name)}};
      return Expr{span_from(begin), FieldAccessExpr{std::move(target), "class"}};
    }
    if (at(TokenKind::Identifier)) {
      std::string name = take().lexeme;
      if (at_sep("(")) {
        auto args = arguments();
        return Expr{span_from(begin), CallExpr{std::nullopt, std::move(name), std::move(args)}};
      }
      return Expr{span_from(begin), NameExpr{std::move(name)}};
    }
    fail("expression");
  }

  Expr creation(std::size_t begin) {
    const bool primitive = is_primitive(peek());
    std::string type_name = primitive ? take().lexeme : qualified_name();
    if (at_sep("[")) {
      NewExpr n;
      n.type_name = std::move(type_name);
      n.is_array = true;
      while (at_sep("[")) {
        take();
        if (accept_sep("]")) {
          n.type_name += "[]";
          continue;
        }
        if (n.type_name.find("[]") != std::string::npos) fail("']'");
        n.dimensions.push_back(expression());
        expect_sep("]");
      }
      if (at_sep("{")) {
        if (!n.dimensions.empty()) fail("';'");
        Expr init = array_initializer(n.type_name);
        n.initializer = std::move(std::get<NewExpr>(init.node).initializer);
      } else if (n.dimensions.empty()) {
        fail("array dimension or initializer");
      }
      return Expr{span_from(begin), std::move(n)};
    }
    if (primitive) fail("'['");
    NewExpr n;
    n.type_name = std::move(type_name);
    n.args = arguments();
    if (at_sep("{")) fail("';' (anonymous classes are not supported)");
    return Expr{span_from(begin), std::move(n)};
  }

  std::vector<const Token*> toks_;
  std::size_t pos_ = 0;
  bool interface_body_ = false;  // types do not nest
  std::size_t prev_end_ = 0;
  std::string_view file_id_;
};

// ---- dump ----

class Dumper {
 public:
  std::string out;

  void line(int depth, const std::string& text) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += text;
    out += '\n';
  }

  void unit(const CompilationUnit& cu) {
    line(0, "CompilationUnit " + cu.file_id);
    line(1, "package " + (cu.package_name ? *cu.package_name : std::string("(default)")));
    for (const auto& i : cu.imports) line(1, "import " + i.name + (i.on_demand ? ".*" : ""));
    for (const auto& t : cu.types) type(1, t);
  }

  void type(int d, const TypeDecl& t) {
    std::string head = std::string(to_string(t.kind)) + " " + t.name;
    if (t.superclass_name) head += " extends " + *t.superclass_name;
    if (!t.interface_names.empty()) {
      head += t.kind == TypeKind::Class ? " implements" : " extends";
      for (std::size_t i = 0; i < t.interface_names.size(); ++i) {
        head += (i ? ", " : " ") + t.interface_names[i];
      }
    }
    line(d, head);
    for (const auto& f : t.fields) var(d + 1, "Field", f);
    for (const auto& m : t.methods) method(d + 1, m);
  }

  void var(int d, const std::string& tag, const VarDecl& v) {
    std::string text = tag + " " + v.type_name;
    for (std::size_t i = 0; i < v.names.size(); ++i) text += (i ? ", " : " ") + v.names[i];
    line(d, text);
    for (const auto& init : v.initializers) {
      if (init) expr(d + 1, *init);
    }
  }

  void method(int d, const MethodDecl& m) {
    std::string text = (m.is_constructor() ? "Constructor " : "Method " + *m.return_type + " ") + m.name + "(";
    for (std::size_t i = 0; i < m.params.size(); ++i) {
      text += (i ? ", " : "") + m.params[i].type_name + " " + m.params[i].name;
    }
    text += ")";
    if (!m.body) text += " abstract";
    line(d, text);
    if (m.body) stmt(d + 1, *m.body);
  }

  void stmt(int d, const Stmt& s) {
    std::visit([&](const auto& n) { stmt_node(d, n); }, s.node);
  }

  void stmt_node(int d, const BlockStmt& s) {
    line(d, "Block");
    for (const auto& c : s.stmts) stmt(d + 1, c);
  }
  void stmt_node(int d, const IfStmt& s) {
    line(d, "If");
    expr(d + 1, s.cond);
    stmt(d + 1, *s.then_branch);
    if (s.else_branch) {
      line(d, "Else");
      stmt(d + 1, **s.else_branch);
    }
  }
  void stmt_node(int d, const WhileStmt& s) {
    line(d, "While");
    expr(d + 1, s.cond);
    stmt(d + 1, *s.body);
  }
  void stmt_node(int d, const DoWhileStmt& s) {
    line(d, "DoWhile");
    stmt(d + 1, *s.body);
    expr(d + 1, s.cond);
  }
  void stmt_node(int d, const ForStmt& s) {
    line(d, "For");
    for (const auto& i : s.init) stmt(d + 1, i);
    if (s.cond) expr(d + 1, *s.cond);
    for (const auto& u : s.update) expr(d + 1, u);
    stmt(d + 1, *s.body);
  }
  void stmt_node(int d, const SwitchStmt& s) {
    line(d, "Switch");
    expr(d + 1, s.scrutinee);
    for (const auto& g : s.groups) {
      line(d + 1, std::string("CaseGroup") + (g.has_default ? " default" : ""));
      for (const auto& l : g.labels) expr(d + 2, l);
      for (const auto& c : g.stmts) stmt(d + 2, c);
    }
  }
  void stmt_node(int d, const TryStmt& s) {
    line(d, "Try");
    stmt(d + 1, *s.body);
    for (const auto& c : s.catches) {
      line(d + 1, "Catch " + c.param.type_name + " " + c.param.name);
      stmt(d + 2, *c.body);
    }
    if (s.finally_block) {
      line(d + 1, "Finally");
      stmt(d + 2, **s.finally_block);
    }
  }
  void stmt_node(int d, const ReturnStmt& s) {
    line(d, "Return");
    if (s.value) expr(d + 1, *s.value);
  }
  void stmt_node(int d, const ThrowStmt& s) {
    line(d, "Throw");
    expr(d + 1, s.value);
  }
  void stmt_node(int d, const ExprStmt& s) {
    line(d, "ExprStmt");
    expr(d + 1, s.expr);
  }
  void stmt_node(int d, const LocalDeclStmt& s) { var(d, "LocalDecl", s.decl); }
  void stmt_node(int d, const BreakStmt& s) { line(d, "Break" + (s.label.empty() ? "" : " " + s.label)); }
  void stmt_node(int d, const ContinueStmt& s) {
    line(d, "Continue" + (s.label.empty() ? "" : " " + s.label));
  }
  void stmt_node(int d, const EmptyStmt&) { line(d, "Empty"); }

  void expr(int d, const Expr& e) {
    std::visit([&](const auto& n) { expr_node(d, n); }, e.node);
  }

  void expr_node(int d, const LiteralExpr& e) { line(d, "Literal " + e.text); }
  void expr_node(int d, const NameExpr& e) { line(d, "Name " + e.name); }
  void expr_node(int d, const FieldAccessExpr& e) {
    line(d, "FieldAccess ." + e.name);
    expr(d + 1, *e.target);
  }
  void expr_node(int d, const CallExpr& e) {
    line(d, "Call " + e.name);
    if (e.target) expr(d + 1, **e.target);
    for (const auto& a : e.args) expr(d + 1, a);
  }
  void expr_node(int d, const NewExpr& e) {
    line(d, "New " + (e.type_name.empty() ? std::string("{}") : e.type_name) + (e.is_array ? " array" : ""));
    for (const auto& a : e.args) expr(d + 1, a);
    for (const auto& a : e.dimensions) expr(d + 1, a);
    for (const auto& a : e.initializer) expr(d + 1, a);
  }
  void expr_node(int d, const UnaryExpr& e) {
    line(d, std::string("Unary ") + (e.postfix ? "postfix " : "") + e.op);
    expr(d + 1, *e.operand);
  }
  void expr_node(int d, const BinaryExpr& e) {
    line(d, "Binary " + e.op);
    expr(d + 1, *e.lhs);
    expr(d + 1, *e.rhs);
  }
  void expr_node(int d, const TernaryExpr& e) {
    line(d, "Ternary");
    expr(d + 1, *e.cond);
    expr(d + 1, *e.if_true);
    expr(d + 1, *e.if_false);
  }
  void expr_node(int d, const AssignExpr& e) {
    line(d, "Assign " + e.op);
    expr(d + 1, *e.target);
    expr(d + 1, *e.value);
  }
  void expr_node(int d, const CastExpr& e) {
    line(d, "Cast " + e.type_name);
    expr(d + 1, *e.operand);
  }
  void expr_node(int d, const ArrayAccessExpr& e) {
    line(d, "ArrayAccess");
    expr(d + 1, *e.array);
    expr(d + 1, *e.index);
  }
};

}  // namespace

CompilationUnit parse_unit(std::span<const Token> tokens, std::string_view file_id) {
  return Parser(tokens, file_id).unit();
}

CompilationUnit parse_source(std::string_view source, std::string_view file_id) {
  auto tokens = tokenize(source, file_id);
  return parse_unit(tokens, file_id);
}

std::string dump_unit(const CompilationUnit& unit) {
  Dumper d;
  d.unit(unit);
  return std::move(d.out);
}

}  // namespace jmetrics
