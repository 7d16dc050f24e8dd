#include "jmetrics/lexer.hpp"

#include <algorithm>
#include <array>

namespace jmetrics {

namespace {

constexpr std::array<std::string_view, 49> kKeywords{
    "abstract", "assert",     "boolean",   "break",      "byte",      "case",         "catch",
    "char",     "class",      "const",     "continue",   "default",   "do",           "double",
    "else",     "extends",    "final",     "finally",    "float",     "for",          "goto",
    "if",       "implements", "import",    "instanceof", "int",       "interface",    "long",
    "native",   "new",        "package",   "private",    "protected", "public",       "return",
    "short",    "static",     "strictfp",  "super",      "switch",    "synchronized", "this",
    "throw",    "throws",     "transient", "try",        "void",      "volatile",     "while",
};

// Longest first so that maximal munch falls out of a linear scan.
constexpr std::array<std::string_view, 37> kOperators{
    ">>>=", "<<=", ">>=", ">>>", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=",   "*=",  "/=",  "&=",  "|=", "^=", "%=", "<<", ">>", "=",  ">",  "<",  "!",
    "~",    "?",   ":",   "+",   "-",  "*",  "/",  "&",  "|",  "^",  "%",
};

constexpr std::string_view kSeparators = "(){}[];,.";

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}
bool is_ident_part(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex_digit(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) out.push_back(next());
    out.push_back(Token{TokenKind::EndOfFile, {}, line_, col_, pos_});
    return out;
  }

 private:
  char peek(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }
  bool at_end(std::size_t k = 0) const { return pos_ + k >= src_.size(); }

  [[noreturn]] void fail(LexErrorKind kind, std::uint32_t line, std::uint32_t col,
                         const std::string& detail) const {
    throw LexError(kind, line, col, detail);
  }

  Token make(TokenKind kind, std::size_t begin, std::uint32_t line, std::uint32_t col) {
    Token t{kind, std::string(src_.substr(begin, pos_ - begin)), line, col, begin};
    return t;
  }

  // Advances over [pos_, pos_+n) keeping line/col in sync.
  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  Token next() {
    const auto begin = pos_;
    const auto line = line_;
    const auto col = col_;
    const char c = peek();

    if (is_space(c)) {
      while (!at_end() && is_space(peek())) advance();
      return make(TokenKind::Whitespace, begin, line, col);
    }
    if (c == '/' && peek(1) == '/') {
      while (!at_end() && peek() != '\n' && peek() != '\r') advance();
      return make(TokenKind::Comment, begin, line, col);
    }
    if (c == '/' && peek(1) == '*') {
      advance(2);
      while (!(peek() == '*' && peek(1) == '/')) {
        if (at_end()) fail(LexErrorKind::UnterminatedComment, line, col, "block comment is never closed");
        advance();
      }
      advance(2);
      return make(TokenKind::Comment, begin, line, col);
    }
    if (is_ident_start(c)) return identifier(begin, line, col);
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return number(begin, line, col);
    if (c == '"' || c == '\'') return quoted(begin, line, col);

    for (auto op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        advance(op.size());
        return make(TokenKind::Operator, begin, line, col);
      }
    }
    if (kSeparators.find(c) != std::string_view::npos) {
      advance();
      return make(TokenKind::Separator, begin, line, col);
    }
    fail(LexErrorKind::InvalidCharacter, line, col, describe(c));
  }

  static std::string describe(char c) {
    auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f) return std::string("unexpected character '") + c + "'";
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string("unexpected byte 0x") + kHex[u >> 4] + kHex[u & 0xf];
  }

  Token identifier(std::size_t begin, std::uint32_t line, std::uint32_t col) {
    while (!at_end() && is_ident_part(peek())) advance();
    auto word = src_.substr(begin, pos_ - begin);
    if (word == "true" || word == "false") return make(TokenKind::BoolLiteral, begin, line, col);
    if (word == "null") return make(TokenKind::NullLiteral, begin, line, col);
    return make(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, begin, line, col);
  }

  void digits() {
    while (!at_end() && is_digit(peek())) advance();
  }

  Token number(std::size_t begin, std::uint32_t line, std::uint32_t col) {
    bool is_float = false;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      advance(2);
      if (!is_hex_digit(peek())) fail(LexErrorKind::InvalidCharacter, line_, col_, "malformed hex literal");
      while (!at_end() && is_hex_digit(peek())) advance();
    } else {
      digits();
      if (peek() == '.' && is_digit(peek(1))) {
        is_float = true;
        advance();
        digits();
      } else if (peek() == '.' && !is_ident_start(peek(1)) && peek(1) != '.') {
        // "1." is a float literal; "1.foo" and "1.." are not.
        is_float = true;
        advance();
      }
      if (peek() == 'e' || peek() == 'E') {
        std::size_t k = 1;
        if (peek(1) == '+' || peek(1) == '-') k = 2;
        if (!is_digit(peek(k))) fail(LexErrorKind::InvalidCharacter, line_, col_, "malformed exponent");
        advance(k);
        digits();
        is_float = true;
      }
    }

    const char s = peek();
    if (s == 'L' || s == 'l') {
      if (is_float) fail(LexErrorKind::InvalidCharacter, line_, col_, "long suffix on a float literal");
      advance();
    } else if (s == 'f' || s == 'F' || s == 'd' || s == 'D') {
      advance();
      is_float = true;
    }
    if (!at_end() && (is_ident_part(peek()) || (peek() == '.' && is_digit(peek(1))))) {
      fail(LexErrorKind::InvalidCharacter, line_, col_, "invalid numeric literal suffix '" + std::string(1, peek()) + "'");
    }
    return make(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, begin, line, col);
  }

  Token quoted(std::size_t begin, std::uint32_t line, std::uint32_t col) {
    const char quote = peek();
    advance();
    for (;;) {
      if (at_end() || peek() == '\n' || peek() == '\r') {
        fail(LexErrorKind::UnterminatedString, line, col,
             quote == '"' ? "string literal is not closed" : "character literal is not closed");
      }
      if (peek() == '\\') {
        if (at_end(1) || peek(1) == '\n' || peek(1) == '\r') {
          fail(LexErrorKind::UnterminatedString, line, col, "escape sequence runs past end of line");
        }
        advance(2);
        continue;
      }
      if (peek() == quote) {
        advance();
        break;
      }
      advance();
    }
    return make(quote == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral, begin, line, col);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t col_ = 1;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "Keyword";
    case TokenKind::Identifier: return "Identifier";
    case TokenKind::IntLiteral: return "IntLiteral";
    case TokenKind::FloatLiteral: return "FloatLiteral";
    case TokenKind::StringLiteral: return "StringLiteral";
    case TokenKind::CharLiteral: return "CharLiteral";
    case TokenKind::BoolLiteral: return "BoolLiteral";
    case TokenKind::NullLiteral: return "NullLiteral";
    case TokenKind::Operator: return "Operator";
    case TokenKind::Separator: return "Separator";
    case TokenKind::Comment: return "Comment";
    case TokenKind::Whitespace: return "Whitespace";
    case TokenKind::EndOfFile: return "EndOfFile";
  }
  return "?";
}

std::string_view to_string(LexErrorKind kind) {
  switch (kind) {
    case LexErrorKind::UnterminatedString: return "UnterminatedString";
    case LexErrorKind::UnterminatedComment: return "UnterminatedComment";
    case LexErrorKind::InvalidCharacter: return "InvalidCharacter";
  }
  return "?";
}

LexError::LexError(LexErrorKind kind, std::uint32_t line, std::uint32_t col, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      line_(line),
      col_(col) {}

std::span<const std::string_view> java_keywords() { return kKeywords; }

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source, std::string_view /*file_id*/) {
  return Lexer(source).run();
}

}  // namespace jmetrics
