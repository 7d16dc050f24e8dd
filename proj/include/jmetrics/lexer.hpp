#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jmetrics {

enum class TokenKind {
  Keyword,
  Identifier,
  IntLiteral,
  FloatLiteral,
  StringLiteral,
  CharLiteral,
  BoolLiteral,
  NullLiteral,
  Operator,
  Separator,
  Comment,
  Whitespace,
  EndOfFile,
};

std::string_view to_string(TokenKind kind);

// For Keyword, Operator and Separator tokens the lexeme doubles as the
// keyword name / symbol.
struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string lexeme;
  std::uint32_t line = 1;
  std::uint32_t col = 1;
  std::size_t byte_offset = 0;

  bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
  bool is_trivia() const { return kind == TokenKind::Whitespace || kind == TokenKind::Comment; }
  std::size_t end_offset() const { return byte_offset + lexeme.size(); }

  bool operator==(const Token&) const = default;
};

enum class LexErrorKind { UnterminatedString, UnterminatedComment, InvalidCharacter };

std::string_view to_string(LexErrorKind kind);

class LexError : public std::runtime_error {
 public:
  LexError(LexErrorKind kind, std::uint32_t line, std::uint32_t col, const std::string& detail);

  LexErrorKind kind() const { return kind_; }
  std::uint32_t line() const { return line_; }
  std::uint32_t col() const { return col_; }

 private:
  LexErrorKind kind_;
  std::uint32_t line_;
  std::uint32_t col_;
};

// The 49 reserved words of Java 1.4 (true/false/null are literals).
std::span<const std::string_view> java_keywords();
bool is_keyword(std::string_view word);

/// Splits `source` into tokens, including whitespace and comment tokens, so
/// that the concatenated lexemes reproduce the input exactly. The last token
/// is always EndOfFile with an empty lexeme. Lexing stops at the first error.
std::vector<Token> tokenize(std::string_view source, std::string_view file_id = {});

}  // namespace jmetrics
