#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jmetrics/ast.hpp"
#include "jmetrics/lexer.hpp"

namespace jmetrics {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::uint32_t line, std::uint32_t col, std::string expected, std::string found);

  std::uint32_t line() const { return line_; }
  std::uint32_t col() const { return col_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::uint32_t line_;
  std::uint32_t col_;
  std::string expected_;
  std::string found_;
};

/// Recursive-descent parse of one file's token stream (trivia allowed).
/// The first syntax error aborts with ParseError.
CompilationUnit parse_unit(std::span<const Token> tokens, std::string_view file_id);

// tokenize + parse_unit.
CompilationUnit parse_source(std::string_view source, std::string_view file_id);

// Line-oriented indented dump of a unit, two spaces per level.
std::string dump_unit(const CompilationUnit& unit);

}  // namespace jmetrics
