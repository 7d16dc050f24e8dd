#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jmetrics::csv {

// RFC 4180 quoting; records end with "\n".
std::string escape(std::string_view field);
void append_row(std::string& out, const std::vector<std::string>& fields);

struct Record {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, const std::string& what) : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Accepts LF and CRLF record separators and quoted fields spanning lines.
std::vector<Record> parse(std::string_view text);

}  // namespace jmetrics::csv
