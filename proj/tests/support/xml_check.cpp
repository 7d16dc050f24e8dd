#include "xml_check.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace jmtest {

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':' || static_cast<unsigned char>(c) >= 0x80;
}
bool name_char(char c) {
  return name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Reader {
 public:
  Reader(std::string_view s, XmlSummary& out) : s_(s), out_(out) {}

  void document() {
    if (s_.substr(0, 5) == "<?xml") {
      const auto end = s_.find("?>");
      if (end == std::string_view::npos) throw Failure("unterminated XML declaration");
      pos_ = end + 2;
    }
    misc();
    if (pos_ >= s_.size() || s_[pos_] != '<') throw Failure("missing root element");
    element(0, -1);
    misc();
    if (pos_ != s_.size()) throw Failure("content after the root element at offset " + std::to_string(pos_));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Failure(what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Whitespace and comments between top-level constructs.
  void misc() {
    for (;;) {
      skip_space();
      if (s_.substr(pos_, 4) == "<!--") {
        comment();
      } else {
        return;
      }
    }
  }

  void comment() {
    const auto end = s_.find("-->", pos_ + 4);
    if (end == std::string_view::npos) fail("unterminated comment");
    if (s_.substr(pos_ + 4, end - pos_ - 4).find("--") != std::string_view::npos) fail("'--' inside comment");
    pos_ = end + 3;
  }

  std::string name() {
    if (pos_ >= s_.size() || !name_start(s_[pos_])) fail("expected a name");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string reference() {
    const auto end = s_.find(';', pos_);
    if (end == std::string_view::npos || end - pos_ > 12) fail("malformed entity reference");
    const std::string_view ref = s_.substr(pos_ + 1, end - pos_ - 1);
    pos_ = end + 1;
    if (ref == "amp") return "&";
    if (ref == "lt") return "<";
    if (ref == "gt") return ">";
    if (ref == "quot") return "\"";
    if (ref == "apos") return "'";
    if (ref.size() >= 2 && ref[0] == '#') {
      const bool hex = ref[1] == 'x';
      const std::string digits(ref.substr(hex ? 2 : 1));
      if (digits.empty()) fail("empty character reference");
      for (char c : digits) {
        if (hex ? !std::isxdigit(static_cast<unsigned char>(c)) : !std::isdigit(static_cast<unsigned char>(c))) {
          fail("bad character reference");
        }
      }
      std::string out;
      append_utf8(out, std::stoul(digits, nullptr, hex ? 16 : 10));
      return out;
    }
    fail("unknown entity '" + std::string(ref) + "'");
  }

  void element(int depth, int parent) {
    ++pos_;  // '<'
    XmlElement el;
    el.name = name();
    el.depth = depth;
    el.parent = parent;
    for (;;) {
      const std::size_t before = pos_;
      skip_space();
      if (pos_ >= s_.size()) fail("unterminated start tag");
      if (s_.substr(pos_, 2) == "/>") {
        pos_ += 2;
        out_.elements.push_back(std::move(el));
        return;
      }
      if (s_[pos_] == '>') {
        ++pos_;
        break;
      }
      if (pos_ == before) fail("attributes must be separated by whitespace");
      std::string key = name();
      skip_space();
      if (pos_ >= s_.size() || s_[pos_] != '=') fail("expected '=' after attribute " + key);
      ++pos_;
      skip_space();
      if (pos_ >= s_.size() || (s_[pos_] != '"' && s_[pos_] != '\'')) fail("attribute value must be quoted");
      const char quote = s_[pos_++];
      std::string value;
      while (pos_ < s_.size() && s_[pos_] != quote) {
        if (s_[pos_] == '<') fail("'<' in attribute value");
        if (s_[pos_] == '&') {
          value += reference();
        } else {
          value += s_[pos_++];
        }
      }
      if (pos_ >= s_.size()) fail("unterminated attribute value");
      ++pos_;
      if (!el.attrs.emplace(key, value).second) fail("duplicate attribute " + key);
    }

    const int index = static_cast<int>(out_.elements.size());
    out_.elements.push_back(el);
    std::string text;
    for (;;) {
      if (pos_ >= s_.size()) fail("unclosed element <" + el.name + ">");
      if (s_.substr(pos_, 2) == "</") {
        pos_ += 2;
        const std::string closing = name();
        if (closing != el.name) fail("mismatched </" + closing + ">, expected </" + el.name + ">");
        skip_space();
        if (pos_ >= s_.size() || s_[pos_] != '>') fail("malformed end tag");
        ++pos_;
        out_.elements[static_cast<std::size_t>(index)].text = text;
        return;
      }
      if (s_.substr(pos_, 4) == "<!--") {
        comment();
      } else if (s_[pos_] == '<') {
        element(depth + 1, index);
      } else if (s_[pos_] == '&') {
        text += reference();
      } else {
        if (s_.substr(pos_, 3) == "]]>") fail("']]>' in character data");
        text += s_[pos_++];
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  XmlSummary& out_;
};

}  // namespace

std::vector<const XmlElement*> XmlSummary::find(std::string_view name) const {
  std::vector<const XmlElement*> out;
  for (const auto& e : elements) {
    if (e.name == name) out.push_back(&e);
  }
  return out;
}

std::vector<const XmlElement*> XmlSummary::find_with_class(std::string_view name, std::string_view token) const {
  std::vector<const XmlElement*> out;
  for (const auto* e : find(name)) {
    auto it = e->attrs.find("class");
    if (it == e->attrs.end()) continue;
    std::istringstream words(it->second);
    for (std::string w; words >> w;) {
      if (w == token) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

XmlSummary check_xml(std::string_view text) {
  XmlSummary out;
  try {
    Reader(text, out).document();
    out.ok = true;
  } catch (const Failure& e) {
    out.error = e.what();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace jmtest
