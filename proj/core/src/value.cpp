#include "loday/value.hpp"

#include <cctype>
#include <sstream>

namespace loday {

std::string Diagnostic::render() const {
  std::ostringstream os;
  os << cls << " at " << line << ":" << col << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << ", ";
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

Value Value::boolean(bool b) {
  Value v;
  v.kind_ = Kind::Bool;
  v.bool_ = b;
  return v;
}

Value Value::integer(std::int64_t i) {
  Value v;
  v.kind_ = Kind::Int;
  v.int_ = i;
  return v;
}

Value Value::string(std::string s) {
  Value v;
  v.kind_ = Kind::String;
  v.str_ = std::move(s);
  return v;
}

Value Value::array() {
  Value v;
  v.kind_ = Kind::Array;
  return v;
}

Value Value::object() {
  Value v;
  v.kind_ = Kind::Object;
  return v;
}

void Value::set(std::string key, Value v) {
  for (auto& [k, old] : obj_)
    if (k == key) {
      old = std::move(v);
      return;
    }
  obj_.emplace_back(std::move(key), std::move(v));
}

const Value* Value::find(std::string_view key) const {
  for (const auto& [k, v] : obj_)
    if (k == key) return &v;
  return nullptr;
}

bool Value::equals(const Value& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Null:
      return true;
    case Kind::Bool:
      return bool_ == other.bool_;
    case Kind::Int:
      return int_ == other.int_;
    case Kind::String:
      return str_ == other.str_;
    case Kind::Array: {
      if (arr_.size() != other.arr_.size()) return false;
      for (std::size_t i = 0; i < arr_.size(); ++i)
        if (!arr_[i].equals(other.arr_[i])) return false;
      return true;
    }
    case Kind::Object: {
      if (obj_.size() != other.obj_.size()) return false;
      for (std::size_t i = 0; i < obj_.size(); ++i)
        if (obj_[i].first != other.obj_[i].first || !obj_[i].second.equals(other.obj_[i].second))
          return false;
      return true;
    }
  }
  return false;
}

namespace {

constexpr int kMaxDepth = 200;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run() {
    skip_ws();
    Value v;
    if (!parse(v, 0)) return {std::nullopt, diag_};
    skip_ws();
    if (pos_ < text_.size()) {
      error("trailing content after document", {"end of input"});
      return {std::nullopt, diag_};
    }
    return {std::move(v), std::nullopt};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::optional<Diagnostic> diag_;

  void advance() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  int peek() const { return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1; }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        advance();
      else
        break;
    }
  }

  void error(std::string message, std::vector<std::string> expected) {
    if (diag_) return;
    diag_ = Diagnostic{"syntax-error", std::move(message), line_, col_, std::move(expected)};
  }

  bool literal(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  bool parse(Value& out, int depth) {
    if (depth > kMaxDepth) {
      error("nesting too deep", {});
      return false;
    }
    skip_ws();
    int l = line_, c = col_;
    int ch = peek();
    bool ok;
    switch (ch) {
      case -1:
        error("unexpected end of input", {"value"});
        return false;
      case '{':
        ok = parse_object(out, depth);
        break;
      case '[':
        ok = parse_array(out, depth);
        break;
      case '"': {
        std::string s;
        ok = parse_string(s);
        if (ok) out = Value::string(std::move(s));
        break;
      }
      case 't':
        ok = literal("true");
        if (ok)
          out = Value::boolean(true);
        else
          error("unrecognized token", {"true"});
        break;
      case 'f':
        ok = literal("false");
        if (ok)
          out = Value::boolean(false);
        else
          error("unrecognized token", {"false"});
        break;
      case 'n':
        ok = literal("null");
        if (ok)
          out = Value();
        else
          error("unrecognized token", {"null"});
        break;
      default:
        ok = parse_int(out);
        break;
    }
    if (ok) {
      out.line = l;
      out.col = c;
    }
    return ok;
  }

  bool parse_int(Value& out) {
    std::size_t start = pos_;
    std::string digits;
    if (peek() == '-') {
      digits.push_back('-');
      advance();
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_]);
      advance();
    }
    if (digits.empty() || digits == "-") {
      error("unrecognized token", {"value"});
      return false;
    }
    int ch = peek();
    if (ch == '.' || ch == 'e' || ch == 'E') {
      error("non-integer numbers are not part of the format; write scalars as strings", {});
      return false;
    }
    if (digits.size() > 18) {
      error("integer literal out of range", {});
      return false;
    }
    (void)start;
    out = Value::integer(std::stoll(digits));
    return true;
  }

  bool parse_string(std::string& out) {
    advance();  // opening quote
    while (true) {
      int ch = peek();
      if (ch == -1) {
        error("unterminated string", {"\""});
        return false;
      }
      if (ch == '"') {
        advance();
        return true;
      }
      if (ch == '\\') {
        advance();
        int esc = peek();
        switch (esc) {
          case '"': out.push_back('"'); advance(); break;
          case '\\': out.push_back('\\'); advance(); break;
          case '/': out.push_back('/'); advance(); break;
          case 'b': out.push_back('\b'); advance(); break;
          case 'f': out.push_back('\f'); advance(); break;
          case 'n': out.push_back('\n'); advance(); break;
          case 'r': out.push_back('\r'); advance(); break;
          case 't': out.push_back('\t'); advance(); break;
          case 'u': {
            advance();
            unsigned code = 0;
            for (int i = 0; i < 4; ++i) {
              int h = peek();
              if (h >= '0' && h <= '9')
                code = code * 16 + (h - '0');
              else if (h >= 'a' && h <= 'f')
                code = code * 16 + (h - 'a' + 10);
              else if (h >= 'A' && h <= 'F')
                code = code * 16 + (h - 'A' + 10);
              else {
                error("bad unicode escape", {"hex digit"});
                return false;
              }
              advance();
            }
            // UTF-8 encode the code point; surrogates are passed through
            // as replacement characters rather than rejected.
            if (code < 0x80) {
              out.push_back(static_cast<char>(code));
            } else if (code < 0x800) {
              out.push_back(static_cast<char>(0xC0 | (code >> 6)));
              out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            } else {
              out.push_back(static_cast<char>(0xE0 | (code >> 12)));
              out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
              out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            }
            break;
          }
          default:
            error("bad escape sequence", {});
            return false;
        }
        continue;
      }
      if (ch < 0x20) {
        error("control character in string", {});
        return false;
      }
      out.push_back(static_cast<char>(ch));
      advance();
    }
  }

  bool parse_array(Value& out, int depth) {
    advance();  // '['
    out = Value::array();
    skip_ws();
    if (peek() == ']') {
      advance();
      return true;
    }
    while (true) {
      Value item;
      if (!parse(item, depth + 1)) return false;
      out.push(std::move(item));
      skip_ws();
      int ch = peek();
      if (ch == ',') {
        advance();
        continue;
      }
      if (ch == ']') {
        advance();
        return true;
      }
      error("bad array separator", {",", "]"});
      return false;
    }
  }

  bool parse_object(Value& out, int depth) {
    advance();  // '{'
    out = Value::object();
    skip_ws();
    if (peek() == '}') {
      advance();
      return true;
    }
    while (true) {
      skip_ws();
      if (peek() != '"') {
        error("object key must be a string", {"\""});
        return false;
      }
      int kl = line_, kc = col_;
      std::string key;
      if (!parse_string(key)) return false;
      if (out.find(key)) {
        diag_ = Diagnostic{"duplicate-name", "duplicate key \"" + key + "\"", kl, kc, {}};
        return false;
      }
      skip_ws();
      if (peek() != ':') {
        error("missing ':' after key", {":"});
        return false;
      }
      advance();
      Value item;
      if (!parse(item, depth + 1)) return false;
      out.members().emplace_back(std::move(key), std::move(item));
      skip_ws();
      int ch = peek();
      if (ch == ',') {
        advance();
        continue;
      }
      if (ch == '}') {
        advance();
        return true;
      }
      error("bad object separator", {",", "}"});
      return false;
    }
  }
};

void emit_string(std::ostringstream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\b': os << "\\b"; break;
      case '\f': os << "\\f"; break;
      case '\n': os << "\\n"; break;
      case '\r': os << "\\r"; break;
      case '\t': os << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          os << buf;
        } else {
          os << c;
        }
    }
  }
  os << '"';
}

void emit_impl(std::ostringstream& os, const Value& v, int indent) {
  std::string pad(2 * indent, ' ');
  std::string pad_in(2 * (indent + 1), ' ');
  switch (v.kind()) {
    case Value::Kind::Null:
      os << "null";
      break;
    case Value::Kind::Bool:
      os << (v.as_bool() ? "true" : "false");
      break;
    case Value::Kind::Int:
      os << v.as_int();
      break;
    case Value::Kind::String:
      emit_string(os, v.as_string());
      break;
    case Value::Kind::Array: {
      if (v.items().empty()) {
        os << "[]";
        break;
      }
      // Arrays of leaves stay on one line; nested structures get indented.
      bool nested = false;
      for (const Value& it : v.items())
        if (it.kind() == Value::Kind::Array || it.kind() == Value::Kind::Object) nested = true;
      if (!nested) {
        os << "[";
        for (std::size_t i = 0; i < v.items().size(); ++i) {
          if (i) os << ", ";
          emit_impl(os, v.items()[i], indent);
        }
        os << "]";
      } else {
        os << "[\n";
        for (std::size_t i = 0; i < v.items().size(); ++i) {
          os << pad_in;
          emit_impl(os, v.items()[i], indent + 1);
          if (i + 1 < v.items().size()) os << ",";
          os << "\n";
        }
        os << pad << "]";
      }
      break;
    }
    case Value::Kind::Object: {
      if (v.members().empty()) {
        os << "{}";
        break;
      }
      os << "{\n";
      for (std::size_t i = 0; i < v.members().size(); ++i) {
        os << pad_in;
        emit_string(os, v.members()[i].first);
        os << ": ";
        emit_impl(os, v.members()[i].second, indent + 1);
        if (i + 1 < v.members().size()) os << ",";
        os << "\n";
      }
      os << pad << "}";
      break;
    }
  }
}

}  // namespace

ParseResult parse_value(std::string_view text) { return Parser(text).run(); }

std::string emit_value(const Value& v) {
  std::ostringstream os;
  emit_impl(os, v, 0);
  os << "\n";
  return os.str();
}

}  // namespace loday
