#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loday {

/// Parse/validation diagnostic. `cls` is one of the stable classes:
/// "syntax-error", "invalid-scalar", "unresolved-reference",
/// "dimension-clash", "duplicate-name", "bad-schema", "usage".
struct Diagnostic {
  std::string cls;
  std::string message;
  int line = 0;
  int col = 0;
  std::vector<std::string> expected;  // expected-token set at a syntax error

  std::string render() const;
};

/// Tree of the definition format: a JSON-compatible structure restricted to
/// null/bool/integer/string/array/object. Objects preserve insertion order,
/// which keeps emission deterministic; duplicate keys are rejected at parse
/// time. Every node remembers its source position for later diagnostics.
class Value {
 public:
  enum class Kind { Null, Bool, Int, String, Array, Object };

  Value() : kind_(Kind::Null) {}
  static Value boolean(bool b);
  static Value integer(std::int64_t v);
  static Value string(std::string s);
  static Value array();
  static Value object();

  Kind kind() const { return kind_; }
  bool is_object() const { return kind_ == Kind::Object; }
  bool is_array() const { return kind_ == Kind::Array; }
  bool is_string() const { return kind_ == Kind::String; }
  bool is_int() const { return kind_ == Kind::Int; }

  bool as_bool() const { return bool_; }
  std::int64_t as_int() const { return int_; }
  const std::string& as_string() const { return str_; }

  std::vector<Value>& items() { return arr_; }
  const std::vector<Value>& items() const { return arr_; }
  std::vector<std::pair<std::string, Value>>& members() { return obj_; }
  const std::vector<std::pair<std::string, Value>>& members() const { return obj_; }

  void push(Value v) { arr_.push_back(std::move(v)); }
  void set(std::string key, Value v);
  const Value* find(std::string_view key) const;

  int line = 0, col = 0;

  /// Structural equality; source positions are ignored.
  bool equals(const Value& other) const;

 private:
  Kind kind_;
  bool bool_ = false;
  std::int64_t int_ = 0;
  std::string str_;
  std::vector<Value> arr_;
  std::vector<std::pair<std::string, Value>> obj_;
};

struct ParseResult {
  std::optional<Value> value;
  std::optional<Diagnostic> diagnostic;

  bool ok() const { return value.has_value(); }
};

/// Total parser: any byte sequence yields either a tree or a diagnostic
/// with line/column and the expected-token set. Nesting is depth-limited.
ParseResult parse_value(std::string_view text);

/// Deterministic two-space-indented emission; parse_value(emit(v)) == v.
std::string emit_value(const Value& v);

}  // namespace loday
