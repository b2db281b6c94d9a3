#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace vw {

/// Minimal JSON value with byte-stable serialization: object keys are
/// emitted in sorted order and doubles are printed with 17 significant
/// digits, so identical data always serializes to identical bytes.
class Json {
  public:
    using Array = std::vector<Json>;
    using Object = std::vector<std::pair<std::string, Json>>;

    Json() : value_(nullptr) {}
    Json(std::nullptr_t) : value_(nullptr) {}
    Json(bool b) : value_(b) {}
    Json(int i) : value_(static_cast<std::int64_t>(i)) {}
    Json(long i) : value_(static_cast<std::int64_t>(i)) {}
    Json(long long i) : value_(static_cast<std::int64_t>(i)) {}
    Json(std::size_t i) : value_(static_cast<std::int64_t>(i)) {}
    Json(double d) : value_(d) {}
    Json(const char* s) : value_(std::string(s)) {}
    Json(std::string s) : value_(std::move(s)) {}
    Json(Array a) : value_(std::move(a)) {}
    Json(Object o) : value_(std::move(o)) {}

    static Json object() { return Json(Object{}); }
    static Json array() { return Json(Array{}); }

    bool is_object() const { return std::holds_alternative<Object>(value_); }
    bool is_array() const { return std::holds_alternative<Array>(value_); }
    bool is_number() const {
        return std::holds_alternative<double>(value_) || std::holds_alternative<std::int64_t>(value_);
    }
    bool is_string() const { return std::holds_alternative<std::string>(value_); }

    /// Object lookup; nullptr when absent or not an object.
    const Json* find(const std::string& key) const;

    double as_number() const;
    std::int64_t as_int() const;
    const std::string& as_string() const;
    bool as_bool() const;

    /// Adds or replaces a key in an object value.
    Json& set(const std::string& key, Json value);

    /// Appends to an array value.
    Json& push(Json value);

    /// Compact serialization (no whitespace), sorted keys.
    std::string dump() const;

    /// Indented serialization, sorted keys; same numeric formatting.
    std::string pretty() const;

  private:
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> value_;

    void write(std::string& out, int indent, int depth) const;
};

/// Locale-independent shortest-faithful formatting: 17 significant digits.
std::string format_number(double v);

/// Escapes a string for embedding in JSON output.
std::string json_escape(const std::string& s);

}  // namespace vw
