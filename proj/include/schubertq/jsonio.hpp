#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace schubertq {

/// Minimal JSON value for deterministic output: object keys keep insertion
/// order and doubles print with exactly 12 significant digits, so the same
/// inputs always serialize to the same bytes. Exact-integer payload fields
/// are emitted as strings by the callers; doubles are reserved for spectral
/// quantities.
class Json {
public:
    using Array = std::vector<Json>;
    using Object = std::vector<std::pair<std::string, Json>>;

    Json() : v_(nullptr) {}
    Json(std::nullptr_t) : v_(nullptr) {}
    Json(bool b) : v_(b) {}
    Json(double d) : v_(d) {}
    Json(const char* s) : v_(std::string(s)) {}
    Json(std::string s) : v_(std::move(s)) {}
    Json(Array a) : v_(std::move(a)) {}
    Json(Object o) : v_(std::move(o)) {}

    static Json object() { return Json(Object{}); }
    static Json array() { return Json(Array{}); }

    /// Appends a key; keys are emitted in insertion order.
    Json& set(const std::string& key, Json value);
    /// Appends an array element.
    Json& push(Json value);

    bool is_object() const { return std::holds_alternative<Object>(v_); }
    bool is_array() const { return std::holds_alternative<Array>(v_); }

    /// Compact serialization (no whitespace).
    std::string dump() const;
    /// Pretty serialization with two-space indent and trailing newline.
    std::string pretty() const;

    /// "%.12g" rendering used for all doubles.
    static std::string format_double(double value);

private:
    void write(std::string& out, int indent, bool pretty) const;
    std::variant<std::nullptr_t, bool, double, std::string, Array, Object> v_;
};

}  // namespace schubertq
