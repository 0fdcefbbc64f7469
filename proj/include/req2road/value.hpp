#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace req2road {

// Typed signal value as stored by the broker and carried by runner actions.
using Value = std::variant<bool, std::int64_t, double, std::string>;

enum class ValueType { Bool, Int, Real, Text };

ValueType value_type(const Value& v);
const char* value_type_name(ValueType t);  // "bool" | "int" | "real" | "str"

// Wire encoding: `<type> <literal>`, e.g. `bool true`, `int 42`, `real 21.5`,
// `str "door open"`. Reals use the shortest round-trip decimal form.
std::string encode_value(const Value& v);

// Inverse of encode_value for a split frame. Throws Error on malformed input.
Value decode_value(std::string_view type_tag, std::string_view literal);

// Bare literal form used in step bindings: true | false | 42 | 21.5 | "text".
std::string encode_bare_literal(const Value& v);
Value parse_bare_literal(std::string_view literal);

std::string format_real(double x);
std::string quote_string(std::string_view s);
std::string unquote_string(std::string_view s);  // throws Error on bad escapes

}  // namespace req2road
