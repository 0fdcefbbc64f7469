#include "req2road/value.hpp"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <system_error>

#include "req2road/error.hpp"

namespace req2road {

ValueType value_type(const Value& v) {
    switch (v.index()) {
        case 0: return ValueType::Bool;
        case 1: return ValueType::Int;
        case 2: return ValueType::Real;
        default: return ValueType::Text;
    }
}

const char* value_type_name(ValueType t) {
    switch (t) {
        case ValueType::Bool: return "bool";
        case ValueType::Int: return "int";
        case ValueType::Real: return "real";
        case ValueType::Text: return "str";
    }
    return "?";
}

std::string format_real(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string quote_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string unquote_string(std::string_view s) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"') {
        throw Error("string literal must be double-quoted: " + std::string(s));
    }
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        char c = s[i];
        if (c != '\\') {
            out.push_back(c);
            continue;
        }
        if (i + 2 >= s.size() + 0 && i + 1 >= s.size() - 1) {
            throw Error("dangling escape in string literal");
        }
        ++i;
        switch (s[i]) {
            case '"': out.push_back('"'); break;
            case '\\': out.push_back('\\'); break;
            case 'n': out.push_back('\n'); break;
            case 'r': out.push_back('\r'); break;
            case 't': out.push_back('\t'); break;
            default: throw Error(std::string("unknown escape \\") + s[i]);
        }
    }
    return out;
}

std::string encode_value(const Value& v) {
    switch (value_type(v)) {
        case ValueType::Bool: return std::string("bool ") + (std::get<bool>(v) ? "true" : "false");
        case ValueType::Int: return "int " + std::to_string(std::get<std::int64_t>(v));
        case ValueType::Real: return "real " + format_real(std::get<double>(v));
        case ValueType::Text: return "str " + quote_string(std::get<std::string>(v));
    }
    throw Error("unreachable value variant");
}

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t out = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw Error("bad integer literal: " + std::string(s));
    }
    return out;
}

double parse_real(std::string_view s) {
    std::string buf(s);
    errno = 0;
    char* end = nullptr;
    double out = std::strtod(buf.c_str(), &end);
    if (errno != 0 || end != buf.c_str() + buf.size() || buf.empty()) {
        throw Error("bad real literal: " + std::string(s));
    }
    return out;
}

}  // namespace

Value decode_value(std::string_view type_tag, std::string_view literal) {
    if (type_tag == "bool") {
        if (literal == "true") return Value(true);
        if (literal == "false") return Value(false);
        throw Error("bad bool literal: " + std::string(literal));
    }
    if (type_tag == "int") return Value(parse_int(literal));
    if (type_tag == "real") return Value(parse_real(literal));
    if (type_tag == "str") return Value(unquote_string(literal));
    throw Error("unknown value type tag: " + std::string(type_tag));
}

std::string encode_bare_literal(const Value& v) {
    switch (value_type(v)) {
        case ValueType::Bool: return std::get<bool>(v) ? "true" : "false";
        case ValueType::Int: return std::to_string(std::get<std::int64_t>(v));
        case ValueType::Real: return format_real(std::get<double>(v));
        case ValueType::Text: return quote_string(std::get<std::string>(v));
    }
    throw Error("unreachable value variant");
}

Value parse_bare_literal(std::string_view literal) {
    if (literal == "true") return Value(true);
    if (literal == "false") return Value(false);
    if (!literal.empty() && literal.front() == '"') return Value(unquote_string(literal));
    if (literal.find('.') == std::string_view::npos &&
        literal.find('e') == std::string_view::npos &&
        literal.find('E') == std::string_view::npos) {
        return Value(parse_int(literal));
    }
    return Value(parse_real(literal));
}

}  // namespace req2road
