#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace req2road {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document; carries the 1-based source line.
struct ParseError : Error {
    ParseError(int line_no, const std::string& message)
        : Error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
    int line;
};

// Structurally valid document that violates a schema rule.
struct SchemaError : Error {
    using Error::Error;
};

// Path not present in the loaded catalog. The nearest paths are diagnostic only.
struct UnknownSignalError : Error {
    explicit UnknownSignalError(std::string bad_path, std::vector<std::string> nearest_paths = {})
        : Error(render(bad_path, nearest_paths)),
          path(std::move(bad_path)),
          nearest(std::move(nearest_paths)) {}

    std::string path;
    std::vector<std::string> nearest;

private:
    static std::string render(const std::string& p, const std::vector<std::string>& near) {
        std::string msg = "unknown signal \"" + p + "\"";
        if (!near.empty()) {
            msg += " (nearest:";
            for (const auto& n : near) msg += " " + n;
            msg += ")";
        }
        return msg;
    }
};

struct TypeMismatchError : Error {
    TypeMismatchError(const std::string& path, const std::string& expected, const std::string& got)
        : Error("type mismatch on " + path + ": expected " + expected + ", got " + got) {}
};

struct GatewayError : Error {
    GatewayError(std::string provider, const std::string& message)
        : Error("gateway [" + provider + "]: " + message), provider_id(std::move(provider)) {}
    std::string provider_id;
};

struct ConfigError : Error {
    using Error::Error;
};

// Step binding conflicts inside one bundle.
struct BindError : Error {
    using Error::Error;
};

// A pipeline phase was invoked before its upstream gate was satisfied.
struct PhaseOrderError : Error {
    using Error::Error;
};

}  // namespace req2road
