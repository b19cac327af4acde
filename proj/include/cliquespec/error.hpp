#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cliquespec {

// Every failure carries a stable machine-readable kind next to the message,
// so callers (and the CLI) can react without parsing text.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline Error parse_error(const std::string& msg) { return Error("parse_error", msg); }
inline Error invalid_parameter(const std::string& msg) { return Error("invalid_parameter", msg); }
inline Error size_guard(const std::string& msg) { return Error("size_guard", msg); }
inline Error numeric_error(const std::string& msg) { return Error("numeric_error", msg); }
inline Error cover_error(const std::string& msg) { return Error("invalid_cover", msg); }

} // namespace cliquespec
