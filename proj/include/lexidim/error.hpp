#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lexidim {

/// Library error with a stable machine-readable code alongside the message.
/// Codes in use: "parse", "index", "order", "disconnected", "k_range",
/// "family", "hypothesis", "cap".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace lexidim
