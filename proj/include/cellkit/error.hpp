#pragma once

#include <stdexcept>
#include <string>

namespace cellkit {

/// Every failure raised by the library carries a stable machine-readable code
/// (surfaced by the CLI as {"code", "message", "context"}).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

private:
    std::string code_;
    std::string context_;
};

inline Error not_divisible(const std::string& ctx = {}) {
    return Error("NotDivisible", "polynomial division has a nonzero remainder", ctx);
}
inline Error dimension_mismatch(const std::string& ctx = {}) {
    return Error("DimensionMismatch", "operands have different periods", ctx);
}

}  // namespace cellkit
