#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

// Domain failures carry a short machine-readable code ("NonPIntegral",
// "NotDominant", ...) next to the human-readable message.  The CLI maps
// these to exit code 1.
class domain_error : public std::domain_error {
public:
    domain_error(std::string code, const std::string& message)
        : std::domain_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline void check(bool ok, const char* code, const std::string& message) {
    if (!ok) throw domain_error(code, message);
}

}  // namespace siegel
