#pragma once

#include <stdexcept>
#include <string>

namespace cylf {

// Domain errors carry a stable machine-readable code alongside the message.
// The CLI maps these to exit status 1 and a JSON error record.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace cylf
