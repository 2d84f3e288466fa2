#pragma once

#include <cstdint>
#include <string>

namespace cylf {

// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& data);

}  // namespace cylf
