#pragma once

#include <string>
#include <string_view>

namespace req2road {

// SHA-256 of the input bytes as a lowercase hex string.
std::string sha256_hex(std::string_view data);

std::string sha256_file_hex(const std::string& path);

}  // namespace req2road
