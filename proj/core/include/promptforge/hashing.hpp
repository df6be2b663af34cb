#pragma once

#include <string>
#include <string_view>

namespace promptforge {

/// SHA-256 digest of `bytes` as 64 lowercase hex characters.
std::string sha256_hex(std::string_view bytes);

/// SHA-256 of a file's contents; throws NotFoundError if unreadable.
std::string sha256_file(const std::string& path);

} // namespace promptforge
