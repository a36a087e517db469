#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace authornet {

/// 64-bit FNV-1a over a byte string.
std::uint64_t fnv1a64(std::string_view bytes);

/// FNV-1a digest of a file's contents, formatted as "fnv1a64:<16 hex digits>".
/// Throws InputError if the file cannot be read.
std::string file_digest(const std::string& path);

/// Same formatting for an in-memory buffer.
std::string digest_string(std::string_view bytes);

}  // namespace authornet
