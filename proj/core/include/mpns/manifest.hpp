#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mpns {

std::string sha256_hex(std::span<const unsigned char> bytes);
std::string sha256_hex(const std::string& text);
std::string sha256_file_hex(const std::string& path);

/// Combined content hash over (name, file-hash) pairs sorted by name; the
/// run manifest stores this, so it changes iff any output byte changes.
std::string combined_hash(const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace mpns
