#pragma once

#include <filesystem>
#include <string>

namespace ccd {

std::string read_text_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// 1-based line and column of a byte offset, e.g. "line 4, column 17".
std::string describe_offset(const std::string& text, std::size_t byte_offset);

}  // namespace ccd
