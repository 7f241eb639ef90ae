#pragma once

#include <string>

namespace gabm {

// Throws Error when the file cannot be opened or read.
std::string read_text_file(const std::string& path);

// Creates parent directories as needed; throws Error on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gabm
