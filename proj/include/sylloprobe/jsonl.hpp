#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

namespace sylloprobe {

// Calls fn(line_number, text) for every line that is not blank; line numbers
// are 1-based and count blank lines too. Throws IoError.
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::size_t, std::string_view)>& fn);

// Replaces the file's contents. Throws IoError with the path.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace sylloprobe
