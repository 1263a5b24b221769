#include "sylloprobe/jsonl.hpp"

#include <fstream>

#include "sylloprobe/errors.hpp"

namespace sylloprobe {

void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::size_t, std::string_view)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    std::string_view v = line;
    if (!v.empty() && v.back() == '\r') v.remove_suffix(1);
    if (v.find_first_not_of(" \t") == std::string_view::npos) continue;
    fn(number, v);
  }
  if (in.bad()) throw IoError("read error on " + path.string());
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("write failed on " + path.string());
}

}  // namespace sylloprobe
