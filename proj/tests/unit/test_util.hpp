#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace sylloprobe::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);
std::vector<std::string> read_lines(const std::filesystem::path& path);
std::string sha256_file(const std::filesystem::path& path);

}  // namespace sylloprobe::testing
