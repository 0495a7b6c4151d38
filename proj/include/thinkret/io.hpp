#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace thinkret {

/// Little-endian binary writer, independent of host byte order.
class BinaryWriter {
 public:
  explicit BinaryWriter(std::ostream& out) : out_(out) {}
  void u8(std::uint8_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f32(float v);
  void f64(double v);
  void str(std::string_view s);
  void magic(std::string_view m);

 private:
  std::ostream& out_;
};

/// Little-endian binary reader; any short read throws IoError naming `what`.
class BinaryReader {
 public:
  BinaryReader(std::istream& in, std::string what) : in_(in), what_(std::move(what)) {}
  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  float f32();
  double f64();
  std::string str(std::size_t max_len = 1 << 20);
  void expect_magic(std::string_view m);
  /// True when no bytes remain.
  bool at_end();

 private:
  void read(char* dst, std::size_t n);
  std::istream& in_;
  std::string what_;
};

/// Writes via a temporary sibling and renames, so readers never observe a
/// partially written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

std::string read_file(const std::filesystem::path& path);
std::vector<std::string> read_lines(const std::filesystem::path& path);

}  // namespace thinkret
