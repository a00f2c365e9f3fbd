// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace hmi::io {

// Little-endian binary writer for the artifact file formats.
class BinaryWriter {
 public:
  explicit BinaryWriter(const std::filesystem::path& path);
  ~BinaryWriter();

  void magic(const char tag[4]);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f32(float v);
  void f32_from_f64(std::span<const double> values);
  // u32 length followed by raw bytes
  void str(const std::string& s);
  void close();

 private:
  void bytes(const void* p, std::size_t n);
  std::ofstream out_;
  std::filesystem::path path_;
};

// Little-endian binary reader; throws FormatError carrying the byte offset
// of the first violation. Reading past the end is always a FormatError.
class BinaryReader {
 public:
  explicit BinaryReader(const std::filesystem::path& path);

  void magic(const char tag[4]);
  std::uint32_t u32();
  std::uint64_t u64();
  float f32();
  void f32_to_f64(std::span<double> out);
  std::string str(std::size_t max_len = 1 << 20);
  std::size_t offset() const noexcept { return offset_; }
  bool at_end() const noexcept { return offset_ == data_.size(); }
  void expect_end() const;

 private:
  void bytes(void* p, std::size_t n);
  std::vector<unsigned char> data_;
  std::size_t offset_ = 0;
};

}  // namespace hmi::io
