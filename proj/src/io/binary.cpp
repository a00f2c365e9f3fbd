// SPDX-License-Identifier: Apache-2.0

#include "hmi/io/binary.hpp"

#include <bit>
#include <cstring>

#include "hmi/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "artifact file io assumes a little-endian host");

namespace hmi::io {

BinaryWriter::BinaryWriter(const std::filesystem::path& path)
    : out_(path, std::ios::binary | std::ios::trunc), path_(path) {
  if (!out_) {
    throw ConfigError("cannot open " + path.string() + " for writing");
  }
}

BinaryWriter::~BinaryWriter() = default;

void BinaryWriter::bytes(const void* p, std::size_t n) {
  out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
  if (!out_) {
    throw ConfigError("write failed for " + path_.string());
  }
}

void BinaryWriter::magic(const char tag[4]) { bytes(tag, 4); }
void BinaryWriter::u32(std::uint32_t v) { bytes(&v, 4); }
void BinaryWriter::u64(std::uint64_t v) { bytes(&v, 8); }
void BinaryWriter::f32(float v) { bytes(&v, 4); }

void BinaryWriter::f32_from_f64(std::span<const double> values) {
  for (double v : values) f32(static_cast<float>(v));
}

void BinaryWriter::str(const std::string& s) {
  u32(static_cast<std::uint32_t>(s.size()));
  if (!s.empty()) bytes(s.data(), s.size());
}

void BinaryWriter::close() {
  out_.close();
  if (out_.fail()) {
    throw ConfigError("close failed for " + path_.string());
  }
}

BinaryReader::BinaryReader(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open " + path.string(), 0);
  }
  in.seekg(0, std::ios::end);
  const auto size = in.tellg();
  in.seekg(0, std::ios::beg);
  data_.resize(static_cast<std::size_t>(size));
  if (size > 0) {
    in.read(reinterpret_cast<char*>(data_.data()), size);
  }
  if (!in) {
    throw FormatError("read failed for " + path.string(), 0);
  }
}

void BinaryReader::bytes(void* p, std::size_t n) {
  if (offset_ + n > data_.size()) {
    throw FormatError("unexpected end of file", offset_);
  }
  std::memcpy(p, data_.data() + offset_, n);
  offset_ += n;
}

void BinaryReader::magic(const char tag[4]) {
  char got[4];
  bytes(got, 4);
  if (std::memcmp(got, tag, 4) != 0) {
    throw FormatError(std::string("bad magic, expected ") + std::string(tag, 4),
                      offset_ - 4);
  }
}

std::uint32_t BinaryReader::u32() {
  std::uint32_t v;
  bytes(&v, 4);
  return v;
}

std::uint64_t BinaryReader::u64() {
  std::uint64_t v;
  bytes(&v, 8);
  return v;
}

float BinaryReader::f32() {
  float v;
  bytes(&v, 4);
  return v;
}

void BinaryReader::f32_to_f64(std::span<double> out) {
  for (double& v : out) v = static_cast<double>(f32());
}

std::string BinaryReader::str(std::size_t max_len) {
  const std::size_t at = offset_;
  const std::uint32_t len = u32();
  if (len > max_len) {
    throw FormatError("string length " + std::to_string(len) + " implausible", at);
  }
  std::string s(len, '\0');
  if (len > 0) bytes(s.data(), len);
  return s;
}

void BinaryReader::expect_end() const {
  if (!at_end()) {
    throw FormatError("trailing bytes after payload", offset_);
  }
}

}  // namespace hmi::io
