/*
Copyright 2026 The slac Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

     https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef SLAC_CORE_BINARY_IO_HPP
#define SLAC_CORE_BINARY_IO_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>

#include "slac/core/types.hpp"

namespace slac::io {

static_assert(std::endian::native == std::endian::little,
              "binary formats are little-endian; big-endian hosts need byte swapping");

/// Writes `contents` to `path` through a sibling temporary file and a rename,
/// so readers never observe a partially written file.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open '" + tmp.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw FormatError("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Appends little-endian PODs to a byte buffer.
class BinaryWriter {
 public:
  template <typename T>
  void put(T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    const auto* p = reinterpret_cast<const char*>(&value);
    buf_.append(p, sizeof(T));
  }

  void put_bytes(std::string_view bytes) { buf_.append(bytes); }

  void put_string(std::string_view s) {
    put<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
    buf_.append(s);
  }

  void put_vector(const Vector& v) {
    put<std::uint64_t>(static_cast<std::uint64_t>(v.size()));
    buf_.append(reinterpret_cast<const char*>(v.data()),
                static_cast<std::size_t>(v.size()) * sizeof(double));
  }

  const std::string& bytes() const { return buf_; }

 private:
  std::string buf_;
};

/// Reads the layout produced by BinaryWriter; every read is bounds-checked.
class BinaryReader {
 public:
  explicit BinaryReader(std::string bytes, std::string source = "buffer")
      : buf_(std::move(bytes)), source_(std::move(source)) {}

  template <typename T>
  T get() {
    static_assert(std::is_trivially_copyable_v<T>);
    need(sizeof(T));
    T value;
    std::memcpy(&value, buf_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return value;
  }

  std::string get_bytes(std::size_t n) {
    need(n);
    std::string out = buf_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  std::string get_string() { return get_bytes(get<std::uint32_t>()); }

  Vector get_vector() {
    const auto n = get<std::uint64_t>();
    if (n > (buf_.size() - pos_) / sizeof(double)) need(buf_.size() + 1);
    need(n * sizeof(double));
    Vector v(static_cast<Index>(n));
    std::memcpy(v.data(), buf_.data() + pos_, n * sizeof(double));
    pos_ += n * sizeof(double);
    return v;
  }

  void expect_magic(std::string_view magic) {
    if (get_bytes(magic.size()) != magic) {
      throw FormatError(source_ + ": bad magic, expected '" + std::string(magic) + "'");
    }
  }

  bool at_end() const { return pos_ == buf_.size(); }
  const std::string& source() const { return source_; }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > buf_.size()) throw FormatError(source_ + ": unexpected end of data");
  }

  std::string buf_;
  std::string source_;
  std::size_t pos_ = 0;
};

}  // namespace slac::io

#endif  // SLAC_CORE_BINARY_IO_HPP
