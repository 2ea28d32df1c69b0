// include/sik/base/io.h

// Copyright 2026  The SIK Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SIK_BASE_IO_H_
#define SIK_BASE_IO_H_

#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "sik/base/common.h"

namespace sik {

// All binary formats in this project are little-endian.  The helpers below
// assume a little-endian host (checked once at stream construction).

inline bool HostIsLittleEndian() {
  const uint32 probe = 1;
  unsigned char b;
  std::memcpy(&b, &probe, 1);
  return b == 1;
}

class BinaryWriter {
 public:
  explicit BinaryWriter(const std::string &path)
      : os_(path, std::ios::binary), path_(path) {
    SIK_REQUIRE(HostIsLittleEndian(), "big-endian hosts unsupported");
    if (!os_) Die("cannot open for writing: ", path);
  }

  template <typename T>
  void Put(T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    os_.write(reinterpret_cast<const char *>(&v), sizeof(T));
  }

  template <typename T>
  void PutArray(const T *data, int64 n) {
    os_.write(reinterpret_cast<const char *>(data),
              static_cast<std::streamsize>(n * sizeof(T)));
  }

  void PutBytes(const void *data, int64 n) {
    os_.write(static_cast<const char *>(data), n);
  }

  void Close() {
    os_.close();
    if (!os_) Die("write failed: ", path_);
  }

 private:
  std::ofstream os_;
  std::string path_;
};

class BinaryReader {
 public:
  explicit BinaryReader(const std::string &path)
      : is_(path, std::ios::binary), path_(path) {
    SIK_REQUIRE(HostIsLittleEndian(), "big-endian hosts unsupported");
    if (!is_) Die("cannot open for reading: ", path);
  }

  template <typename T>
  T Get() {
    T v{};
    is_.read(reinterpret_cast<char *>(&v), sizeof(T));
    if (!is_) Die("unexpected end of file: ", path_);
    return v;
  }

  template <typename T>
  void GetArray(T *data, int64 n) {
    is_.read(reinterpret_cast<char *>(data),
             static_cast<std::streamsize>(n * sizeof(T)));
    if (!is_) Die("unexpected end of file: ", path_);
  }

  void GetBytes(void *data, int64 n) {
    is_.read(static_cast<char *>(data), n);
    if (!is_) Die("unexpected end of file: ", path_);
  }

  void Skip(int64 n) {
    is_.seekg(n, std::ios::cur);
    if (!is_) Die("unexpected end of file: ", path_);
  }

  bool AtEof() {
    is_.peek();
    return is_.eof();
  }

  const std::string &path() const { return path_; }

 private:
  std::ifstream is_;
  std::string path_;
};

std::string ReadTextFile(const std::string &path);
void WriteTextFile(const std::string &path, const std::string &content);
std::vector<std::string> SplitLines(const std::string &text);
std::vector<std::string> SplitWhitespace(const std::string &line);
std::string Trim(const std::string &s);

}  // namespace sik

#endif  // SIK_BASE_IO_H_
