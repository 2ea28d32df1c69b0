// include/sik/base/common.h

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

#ifndef SIK_BASE_COMMON_H_
#define SIK_BASE_COMMON_H_

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sik {

using int16 = std::int16_t;
using int32 = std::int32_t;
using int64 = std::int64_t;
using uint16 = std::uint16_t;
using uint32 = std::uint32_t;
using uint64 = std::uint64_t;

// Thrown on contract violations (bad arguments, malformed files, shape
// mismatches).  CLI maps these to exit code 1; unexpected runtime failures
// map to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

namespace internal {
inline void AppendToStream(std::ostringstream &) {}
template <typename T, typename... Rest>
void AppendToStream(std::ostringstream &os, const T &v, Rest &&...rest) {
  os << v;
  AppendToStream(os, std::forward<Rest>(rest)...);
}
}  // namespace internal

template <typename... Args>
std::string StrCat(Args &&...args) {
  std::ostringstream os;
  internal::AppendToStream(os, std::forward<Args>(args)...);
  return os.str();
}

template <typename... Args>
[[noreturn]] void Die(Args &&...args) {
  throw Error(StrCat(std::forward<Args>(args)...));
}

}  // namespace sik

#define SIK_REQUIRE(cond, ...)                                        \
  do {                                                                \
    if (!(cond))                                                      \
      ::sik::Die("check failed (", #cond, "): ", ##__VA_ARGS__);      \
  } while (0)

#endif  // SIK_BASE_COMMON_H_
