// src/nn/checkpoint.cc

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

#include "sik/nn/checkpoint.h"

#include <map>

#include "sik/base/io.h"

namespace sik::nn {

namespace {
constexpr uint32 kCkptVersion = 1;
}  // namespace

void SaveCheckpoint(const std::string &path,
                    const std::vector<Param *> &params) {
  BinaryWriter w(path);
  w.PutBytes("CKPT", 4);
  w.Put<uint32>(kCkptVersion);
  w.Put<uint32>(static_cast<uint32>(params.size()));
  for (const Param *p : params) {
    w.Put<uint32>(static_cast<uint32>(p->name.size()));
    w.PutBytes(p->name.data(), static_cast<int64>(p->name.size()));
    w.Put<uint32>(static_cast<uint32>(p->value.rank()));
    for (int64 d : p->value.shape) w.Put<uint32>(static_cast<uint32>(d));
    w.PutArray(p->value.data.data(), p->value.size());
  }
  w.Close();
}

void LoadCheckpoint(const std::string &path,
                    const std::vector<Param *> &params) {
  BinaryReader r(path);
  char magic[4];
  r.GetBytes(magic, 4);
  SIK_REQUIRE(std::string(magic, 4) == "CKPT", path, ": bad magic");
  const uint32 version = r.Get<uint32>();
  SIK_REQUIRE(version == kCkptVersion, path, ": unsupported version ",
              version);
  const uint32 count = r.Get<uint32>();
  SIK_REQUIRE(count == params.size(), path, ": checkpoint has ", count,
              " tensors, model expects ", params.size());

  std::map<std::string, Param *> by_name;
  for (Param *p : params)
    SIK_REQUIRE(by_name.emplace(p->name, p).second, "duplicate param name ",
                p->name);

  for (uint32 i = 0; i < count; ++i) {
    const uint32 name_len = r.Get<uint32>();
    std::string name(name_len, '\0');
    r.GetBytes(name.data(), name_len);
    const auto it = by_name.find(name);
    SIK_REQUIRE(it != by_name.end(), path, ": unknown tensor ", name);
    Param *p = it->second;
    const uint32 rank = r.Get<uint32>();
    SIK_REQUIRE(rank == static_cast<uint32>(p->value.rank()), path, ": ",
                name, ": rank mismatch");
    for (uint32 d = 0; d < rank; ++d) {
      const uint32 dim = r.Get<uint32>();
      SIK_REQUIRE(dim == static_cast<uint32>(p->value.shape[d]), path, ": ",
                  name, ": dim ", d, " mismatch: ", dim, " vs ",
                  p->value.shape[d]);
    }
    r.GetArray(p->value.data.data(), p->value.size());
    by_name.erase(it);
  }
}

}  // namespace sik::nn
