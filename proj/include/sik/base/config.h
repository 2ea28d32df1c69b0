// include/sik/base/config.h

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

#ifndef SIK_BASE_CONFIG_H_
#define SIK_BASE_CONFIG_H_

#include <map>
#include <string>
#include <vector>

#include "sik/base/common.h"

namespace sik {

// Flat key=value configuration.  Lines starting with '#' and blank lines are
// skipped.  Keys are dotted lowercase ("stft.hop_len").  Values are plain
// strings parsed on access; access to a missing key without a default is an
// error, and every lookup is recorded so validation can list unknown keys.
class Config {
 public:
  Config() = default;

  static Config FromFile(const std::string &path);
  static Config FromString(const std::string &text);

  bool Has(const std::string &key) const { return kv_.count(key) > 0; }

  std::string GetString(const std::string &key) const;
  std::string GetString(const std::string &key, const std::string &dflt) const;
  int64 GetInt(const std::string &key) const;
  int64 GetInt(const std::string &key, int64 dflt) const;
  double GetDouble(const std::string &key) const;
  double GetDouble(const std::string &key, double dflt) const;
  bool GetBool(const std::string &key) const;
  bool GetBool(const std::string &key, bool dflt) const;
  std::vector<int64> GetIntList(const std::string &key,
                                const std::vector<int64> &dflt) const;

  void Set(const std::string &key, const std::string &value) {
    kv_[key] = value;
  }

  // Keys present in the file but never looked up; used to report typos.
  std::vector<std::string> UnusedKeys() const;

  // Serializes in sorted key order.
  std::string ToString() const;

  const std::map<std::string, std::string> &entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
  mutable std::map<std::string, bool> touched_;
};

}  // namespace sik

#endif  // SIK_BASE_CONFIG_H_
