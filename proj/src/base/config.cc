// src/base/config.cc

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

#include "sik/base/config.h"

#include <cstdlib>

#include "sik/base/io.h"

namespace sik {

Config Config::FromFile(const std::string &path) {
  return FromString(ReadTextFile(path));
}

Config Config::FromString(const std::string &text) {
  Config c;
  int line_no = 0;
  for (const std::string &raw : SplitLines(text)) {
    ++line_no;
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      Die("config line ", line_no, ": expected key=value, got \"", raw, "\"");
    std::string key = Trim(line.substr(0, eq));
    std::string value = Trim(line.substr(eq + 1));
    if (key.empty()) Die("config line ", line_no, ": empty key");
    c.kv_[key] = value;
  }
  return c;
}

std::string Config::GetString(const std::string &key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) Die("missing config key: ", key);
  touched_[key] = true;
  return it->second;
}

std::string Config::GetString(const std::string &key,
                              const std::string &dflt) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return dflt;
  touched_[key] = true;
  return it->second;
}

int64 Config::GetInt(const std::string &key) const {
  const std::string v = GetString(key);
  char *end = nullptr;
  int64 out = std::strtoll(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    Die("config key ", key, ": not an integer: \"", v, "\"");
  return out;
}

int64 Config::GetInt(const std::string &key, int64 dflt) const {
  return Has(key) ? GetInt(key) : dflt;
}

double Config::GetDouble(const std::string &key) const {
  const std::string v = GetString(key);
  char *end = nullptr;
  double out = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    Die("config key ", key, ": not a number: \"", v, "\"");
  return out;
}

double Config::GetDouble(const std::string &key, double dflt) const {
  return Has(key) ? GetDouble(key) : dflt;
}

bool Config::GetBool(const std::string &key) const {
  const std::string v = GetString(key);
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  Die("config key ", key, ": not a boolean: \"", v, "\"");
}

bool Config::GetBool(const std::string &key, bool dflt) const {
  return Has(key) ? GetBool(key) : dflt;
}

std::vector<int64> Config::GetIntList(const std::string &key,
                                      const std::vector<int64> &dflt) const {
  if (!Has(key)) return dflt;
  std::string v = GetString(key);
  for (char &c : v)
    if (c == ',') c = ' ';
  std::vector<int64> out;
  for (const std::string &tok : SplitWhitespace(v)) {
    char *end = nullptr;
    out.push_back(std::strtoll(tok.c_str(), &end, 10));
    if (end == tok.c_str() || *end != '\0')
      Die("config key ", key, ": not an integer list element: \"", tok, "\"");
  }
  return out;
}

std::vector<std::string> Config::UnusedKeys() const {
  std::vector<std::string> out;
  for (const auto &[k, v] : kv_)
    if (!touched_.count(k)) out.push_back(k);
  return out;
}

std::string Config::ToString() const {
  std::string out;
  for (const auto &[k, v] : kv_) out += k + "=" + v + "\n";
  return out;
}

}  // namespace sik
