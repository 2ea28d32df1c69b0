// src/model/alphabet.cc

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

#include "sik/model/alphabet.h"

#include "sik/base/io.h"

namespace sik::model {

Alphabet Alphabet::FromFile(const std::string &path) {
  Alphabet a;
  for (const std::string &raw : SplitLines(ReadTextFile(path))) {
    const std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    SIK_REQUIRE(line.size() == 1 || line[0] == '<', path,
                ": token must be one character or a <marker>: ", line);
    a.tokens_.push_back(line);
  }
  SIK_REQUIRE(a.tokens_.size() >= 2, path, ": alphabet too small");
  SIK_REQUIRE(a.tokens_.back() == "<blank>", path,
              ": last class must be <blank>");
  return a;
}

std::vector<int> Alphabet::Encode(const std::string &text) const {
  std::vector<int> out;
  out.reserve(text.size());
  for (char ch : text) {
    const std::string needle =
        ch == ' ' ? std::string("<space>") : std::string(1, ch);
    int idx = -1;
    for (size_t i = 0; i < tokens_.size(); ++i)
      if (tokens_[i] == needle) {
        idx = static_cast<int>(i);
        break;
      }
    SIK_REQUIRE(idx >= 0, "character '", std::string(1, ch),
                "' not in alphabet");
    out.push_back(idx);
  }
  return out;
}

std::string Alphabet::Decode(const std::vector<int> &labels) const {
  std::string out;
  for (int l : labels) {
    SIK_REQUIRE(l >= 0 && l < classes(), "label ", l, " out of range");
    const std::string &tok = tokens_[l];
    if (tok == "<space>") {
      out += ' ';
    } else if (tok[0] == '<') {
      Die("label ", l, " (", tok, ") has no text form");
    } else {
      out += tok;
    }
  }
  return out;
}

}  // namespace sik::model
