// include/sik/model/alphabet.h

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

#ifndef SIK_MODEL_ALPHABET_H_
#define SIK_MODEL_ALPHABET_H_

#include <string>
#include <vector>

#include "sik/base/common.h"

namespace sik::model {

// Character classes for the CTC head, loaded from a data file rather than
// hard-coded. File format: one token per line, class index = line number;
// literal characters plus the markers <space>, <reserved>, <blank>. The
// blank must be the last class.
class Alphabet {
 public:
  static Alphabet FromFile(const std::string &path);

  int64 classes() const { return static_cast<int64>(tokens_.size()); }
  int blank() const { return static_cast<int>(tokens_.size()) - 1; }

  // Text must be lowercase; unknown characters are an error.
  std::vector<int> Encode(const std::string &text) const;
  std::string Decode(const std::vector<int> &labels) const;

 private:
  std::vector<std::string> tokens_;  // markers or single characters
};

}  // namespace sik::model

#endif  // SIK_MODEL_ALPHABET_H_
