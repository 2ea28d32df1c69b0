// include/sik/nn/checkpoint.h

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

#ifndef SIK_NN_CHECKPOINT_H_
#define SIK_NN_CHECKPOINT_H_

#include <string>
#include <vector>

#include "sik/nn/tensor.h"

namespace sik::nn {

// Checkpoint container (docs/file-formats.md): magic "CKPT", version u32,
// count u32, then per tensor: name length u32, name bytes, rank u32, dims
// u32 each, f64 data. Round-trips bit-exactly.
void SaveCheckpoint(const std::string &path,
                    const std::vector<Param *> &params);

// Loads into the given params; every name must be present with matching
// shape, and the file must not contain extras.
void LoadCheckpoint(const std::string &path,
                    const std::vector<Param *> &params);

}  // namespace sik::nn

#endif  // SIK_NN_CHECKPOINT_H_
