// Copyright 2026 The csszx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

namespace csszx::testing {

/// 0-based qrm15 qubits whose morph gives an [[8,3,2]] child and a [[10,1,2]]
/// morphed code. Found by find_morph_subset.
inline const std::vector<std::size_t> kQrmCubeSubset = {7, 8, 9, 10, 11, 12, 13, 14};

}  // namespace csszx::testing
