// Copyright 2026 The qcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>
#include <vector>

#include "qcs/circuit.hpp"

namespace qcs {

using Rng = std::mt19937_64;

/// Haar-random unitary: QR of a complex Ginibre matrix with the R diagonal
/// phases normalized.
Mat haar_unitary(int dim, Rng &rng);

/// Uniform random normalized complex vector of the given length.
std::vector<Complex> random_state(size_t dim, Rng &rng);

}  // namespace qcs
