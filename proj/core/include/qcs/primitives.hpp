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

#include <string>
#include <vector>

#include "qcs/circuit.hpp"

namespace qcs {

/// Fans |x> on `src` out to the m registers in `dsts` (each of width n) by
/// a CNOT doubling tree: on basis input |x>|0^{mn}> produces |x>|x>^(x)m.
/// CNOT-only, size m*n, depth <= ceil(log2(m+1)).
Circuit build_copy(int n, int m, const std::vector<int> &src,
                   const std::vector<std::vector<int>> &dsts,
                   int num_qubits = -1);

enum class ToffoliMode { NoAncilla, LogDepth };

/// |x_1..x_k, b> -> |x_1..x_k, b XOR prod x_i> on basis states.
///
/// NoAncilla uses the standard ladder of controlled square roots on the
/// controls and target only. LogDepth computes a balanced AND tree into
/// k - 1 of the supplied ancillas (compute/uncompute), depth O(log k).
Circuit build_nfold_toffoli(const std::vector<int> &controls, int target,
                            const std::vector<int> &ancillas, ToffoliMode mode,
                            int num_qubits = -1);

/// Applies V to `target` iff the first |y| qubits of `ctrl_reg` carry the
/// bit pattern y ('0'/'1' string), using `ancilla` as the match flag:
/// X-frame, |y|-fold Toffoli onto the ancilla, then C / CNOT / B / CNOT /
/// A+R(alpha) stages with V = e^{i alpha} A X B X C, un-Toffoli, X-frame.
/// With an empty prefix this is a plain V on the target.
Circuit build_prefix_ctrl_1q(const std::string &prefix,
                             const std::vector<int> &ctrl_reg, int target,
                             int ancilla, const Mat2 &v, int num_qubits = -1);

/// The opening half of the gadget: X-frame on the zero bits of the prefix
/// followed by the |y|-fold Toffoli onto the ancilla. The frame is left
/// open (the prefix qubits stay flipped); the closing half is the adjoint.
/// An empty prefix sets the flag with a plain X.
Circuit build_prefix_flag(const std::string &prefix,
                          const std::vector<int> &ctrl_reg, int ancilla,
                          int num_qubits);

/// Principal square root of a 2x2 unitary.
Mat2 unitary_sqrt(const Mat2 &u);

}  // namespace qcs
