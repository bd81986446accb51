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

#include <vector>

#include "qcs/circuit.hpp"

namespace qcs {

enum class RotationAxis { Ry, Rz };

/// Uniformly controlled rotation, exact: applies R(angles[x]) to `target`
/// for control word x (bit j of x on controls[j]). Emits 2^q rotations and
/// 2^q CNOTs via the Gray-code cascade (a single rotation when q = 0).
Circuit build_mux_rotation(RotationAxis axis, const std::vector<double> &angles,
                           const std::vector<int> &controls, int target,
                           int num_qubits);

/// Appends an exact synthesis of diag(e^{i phases[idx]}) over `qubits`
/// (bit j of idx on qubits[j]) to `out` and returns the residual global
/// phase, which the caller must account for. At most 2^{j+1} - 3 gates.
double append_diagonal(Circuit &out, const std::vector<double> &phases,
                       const std::vector<int> &qubits);

/// Exact diagonal including the global phase (folded into an emitted gate,
/// or a phased identity if the diagonal is trivial).
Circuit build_diagonal(const std::vector<double> &phases,
                       const std::vector<int> &qubits, int num_qubits);

/// A uniformly controlled unitary: control set S, target set T, and the
/// table x -> U_x (bit j of x on controls[j]).
struct UcuSpec {
  std::vector<int> controls;
  std::vector<int> targets;
  std::vector<Mat> table;

  void validate() const;
};

/// Synthesizes a UCG (|T| = 1) exactly: the extracted unitary equals the
/// block-diagonal matrix diag(U_0, ..., U_{2^k-1}). Uses the demultiplexing
/// cascade (2^k single-qubit gates, 2^k - 1 CNOTs) followed by an exact
/// diagonal, for at most 6 * 2^k gates and no ancillas. The ancilla budget
/// is accepted for interface parity; this kernel does not consume it.
Circuit build_ucg(const UcuSpec &spec, int budget_m = 0);

/// The cascade alone: `circuit` implements the UCG up to the left diagonal
/// diag(e^{i diag_phases[y]}) over (controls..., target), y's bit j on
/// controls[j] and the top bit on the target. Callers chaining UCGs fold
/// the phases into the next stage's table instead of paying for a
/// diagonal synthesis.
struct UcgDeferred {
  Circuit circuit;
  std::vector<double> diag_phases;
};
UcgDeferred build_ucg_deferred(const UcuSpec &spec);

}  // namespace qcs
