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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qcs/circuit.hpp"
#include "qcs/linalg.hpp"

namespace qcs {

/// Grover-Rudolph style preparation: n uniformly controlled gates of growing
/// sizes driven by the amplitude tree. Uses no ancillas (the budget is
/// accepted for interface parity).
Circuit build_qsp_cascade(const std::vector<Complex> &v, int budget_m = 0);

/// One bit per tree node (heap order, see AmplitudeTree::node_index).
struct LeafAssignment {
  int n = 0;
  std::vector<uint8_t> z;  // 2^n - 1 entries

  void validate() const;
};

/// The leaf reached from the root by walking left/right on z: at node x,
/// move to child x.z_x. Returned as the leaf's basis index (first walk
/// symbol = bit 0).
uint64_t leaf_function(const LeafAssignment &z);

/// |z, a> -> |z, a XOR leaf(z)>. node_qubits holds z in heap order, out_reg
/// the n result bits, scratch at least 2^n - 2 qubits (restored).
Circuit build_u_leaf(int n, const std::vector<int> &node_qubits,
                     const std::vector<int> &out_reg,
                     const std::vector<int> &scratch, int num_qubits = -1);

/// Fixed register layout and the state-independent circuits of the
/// five-layer preparation pipeline for a given n.
///
/// Layout (total n + (2^n - 1) * (n + 2) qubits):
///   [0, n)                      main register S
///   n + node                    R_x, one per tree node (heap order)
///   n + (2^n - 1) + node        A_x flag ancillas
///   n + 2 * (2^n - 1) + ...     S_x, n qubits per node
/// The leaf-walk scratch reuses A_x of nodes 1 .. 2^n - 2.
struct RosenthalPlan {
  int n = 0;
  std::vector<int> s_reg;
  std::vector<int> r_qubit;
  std::vector<int> a_qubit;
  std::vector<std::vector<int>> sx_reg;
  int total_qubits = 0;
  std::vector<int> ancilla_list;

  // State-independent circuits: the leaf-walk (C1'), the rest of C1, the two
  // parallel-CNOT layers, the flag halves, and the copy closer.
  Circuit c1_prime{0}, c1_second{0}, c2{0}, c3{0}, c4{0}, c5{0};

  /// Largest layer gate count divided by 2^n.
  double layer_constant = 0;

  struct Layer {
    std::vector<std::pair<int, Mat2>> gates;  // (qubit, matrix), depth 1
  };
  /// The five state-dependent depth-1 layers for a target vector.
  std::array<Layer, 5> layers(const std::vector<Complex> &v) const;

  /// Qubit lists per layer (fixed across targets, index-aligned with
  /// Layer::gates).
  std::array<std::vector<int>, 5> layer_qubits() const;
};

RosenthalPlan make_rosenthal_plan(int n);

/// Ancillas consumed by the plan: (2^n - 1) * (n + 2).
int rosenthal_required_ancillas(int n);

/// Layer-width constant of the plan (computable without building it).
double rosenthal_layer_constant(int n);

Circuit layer_to_circuit(const RosenthalPlan::Layer &layer, int num_qubits);

/// Adjoint of the register transform of the tree pipeline; emitted in the
/// factored form C1'' L2 C2 L3 C3 L4 C4 L5 C5 (application order).
Circuit build_gamma_dagger(const std::vector<Complex> &v,
                           const RosenthalPlan &plan);

/// Tree-based preparation: run on |0^(n+m)> yields |psi_v> (x) |0^m>.
/// Requires budget_m >= rosenthal_required_ancillas(n); the emitted circuit
/// has exactly that many ancillas.
Circuit build_qsp_rosenthal(const std::vector<Complex> &v, int budget_m);
Circuit build_qsp_rosenthal_with_plan(const std::vector<Complex> &v,
                                      const RosenthalPlan &plan);

enum class QspMethod { Auto, Cascade, Rosenthal };

struct QspResult {
  Circuit circuit;
  std::string method;
};

/// Auto mode picks the tree pipeline when the budget meets its layout
/// requirement and falls back to the cascade otherwise.
QspResult build_qsp(const std::vector<Complex> &v, int budget_m,
                    QspMethod method = QspMethod::Auto);

}  // namespace qcs
