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

/// Controlled state preparation |i>|0^n> -> |i>|psi_i> for i in {0,1}^k.
/// The control register occupies qubits [0, k), targets [k, k + n).
struct CqspSpec {
  int k = 0;
  int n = 0;
  std::vector<std::vector<Complex>> states;  // 2^k states of 2^n amplitudes

  void validate() const;
};

enum class CqspMethod { Auto, Case1, ControlledLayers, TwoStage };

struct CqspResult {
  Circuit circuit;
  std::string method;
};

/// n uniformly controlled gates whose tables merge the control index with
/// the amplitude-tree angles of each target state. Correct for any budget;
/// uses no ancillas.
Circuit build_cqsp_case1(const CqspSpec &spec, int budget_m = 0);

/// Five controlled layers sharing the state-independent circuits of the
/// tree pipeline; each state-dependent layer becomes a multi-target UCU
/// with q = k controls. Needs
/// controlled_layers_required_ancillas(k, n) ancillas.
Circuit build_cqsp_controlled_layers(const CqspSpec &spec, int budget_m);

/// Two-stage split: stage 1 prepares the s-qubit marginals
/// v'_{eta,i} = sqrt(sum_p |v_{eta 2^{n-s}+p,i}|^2) on the top s target
/// qubits, stage 2 the conditional residues controlled on (i, eta).
/// split_s < 0 uses s = ceil(4 log2(n+k)) - k, clamped to [stage-1-only at
/// s >= n]; s <= 0 falls back to the single-cascade path.
Circuit build_cqsp_two_stage(const CqspSpec &spec, int budget_m,
                             int split_s = -1);

/// Dispatches on (n, k, m) per the ancilla regimes; explicit methods
/// override for testing individual constructions.
CqspResult build_cqsp(const CqspSpec &spec, int budget_m,
                      CqspMethod method = CqspMethod::Auto, int split_s = -1);

/// Plan ancillas plus k copy registers for the widest layer.
int controlled_layers_required_ancillas(int k, int n);

/// The dispatch threshold for the controlled-layer path:
/// max(2 c n 2^n, k 2^n) with the measured layer constant c.
long long controlled_layers_threshold(int k, int n);

}  // namespace qcs
