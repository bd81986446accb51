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

#include <map>
#include <optional>
#include <vector>

#include "qcs/mux.hpp"

namespace qcs {

/// Per-target single-qubit tables: tables[i][x] is the gate applied to
/// target i when the control register reads x.
struct LayeredTargets {
  int q = 0;
  std::vector<std::vector<Mat2>> tables;

  void validate() const;
};

/// sum_x |x><x| (x) (U_1^x (x) ... (x) U_p^x): fans the control register out
/// to one q-qubit copy per target, applies the p UCGs in parallel on the
/// copies, then un-copies. Needs p*q ancillas; extras are left unused.
Circuit build_multi_target_ucu(const LayeredTargets &lt,
                               const std::vector<int> &ctrl,
                               const std::vector<int> &targets,
                               const std::vector<int> &ancillas,
                               int num_qubits = -1);

/// A CNOT inside one layer of the multiplexed circuits W^x. When `pattern`
/// is set the CNOT fires only for control word x == pattern, realized as a
/// Toffoli against the destination target's local copy of |x| (with X-frames
/// on the zero bits); otherwise it is a plain CNOT.
struct CtrlCnotPlacement {
  int src = 0;
  int dst = 0;
  std::optional<uint64_t> pattern;
};

/// One layer of the target circuits: 1q-gate tables keyed by target
/// position, plus CNOT placements. Supports within a layer must be disjoint.
struct UcuLayer {
  std::map<int, std::vector<Mat2>> tables;  // target position -> table over x
  std::vector<CtrlCnotPlacement> cnots;     // positions into `targets`
};

/// sum_x |x><x| (x) W^x for layered W^x: copies the control register once,
/// walks the d layers (1q tables as parallel UCGs on the local copies,
/// conditional CNOTs as Toffolis against the destination's copy), un-copies.
Circuit build_layered_ucu(const std::vector<UcuLayer> &layers,
                          const std::vector<int> &ctrl,
                          const std::vector<int> &targets,
                          const std::vector<int> &ancillas,
                          int num_qubits = -1);

}  // namespace qcs
