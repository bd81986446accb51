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

#include <cstdint>
#include <vector>

#include "qcs/circuit.hpp"

namespace qcs {

struct SimOptions {
  // Dense array of 2^26 complex doubles is about 1 GiB.
  int qubit_cap = 26;
};

/// Dense complex amplitude array over 2^n basis states.
///
/// Amplitude ordering follows the global index convention (see circuit.hpp):
/// amplitudes[i] multiplies |i> where bit j of i is the state of qubit j.
class StateVector {
 public:
  static StateVector zero(int num_qubits);
  static StateVector basis(int num_qubits, uint64_t index);
  StateVector(int num_qubits, std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Complex> &amplitudes() const { return amps_; }
  std::vector<Complex> &amplitudes() { return amps_; }
  Complex amplitude(uint64_t index) const { return amps_[index]; }
  double norm() const;

 private:
  int num_qubits_;
  std::vector<Complex> amps_;
};

/// Applies the circuit's gates in order to a copy of `s`.
StateVector run(const Circuit &c, const StateVector &s,
                const SimOptions &opts = {});

/// |<a|b>| in [0, 1].
double fidelity(const StateVector &a, const StateVector &b);

/// Reads the unitary action of `c` restricted to the qubits in `on`
/// (at most 12), with every other qubit an ancilla initialized to |0>.
/// Column x is the post-state restricted to `on` when the input is basis
/// |x> on `on` (bit j of x on on[j]) and |0> elsewhere. Throws AncillaError
/// if any column leaves more than 1e-9 amplitude mass off the all-zero
/// ancilla subspace.
Mat extract_unitary(const Circuit &c, const std::vector<int> &on,
                    const SimOptions &opts = {});

/// True iff the total probability of the declared ancillas being outside
/// |0...0> after running `c` on `input` is at most `tol`.
bool verify_ancilla_restored(const Circuit &c, const StateVector &input,
                             double tol = 1e-9, const SimOptions &opts = {});

/// Max-column 2-norm distance between unitaries after aligning the global
/// phase via the largest-magnitude entry of the first column.
double phase_aligned_distance(const Mat &a, const Mat &b);

}  // namespace qcs
