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

#include <complex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcs {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using Vec = Eigen::VectorXcd;

/// Thrown when a simulation would exceed the configured qubit cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a circuit fails to restore its ancillas to |0>.
struct AncillaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gates are either an arbitrary single-qubit unitary or a CNOT.
///
/// Qubit index convention used everywhere in this library: qubit j holds bit
/// j of the basis index, i.e. |i> = |i_0 i_1 ... i_{n-1}> with
/// i = sum_j i_j * 2^j. Qubit 0 is the least-significant bit.
struct Gate {
  enum class Kind { OneQubit, Cnot };

  Kind kind;
  int target = 0;
  int control = -1;  // Cnot only
  Mat2 matrix;       // OneQubit only

  static Gate one_qubit(int target, const Mat2 &m);
  static Gate cnot(int control, int target);

  bool is_cnot() const { return kind == Kind::Cnot; }
};

/// Returns max |(M M^dag - I)_{ij}|.
double unitarity_residual(const Mat &m);

/// An ordered gate sequence over {1q, CNOT} with an ancilla ledger.
///
/// Circuits are value types. Builders grow a local circuit and return it;
/// finished circuits are treated as immutable and are safe to read from
/// multiple threads.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate> &gates() const { return gates_; }
  const std::set<int> &ancillas() const { return ancillas_; }

  Circuit &add(const Gate &g);
  Circuit &add_1q(int target, const Mat2 &m);
  Circuit &add_cx(int control, int target);
  Circuit &mark_ancilla(int q);
  Circuit &mark_ancillas(const std::vector<int> &qs);

  /// Appends all gates of `other` (same width) in order.
  Circuit &append(const Circuit &other);

  bool operator==(const Circuit &other) const;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
  std::set<int> ancillas_;
};

struct Metrics {
  long long depth = 0;
  long long size = 0;
  long long ancilla_count = 0;
  long long cnot_count = 0;
};

/// Number of layers under greedy ASAP scheduling: each gate is placed in the
/// earliest layer after the last layer touching any of its qubits.
long long depth(const Circuit &c);

Metrics metrics(const Circuit &c);

/// Runs a then b. Requires equal qubit counts; ancilla sets are unioned.
Circuit compose(const Circuit &a, const Circuit &b);

/// Reverses the gate order and conjugate-transposes 1q matrices.
Circuit adjoint(const Circuit &c);

/// Relabels qubit i as permutation[i]. Requires a bijection on [0, n).
Circuit remap(const Circuit &c, const std::vector<int> &permutation);

/// Places `c` into a circuit of `num_qubits` wires, sending wire i of `c`
/// to wire map[i]. Entries must be distinct and in range.
Circuit embed(const Circuit &c, int num_qubits, const std::vector<int> &map);

/// Identity embedding onto a wider wire count.
Circuit widen(const Circuit &c, int num_qubits);

}  // namespace qcs
