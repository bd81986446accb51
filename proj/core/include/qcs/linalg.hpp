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

Mat2 rz_matrix(double theta);
Mat2 ry_matrix(double theta);
Mat2 rx_matrix(double theta);
Mat2 x_matrix();
Mat2 h_matrix();
/// diag(1, e^{i alpha}) — phase on the |1> basis.
Mat2 phase_matrix(double alpha);

/// U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
struct ZyzAngles {
  double alpha, beta, gamma, delta;
};
ZyzAngles zyz_decompose(const Mat2 &u);

/// U = e^{i alpha} A X B X C with A B C = I.
struct AxbxcFactors {
  double alpha;
  Mat2 a, b, c;
};
AxbxcFactors axbxc_factor(const Mat2 &u);

/// Cosine-sine decomposition of a 2^n x 2^n unitary (n >= 2):
///   U = diag(v1p, v1pp) * [[C, S], [-S, C]] * diag(v2p, v2pp)
/// with C = diag(cos theta_i), S = diag(sin theta_i), theta ascending in
/// [0, pi/2].
struct CsdFactors {
  Mat v1p, v1pp, v2p, v2pp;
  std::vector<double> thetas;

  Mat reconstruct() const;
};
CsdFactors csd_factor(const Mat &u);

/// Shannon demultiplexing: V = L D R and W = L D^dag R with D unit-modulus
/// diagonal, via a Schur decomposition of V W^dag. Eigenphases are sorted by
/// principal argument in [0, 2pi) for determinism.
struct DemuxFactors {
  Mat l, r;
  std::vector<double> phases;  // D_jj = e^{i phases[j]}

  Mat d() const;
};
DemuxFactors demultiplex(const Mat &v, const Mat &w);

/// Conditional-amplitude tree of a normalized 2^n vector.
///
/// Nodes are binary strings x of length < n, stored in heap order:
/// node (level j, word a) at index 2^j - 1 + a, where bit i-1 of `a` is the
/// i-th symbol of x (so the first tree symbol is the least-significant bit
/// of the basis index, matching the global convention). The leaf identity
/// prod_{i=1..n} beta_{x<=i} = v_x holds exactly by construction: interior
/// splits carry the real mass ratios and the final level carries the leaf
/// phases.
class AmplitudeTree {
 public:
  AmplitudeTree(int n, std::vector<Complex> beta0, std::vector<Complex> beta1,
                std::vector<double> node_norm);

  int n() const { return n_; }
  static size_t node_index(int level, uint64_t word) {
    return (size_t{1} << level) - 1 + word;
  }
  Complex beta0(int level, uint64_t word) const {
    return beta0_[node_index(level, word)];
  }
  Complex beta1(int level, uint64_t word) const {
    return beta1_[node_index(level, word)];
  }
  double node_norm(int level, uint64_t word) const {
    return norm_[node_index(level, word)];
  }
  /// Single-qubit gate with first column (beta0, beta1), i.e. |0> -> |phi_x>.
  Mat2 node_gate(int level, uint64_t word) const;

 private:
  int n_;
  std::vector<Complex> beta0_, beta1_;
  std::vector<double> norm_;
};

AmplitudeTree amplitude_tree(const std::vector<Complex> &v);

}  // namespace qcs
