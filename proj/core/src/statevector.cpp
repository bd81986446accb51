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

#include "qcs/statevector.hpp"

#include <cmath>

namespace qcs {

namespace {

void check_cap(int num_qubits, const SimOptions &opts) {
  if (num_qubits > opts.qubit_cap) {
    throw CapExceeded("simulation of " + std::to_string(num_qubits) +
                      " qubits exceeds the cap of " +
                      std::to_string(opts.qubit_cap));
  }
}

void apply_1q(std::vector<Complex> &a, int q, const Mat2 &m) {
  const uint64_t stride = uint64_t{1} << q;
  const uint64_t n = a.size();
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (uint64_t base = 0; base < n; base += 2 * stride) {
    for (uint64_t i = base; i < base + stride; ++i) {
      const Complex a0 = a[i];
      const Complex a1 = a[i + stride];
      a[i] = m00 * a0 + m01 * a1;
      a[i + stride] = m10 * a0 + m11 * a1;
    }
  }
}

void apply_cnot(std::vector<Complex> &a, int c, int t) {
  const uint64_t cm = uint64_t{1} << c;
  const uint64_t tm = uint64_t{1} << t;
  const uint64_t n = a.size();
  for (uint64_t i = 0; i < n; ++i) {
    if ((i & cm) && !(i & tm)) {
      std::swap(a[i], a[i | tm]);
    }
  }
}

}  // namespace

StateVector StateVector::zero(int num_qubits) {
  return basis(num_qubits, 0);
}

StateVector StateVector::basis(int num_qubits, uint64_t index) {
  std::vector<Complex> a(uint64_t{1} << num_qubits, Complex{0, 0});
  a[index] = Complex{1, 0};
  return StateVector(num_qubits, std::move(a));
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (uint64_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude count must be 2^num_qubits");
  }
  double n = 0;
  for (const Complex &z : amps_) n += std::norm(z);
  if (std::abs(std::sqrt(n) - 1.0) > 1e-10) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

double StateVector::norm() const {
  double n = 0;
  for (const Complex &z : amps_) n += std::norm(z);
  return std::sqrt(n);
}

StateVector run(const Circuit &c, const StateVector &s,
                const SimOptions &opts) {
  if (c.num_qubits() != s.num_qubits()) {
    throw std::invalid_argument("circuit/state qubit-count mismatch");
  }
  check_cap(c.num_qubits(), opts);
  std::vector<Complex> a = s.amplitudes();
  for (const Gate &g : c.gates()) {
    if (g.is_cnot()) {
      apply_cnot(a, g.control, g.target);
    } else {
      apply_1q(a, g.target, g.matrix);
    }
  }
  return StateVector(c.num_qubits(), std::move(a));
}

double fidelity(const StateVector &a, const StateVector &b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("fidelity dimension mismatch");
  }
  Complex ip{0, 0};
  const auto &av = a.amplitudes();
  const auto &bv = b.amplitudes();
  for (size_t i = 0; i < av.size(); ++i) ip += std::conj(av[i]) * bv[i];
  return std::min(1.0, std::abs(ip));
}

Mat extract_unitary(const Circuit &c, const std::vector<int> &on,
                    const SimOptions &opts) {
  const int k = static_cast<int>(on.size());
  if (k > 12) {
    throw std::invalid_argument("extract_unitary supports at most 12 qubits");
  }
  for (int q : on) {
    if (q < 0 || q >= c.num_qubits()) {
      throw std::invalid_argument("extract_unitary qubit out of range");
    }
  }
  const uint64_t dim = uint64_t{1} << k;
  Mat u(dim, dim);
  for (uint64_t x = 0; x < dim; ++x) {
    uint64_t idx = 0;
    for (int j = 0; j < k; ++j) {
      if ((x >> j) & 1) idx |= uint64_t{1} << on[j];
    }
    StateVector out = run(c, StateVector::basis(c.num_qubits(), idx), opts);
    // Collect the restriction and check nothing leaks off |0...0> ancillas.
    const auto &a = out.amplitudes();
    std::vector<Complex> col(dim, Complex{0, 0});
    double off_mass = 0;
    uint64_t on_mask = 0;
    for (int q : on) on_mask |= uint64_t{1} << q;
    for (uint64_t i = 0; i < a.size(); ++i) {
      if ((i & ~on_mask) != 0) {
        off_mass += std::norm(a[i]);
      }
    }
    if (off_mass > 1e-9) {
      throw AncillaError("ancilla not restored for input column " +
                         std::to_string(x));
    }
    for (uint64_t y = 0; y < dim; ++y) {
      uint64_t full = 0;
      for (int j = 0; j < k; ++j) {
        if ((y >> j) & 1) full |= uint64_t{1} << on[j];
      }
      col[y] = a[full];
    }
    for (uint64_t y = 0; y < dim; ++y) u(y, x) = col[y];
  }
  return u;
}

bool verify_ancilla_restored(const Circuit &c, const StateVector &input,
                             double tol, const SimOptions &opts) {
  StateVector out = run(c, input, opts);
  uint64_t anc_mask = 0;
  for (int q : c.ancillas()) anc_mask |= uint64_t{1} << q;
  double off = 0;
  const auto &a = out.amplitudes();
  for (uint64_t i = 0; i < a.size(); ++i) {
    if ((i & anc_mask) != 0) off += std::norm(a[i]);
  }
  return off <= tol;
}

double phase_aligned_distance(const Mat &a, const Mat &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("phase_aligned_distance dimension mismatch");
  }
  Eigen::Index imax = 0;
  a.col(0).cwiseAbs().maxCoeff(&imax);
  Complex pa = a(imax, 0), pb = b(imax, 0);
  Complex phase{1, 0};
  if (std::abs(pa) > 1e-14 && std::abs(pb) > 1e-14) {
    phase = (pb / std::abs(pb)) / (pa / std::abs(pa));
  }
  Mat d = a * phase - b;
  double worst = 0;
  for (Eigen::Index j = 0; j < d.cols(); ++j) {
    worst = std::max(worst, d.col(j).norm());
  }
  return worst;
}

}  // namespace qcs
