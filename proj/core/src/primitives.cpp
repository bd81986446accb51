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

#include "qcs/primitives.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/Eigenvalues>

#include "qcs/linalg.hpp"

namespace qcs {

namespace {

constexpr double kPi = std::numbers::pi;

int max_index(std::initializer_list<const std::vector<int> *> lists) {
  int m = -1;
  for (const auto *l : lists) {
    for (int q : *l) m = std::max(m, q);
  }
  return m;
}

void require_disjoint(const std::vector<int> &qs, const char *what) {
  std::set<int> s(qs.begin(), qs.end());
  if (s.size() != qs.size()) {
    throw std::invalid_argument(std::string(what) + ": registers overlap");
  }
}

// Toffoli with two controls: textbook T-gate network, 6 CNOTs.
void add_ccx(Circuit &c, int c1, int c2, int t) {
  const Mat2 tg = phase_matrix(kPi / 4);
  const Mat2 tdg = phase_matrix(-kPi / 4);
  const Mat2 h = h_matrix();
  c.add_1q(t, h);
  c.add_cx(c2, t);
  c.add_1q(t, tdg);
  c.add_cx(c1, t);
  c.add_1q(t, tg);
  c.add_cx(c2, t);
  c.add_1q(t, tdg);
  c.add_cx(c1, t);
  c.add_1q(t, tg);
  c.add_1q(c2, tg);
  c.add_1q(t, h);
  c.add_cx(c1, c2);
  c.add_1q(c2, tdg);
  c.add_1q(c1, tg);
  c.add_cx(c1, c2);
}

// Controlled-U from the AXBXC factorization: 6 gates.
void add_cu(Circuit &c, int ctrl, int t, const Mat2 &u) {
  const AxbxcFactors f = axbxc_factor(u);
  c.add_1q(t, f.c);
  c.add_cx(ctrl, t);
  c.add_1q(t, f.b);
  c.add_cx(ctrl, t);
  c.add_1q(t, f.a);
  c.add_1q(ctrl, phase_matrix(f.alpha));
}

// Multi-controlled U on controls+target only (Barenco ladder):
//   C^k(U) = C-V on (c_k, t) . C^{k-1}X . C-V^dag . C^{k-1}X . C^{k-1}(V)
// with V^2 = U.
void add_mcu_no_ancilla(Circuit &c, const std::vector<int> &controls, int t,
                        const Mat2 &u) {
  const size_t k = controls.size();
  if (k == 0) {
    c.add_1q(t, u);
    return;
  }
  if (k == 1) {
    add_cu(c, controls[0], t, u);
    return;
  }
  const Mat2 v = unitary_sqrt(u);
  const std::vector<int> rest(controls.begin(), controls.end() - 1);
  const int last = controls.back();
  add_cu(c, last, t, v);
  if (rest.size() == 1) {
    c.add_cx(rest[0], last);
  } else if (rest.size() == 2) {
    add_ccx(c, rest[0], rest[1], last);
  } else {
    add_mcu_no_ancilla(c, rest, last, x_matrix());
  }
  add_cu(c, last, t, Mat2(v.adjoint()));
  if (rest.size() == 1) {
    c.add_cx(rest[0], last);
  } else if (rest.size() == 2) {
    add_ccx(c, rest[0], rest[1], last);
  } else {
    add_mcu_no_ancilla(c, rest, last, x_matrix());
  }
  add_mcu_no_ancilla(c, rest, t, v);
}

}  // namespace

Mat2 unitary_sqrt(const Mat2 &u) {
  Eigen::ComplexEigenSolver<Mat2> es(u);
  Mat2 vec = es.eigenvectors();
  vec.col(0).normalize();
  vec.col(1).normalize();
  // Distinct eigenvalues give orthogonal eigenvectors; for (near-)scalar
  // matrices re-orthogonalize the second column.
  Complex ip = vec.col(0).dot(vec.col(1));
  if (std::abs(ip) > 1e-9) {
    vec.col(1) -= vec.col(0) * ip;
    const double nr = vec.col(1).norm();
    if (nr > 1e-9) {
      vec.col(1) /= nr;
    } else {
      vec(0, 1) = -std::conj(vec(1, 0));
      vec(1, 1) = std::conj(vec(0, 0));
    }
  }
  Mat2 d = Mat2::Zero();
  d(0, 0) = std::polar(1.0, std::arg(es.eigenvalues()(0)) / 2);
  d(1, 1) = std::polar(1.0, std::arg(es.eigenvalues()(1)) / 2);
  return vec * d * vec.adjoint();
}

Circuit build_copy(int n, int m, const std::vector<int> &src,
                   const std::vector<std::vector<int>> &dsts, int num_qubits) {
  if (static_cast<int>(src.size()) != n) {
    throw std::invalid_argument("build_copy: src width mismatch");
  }
  if (static_cast<int>(dsts.size()) != m) {
    throw std::invalid_argument("build_copy: expected m destination registers");
  }
  std::vector<int> all = src;
  for (const auto &d : dsts) {
    if (static_cast<int>(d.size()) != n) {
      throw std::invalid_argument("build_copy: destination width mismatch");
    }
    all.insert(all.end(), d.begin(), d.end());
  }
  require_disjoint(all, "build_copy");
  if (num_qubits < 0) num_qubits = max_index({&all}) + 1;

  Circuit c(num_qubits);
  // Doubling tree: every register already holding x feeds one new register
  // per round.
  std::vector<const std::vector<int> *> filled{&src};
  size_t next = 0;
  while (next < dsts.size()) {
    const size_t have = filled.size();
    for (size_t i = 0; i < have && next < dsts.size(); ++i, ++next) {
      for (int b = 0; b < n; ++b) {
        c.add_cx((*filled[i])[b], dsts[next][b]);
      }
      filled.push_back(&dsts[next]);
    }
  }
  return c;
}

Circuit build_nfold_toffoli(const std::vector<int> &controls, int target,
                            const std::vector<int> &ancillas, ToffoliMode mode,
                            int num_qubits) {
  std::vector<int> all = controls;
  all.push_back(target);
  const size_t k = controls.size();
  const size_t need_anc =
      (mode == ToffoliMode::LogDepth && k >= 2) ? k - 1 : 0;
  if (ancillas.size() < need_anc) {
    throw std::invalid_argument("insufficient ancillas for log_depth toffoli");
  }
  for (size_t i = 0; i < need_anc; ++i) all.push_back(ancillas[i]);
  require_disjoint(all, "build_nfold_toffoli");
  if (num_qubits < 0) num_qubits = max_index({&all}) + 1;

  Circuit c(num_qubits);
  if (k == 0) {
    c.add_1q(target, x_matrix());
    return c;
  }
  if (k == 1) {
    c.add_cx(controls[0], target);
    return c;
  }
  if (mode == ToffoliMode::NoAncilla || k == 2) {
    if (k == 2) {
      add_ccx(c, controls[0], controls[1], target);
    } else {
      add_mcu_no_ancilla(c, controls, target, x_matrix());
    }
    return c;
  }

  // Balanced AND tree into ancillas, then one CNOT, then uncompute.
  Circuit compute(num_qubits);
  std::vector<int> level = controls;
  size_t ai = 0;
  while (level.size() > 1) {
    std::vector<int> next_level;
    size_t i = 0;
    for (; i + 1 < level.size(); i += 2) {
      const int anc = ancillas[ai++];
      add_ccx(compute, level[i], level[i + 1], anc);
      next_level.push_back(anc);
    }
    if (i < level.size()) next_level.push_back(level[i]);
    level = next_level;
  }
  c.append(compute);
  c.add_cx(level[0], target);
  c.append(adjoint(compute));
  for (size_t i = 0; i < ai; ++i) c.mark_ancilla(ancillas[i]);
  return c;
}

Circuit build_prefix_flag(const std::string &prefix,
                          const std::vector<int> &ctrl_reg, int ancilla,
                          int num_qubits) {
  const size_t l = prefix.size();
  if (l > ctrl_reg.size()) {
    throw std::invalid_argument("prefix longer than control register");
  }
  Circuit c(num_qubits);
  if (l == 0) {
    c.add_1q(ancilla, x_matrix());
    return c;
  }
  std::vector<int> prefix_qubits(ctrl_reg.begin(), ctrl_reg.begin() + l);
  for (size_t i = 0; i < l; ++i) {
    if (prefix[i] == '0') c.add_1q(prefix_qubits[i], x_matrix());
  }
  c.append(build_nfold_toffoli(prefix_qubits, ancilla, {},
                               ToffoliMode::NoAncilla, num_qubits));
  return c;
}

Circuit build_prefix_ctrl_1q(const std::string &prefix,
                             const std::vector<int> &ctrl_reg, int target,
                             int ancilla, const Mat2 &v, int num_qubits) {
  std::vector<int> all = ctrl_reg;
  all.push_back(target);
  all.push_back(ancilla);
  require_disjoint(all, "build_prefix_ctrl_1q");
  if (num_qubits < 0) num_qubits = max_index({&all}) + 1;

  Circuit c(num_qubits);
  if (prefix.empty()) {
    c.add_1q(target, v);
    return c;
  }
  const AxbxcFactors f = axbxc_factor(v);
  const Circuit flag = build_prefix_flag(prefix, ctrl_reg, ancilla,
                                         num_qubits);
  c.append(flag);
  c.add_1q(target, f.c);
  c.add_cx(ancilla, target);
  c.add_1q(target, f.b);
  c.add_cx(ancilla, target);
  c.add_1q(target, f.a);
  c.add_1q(ancilla, phase_matrix(f.alpha));
  c.append(adjoint(flag));
  c.mark_ancilla(ancilla);
  return c;
}

}  // namespace qcs
