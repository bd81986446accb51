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

#include "qcs/qsp.hpp"

#include <cmath>

#include "qcs/mux.hpp"
#include "qcs/primitives.hpp"

namespace qcs {

namespace {

int state_width(const std::vector<Complex> &v) {
  const size_t dim = v.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("state length must be 2^n, n >= 1");
  }
  int n = 0;
  while ((size_t{1} << n) < dim) ++n;
  return n;
}

// Bit pattern of a tree node as a prefix string: symbol i of the node word
// is bit i-1, written '0'/'1' first-symbol-first.
std::string node_prefix(int level, uint64_t word) {
  std::string s(level, '0');
  for (int i = 0; i < level; ++i) {
    if ((word >> i) & 1) s[i] = '1';
  }
  return s;
}

Circuit ccx_on(int c1, int c2, int t, int width) {
  return build_nfold_toffoli({c1, c2}, t, {}, ToffoliMode::NoAncilla, width);
}

}  // namespace

Circuit build_qsp_cascade(const std::vector<Complex> &v, int /*budget_m*/) {
  const int n = state_width(v);
  const AmplitudeTree tree = amplitude_tree(v);
  Circuit c(n);
  // Consecutive stages defer their diagonals: a stage's residual phases sit
  // on qubits that are all controls of the next stage, so they fold into
  // its table as scalars. Only the last stage pays for an exact diagonal.
  std::vector<double> pending;
  for (int level = 0; level < n; ++level) {
    UcuSpec spec;
    for (int j = 0; j < level; ++j) spec.controls.push_back(j);
    spec.targets = {level};
    const uint64_t words = uint64_t{1} << level;
    spec.table.reserve(words);
    for (uint64_t a = 0; a < words; ++a) {
      Mat u = tree.node_gate(level, a);
      if (!pending.empty()) u *= std::polar(1.0, pending[a]);
      spec.table.push_back(std::move(u));
    }
    if (level + 1 < n) {
      UcgDeferred d = build_ucg_deferred(spec);
      c.append(widen(d.circuit, n));
      pending = std::move(d.diag_phases);
    } else {
      c.append(widen(build_ucg(spec), n));
    }
  }
  return c;
}

void LeafAssignment::validate() const {
  if (z.size() != (size_t{1} << n) - 1) {
    throw std::invalid_argument("leaf assignment must have 2^n - 1 bits");
  }
}

uint64_t leaf_function(const LeafAssignment &za) {
  za.validate();
  uint64_t word = 0;
  uint64_t leaf = 0;
  for (int level = 0; level < za.n; ++level) {
    const uint8_t bit = za.z[AmplitudeTree::node_index(level, word)] ? 1 : 0;
    leaf |= uint64_t{bit} << level;
    word = word + (uint64_t{bit} << level);
  }
  return leaf;
}

Circuit build_u_leaf(int n, const std::vector<int> &node_qubits,
                     const std::vector<int> &out_reg,
                     const std::vector<int> &scratch, int num_qubits) {
  if (static_cast<int>(node_qubits.size()) != (1 << n) - 1 ||
      static_cast<int>(out_reg.size()) != n) {
    throw std::invalid_argument("build_u_leaf register width mismatch");
  }
  const int scratch_need = (n >= 2) ? (1 << n) - 2 : 0;
  if (static_cast<int>(scratch.size()) < scratch_need) {
    throw std::invalid_argument("build_u_leaf: insufficient scratch");
  }
  if (num_qubits < 0) {
    int m = -1;
    for (int q : node_qubits) m = std::max(m, q);
    for (int q : out_reg) m = std::max(m, q);
    for (int q : scratch) m = std::max(m, q);
    num_qubits = m + 1;
  }

  Circuit c(num_qubits);
  c.add_cx(node_qubits[0], out_reg[0]);
  if (n == 1) return c;

  // One-hot current-node registers P_j live on the scratch qubits, heap
  // node i at scratch[i - 1].
  auto p_qubit = [&](int level, uint64_t word) {
    return scratch[AmplitudeTree::node_index(level, word) - 1];
  };
  Circuit walk(num_qubits);  // P-building ops only, uncomputed at the end

  // Level 1 from the root bit.
  {
    const int root = node_qubits[0];
    Circuit step(num_qubits);
    step.add_cx(root, p_qubit(1, 1));
    step.add_1q(root, x_matrix());
    step.add_cx(root, p_qubit(1, 0));
    step.add_1q(root, x_matrix());
    c.append(step);
    walk.append(step);
  }
  for (int level = 1; level < n; ++level) {
    // Output bit `level` selects z at the current node.
    for (uint64_t a = 0; a < (uint64_t{1} << level); ++a) {
      const int zq = node_qubits[AmplitudeTree::node_index(level, a)];
      c.append(ccx_on(p_qubit(level, a), zq, out_reg[level], num_qubits));
    }
    if (level + 1 >= n) break;
    for (uint64_t a = 0; a < (uint64_t{1} << level); ++a) {
      const int pq = p_qubit(level, a);
      const int zq = node_qubits[AmplitudeTree::node_index(level, a)];
      Circuit step(num_qubits);
      step.append(ccx_on(pq, zq, p_qubit(level + 1, a + (uint64_t{1} << level)),
                         num_qubits));
      step.add_1q(zq, x_matrix());
      step.append(ccx_on(pq, zq, p_qubit(level + 1, a), num_qubits));
      step.add_1q(zq, x_matrix());
      c.append(step);
      walk.append(step);
    }
  }
  c.append(adjoint(walk));
  for (int i = 0; i < scratch_need; ++i) c.mark_ancilla(scratch[i]);
  return c;
}

int rosenthal_required_ancillas(int n) {
  return ((1 << n) - 1) * (n + 2);
}

double rosenthal_layer_constant(int n) {
  // L2 carries two gates per node; the other layers one.
  const double nodes = static_cast<double>((1 << n) - 1);
  return 2.0 * nodes / static_cast<double>(1 << n);
}

RosenthalPlan make_rosenthal_plan(int n) {
  if (n < 1) throw std::invalid_argument("plan requires n >= 1");
  RosenthalPlan plan;
  plan.n = n;
  const int nodes = (1 << n) - 1;
  for (int i = 0; i < n; ++i) plan.s_reg.push_back(i);
  for (int i = 0; i < nodes; ++i) plan.r_qubit.push_back(n + i);
  for (int i = 0; i < nodes; ++i) plan.a_qubit.push_back(n + nodes + i);
  int base = n + 2 * nodes;
  plan.sx_reg.resize(nodes);
  for (int i = 0; i < nodes; ++i) {
    for (int b = 0; b < n; ++b) plan.sx_reg[i].push_back(base + i * n + b);
  }
  plan.total_qubits = n + nodes * (n + 2);
  for (int q = n; q < plan.total_qubits; ++q) plan.ancilla_list.push_back(q);
  const int w = plan.total_qubits;

  // C5^dag = U_copy (fan S out to every S_x); C5 closes it.
  Circuit u_copy = build_copy(n, nodes, plan.s_reg, plan.sx_reg, w);

  // Per-node flag halves W^1 and the state-independent X-gadget on prefix
  // x.1 used inside C1''.
  std::vector<Circuit> w1(nodes, Circuit(w));
  std::vector<Circuit> xgadget(nodes, Circuit(w));
  for (int level = 0; level < n; ++level) {
    for (uint64_t a = 0; a < (uint64_t{1} << level); ++a) {
      const int node = static_cast<int>(AmplitudeTree::node_index(level, a));
      w1[node] = build_prefix_flag(node_prefix(level, a), plan.sx_reg[node],
                                   plan.a_qubit[node], w);
      xgadget[node] =
          build_prefix_ctrl_1q(node_prefix(level, a) + "1", plan.sx_reg[node],
                               plan.r_qubit[node], plan.a_qubit[node],
                               x_matrix(), w);
    }
  }

  Circuit c4_dag(w);
  for (int i = 0; i < nodes; ++i) c4_dag.append(w1[i]);
  Circuit cx_layer(w);
  for (int i = 0; i < nodes; ++i) {
    cx_layer.add_cx(plan.a_qubit[i], plan.r_qubit[i]);
  }
  Circuit c1pp_dag(w);
  for (int i = 0; i < nodes; ++i) {
    c1pp_dag.append(adjoint(w1[i]));  // W^2
    c1pp_dag.append(xgadget[i]);
  }
  c1pp_dag.append(adjoint(u_copy));

  plan.c5 = adjoint(u_copy);
  plan.c4 = adjoint(c4_dag);
  plan.c3 = adjoint(cx_layer);
  plan.c2 = adjoint(cx_layer);
  plan.c1_second = adjoint(c1pp_dag);

  // C1' = U_ell: leaf walk from the R register into S, scratch on the A
  // flags of nodes 1 .. 2^n - 2.
  std::vector<int> scratch;
  for (int i = 1; i < nodes; ++i) scratch.push_back(plan.a_qubit[i]);
  plan.c1_prime = build_u_leaf(n, plan.r_qubit, plan.s_reg, scratch, w);

  // Measure the widest state-dependent layer from the layout itself.
  size_t widest = 0;
  for (const auto &qs : plan.layer_qubits()) {
    widest = std::max(widest, qs.size());
  }
  plan.layer_constant =
      static_cast<double>(widest) / static_cast<double>(1 << n);
  return plan;
}

std::array<std::vector<int>, 5> RosenthalPlan::layer_qubits() const {
  const int nodes = (1 << n) - 1;
  std::array<std::vector<int>, 5> qs;
  for (int i = 0; i < nodes; ++i) qs[0].push_back(r_qubit[i]);  // L1
  for (int i = 0; i < nodes; ++i) {                             // L2
    qs[1].push_back(r_qubit[i]);
    qs[1].push_back(a_qubit[i]);
  }
  for (int i = 0; i < nodes; ++i) qs[2].push_back(r_qubit[i]);  // L3
  for (int i = 0; i < nodes; ++i) qs[3].push_back(r_qubit[i]);  // L4
  for (int i = 0; i < nodes; ++i) qs[4].push_back(r_qubit[i]);  // L5
  return qs;
}

std::array<RosenthalPlan::Layer, 5> RosenthalPlan::layers(
    const std::vector<Complex> &v) const {
  if (state_width(v) != n) {
    throw std::invalid_argument("state width does not match plan");
  }
  const AmplitudeTree tree = amplitude_tree(v);
  std::array<Layer, 5> out;
  for (int level = 0; level < n; ++level) {
    for (uint64_t a = 0; a < (uint64_t{1} << level); ++a) {
      const int node = static_cast<int>(AmplitudeTree::node_index(level, a));
      const Mat2 ux = tree.node_gate(level, a);
      const AxbxcFactors f = axbxc_factor(Mat2(ux.adjoint()));
      out[0].gates.emplace_back(r_qubit[node], ux);              // L1
      out[1].gates.emplace_back(r_qubit[node], Mat2(f.a.adjoint()));
      out[1].gates.emplace_back(a_qubit[node], phase_matrix(-f.alpha));
      out[2].gates.emplace_back(r_qubit[node], Mat2(f.b.adjoint()));
      out[3].gates.emplace_back(r_qubit[node], Mat2(f.c.adjoint()));
      out[4].gates.emplace_back(r_qubit[node], Mat2(ux.adjoint()));
    }
  }
  return out;
}

Circuit layer_to_circuit(const RosenthalPlan::Layer &layer, int num_qubits) {
  Circuit c(num_qubits);
  for (const auto &[q, m] : layer.gates) c.add_1q(q, m);
  return c;
}

Circuit build_gamma_dagger(const std::vector<Complex> &v,
                           const RosenthalPlan &plan) {
  const auto ls = plan.layers(v);
  const int w = plan.total_qubits;
  Circuit c(w);
  c.append(plan.c1_second);
  c.append(layer_to_circuit(ls[1], w));
  c.append(plan.c2);
  c.append(layer_to_circuit(ls[2], w));
  c.append(plan.c3);
  c.append(layer_to_circuit(ls[3], w));
  c.append(plan.c4);
  c.append(layer_to_circuit(ls[4], w));
  c.append(plan.c5);
  c.mark_ancillas(plan.ancilla_list);
  return c;
}

Circuit build_qsp_rosenthal_with_plan(const std::vector<Complex> &v,
                                      const RosenthalPlan &plan) {
  const auto ls = plan.layers(v);
  const int w = plan.total_qubits;
  Circuit c(w);
  c.append(layer_to_circuit(ls[0], w));  // step 1: |0> -> |phi_x> everywhere
  c.append(plan.c1_prime);               // step 2: leaf walk into S
  c.append(plan.c1_second);              // step 3: Gamma^dag ...
  c.append(layer_to_circuit(ls[1], w));
  c.append(plan.c2);
  c.append(layer_to_circuit(ls[2], w));
  c.append(plan.c3);
  c.append(layer_to_circuit(ls[3], w));
  c.append(plan.c4);
  c.append(layer_to_circuit(ls[4], w));
  c.append(plan.c5);
  c.mark_ancillas(plan.ancilla_list);
  return c;
}

Circuit build_qsp_rosenthal(const std::vector<Complex> &v, int budget_m) {
  const int n = state_width(v);
  if (budget_m < rosenthal_required_ancillas(n)) {
    throw std::invalid_argument(
        "insufficient ancillas: the tree pipeline needs " +
        std::to_string(rosenthal_required_ancillas(n)));
  }
  return build_qsp_rosenthal_with_plan(v, make_rosenthal_plan(n));
}

QspResult build_qsp(const std::vector<Complex> &v, int budget_m,
                    QspMethod method) {
  const int n = state_width(v);
  if (method == QspMethod::Auto) {
    method = (budget_m >= rosenthal_required_ancillas(n))
                 ? QspMethod::Rosenthal
                 : QspMethod::Cascade;
  }
  if (method == QspMethod::Rosenthal) {
    return {build_qsp_rosenthal(v, budget_m), "rosenthal"};
  }
  return {build_qsp_cascade(v, budget_m), "cascade"};
}

}  // namespace qcs
