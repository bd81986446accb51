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

#include "qcs/circuit.hpp"

#include <algorithm>

namespace qcs {

double unitarity_residual(const Mat &m) {
  Mat d = m * m.adjoint() - Mat::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

Gate Gate::one_qubit(int target, const Mat2 &m) {
  if (unitarity_residual(m) > 1e-12) {
    throw std::invalid_argument("OneQubit matrix is not unitary");
  }
  Gate g;
  g.kind = Kind::OneQubit;
  g.target = target;
  g.matrix = m;
  return g;
}

Gate Gate::cnot(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("Cnot control and target must differ");
  }
  Gate g;
  g.kind = Kind::Cnot;
  g.control = control;
  g.target = target;
  g.matrix = Mat2::Identity();
  return g;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0) {
    throw std::invalid_argument("negative qubit count");
  }
}

Circuit &Circuit::add(const Gate &g) {
  auto check = [&](int q) {
    if (q < 0 || q >= num_qubits_) {
      throw std::invalid_argument("gate index " + std::to_string(q) +
                                  " out of range for " +
                                  std::to_string(num_qubits_) + " qubits");
    }
  };
  check(g.target);
  if (g.is_cnot()) check(g.control);
  gates_.push_back(g);
  return *this;
}

Circuit &Circuit::add_1q(int target, const Mat2 &m) {
  return add(Gate::one_qubit(target, m));
}

Circuit &Circuit::add_cx(int control, int target) {
  return add(Gate::cnot(control, target));
}

Circuit &Circuit::mark_ancilla(int q) {
  if (q < 0 || q >= num_qubits_) {
    throw std::invalid_argument("ancilla index out of range");
  }
  ancillas_.insert(q);
  return *this;
}

Circuit &Circuit::mark_ancillas(const std::vector<int> &qs) {
  for (int q : qs) mark_ancilla(q);
  return *this;
}

Circuit &Circuit::append(const Circuit &other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("qubit-count mismatch in append");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  for (int q : other.ancillas_) ancillas_.insert(q);
  return *this;
}

bool Circuit::operator==(const Circuit &other) const {
  if (num_qubits_ != other.num_qubits_ || ancillas_ != other.ancillas_ ||
      gates_.size() != other.gates_.size()) {
    return false;
  }
  for (size_t i = 0; i < gates_.size(); ++i) {
    const Gate &a = gates_[i], &b = other.gates_[i];
    if (a.kind != b.kind || a.target != b.target || a.control != b.control) {
      return false;
    }
    if (a.kind == Gate::Kind::OneQubit &&
        (a.matrix - b.matrix).cwiseAbs().maxCoeff() > 0.0) {
      return false;
    }
  }
  return true;
}

long long depth(const Circuit &c) {
  std::vector<long long> last(c.num_qubits(), 0);
  long long d = 0;
  for (const Gate &g : c.gates()) {
    long long layer = last[g.target] + 1;
    if (g.is_cnot()) layer = std::max(layer, last[g.control] + 1);
    last[g.target] = layer;
    if (g.is_cnot()) last[g.control] = layer;
    d = std::max(d, layer);
  }
  return d;
}

Metrics metrics(const Circuit &c) {
  Metrics m;
  m.depth = depth(c);
  m.size = static_cast<long long>(c.gates().size());
  m.ancilla_count = static_cast<long long>(c.ancillas().size());
  m.cnot_count =
      std::count_if(c.gates().begin(), c.gates().end(),
                    [](const Gate &g) { return g.is_cnot(); });
  return m;
}

Circuit compose(const Circuit &a, const Circuit &b) {
  Circuit out = a;
  out.append(b);
  return out;
}

Circuit adjoint(const Circuit &c) {
  Circuit out(c.num_qubits());
  const auto &gs = c.gates();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
    if (it->is_cnot()) {
      out.add_cx(it->control, it->target);
    } else {
      out.add_1q(it->target, it->matrix.adjoint());
    }
  }
  for (int q : c.ancillas()) out.mark_ancilla(q);
  return out;
}

Circuit remap(const Circuit &c, const std::vector<int> &permutation) {
  if (static_cast<int>(permutation.size()) != c.num_qubits()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<bool> seen(permutation.size(), false);
  for (int p : permutation) {
    if (p < 0 || p >= c.num_qubits() || seen[p]) {
      throw std::invalid_argument("remap requires a bijection");
    }
    seen[p] = true;
  }
  return embed(c, c.num_qubits(), permutation);
}

Circuit widen(const Circuit &c, int num_qubits) {
  std::vector<int> id(c.num_qubits());
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  return embed(c, num_qubits, id);
}

Circuit embed(const Circuit &c, int num_qubits, const std::vector<int> &map) {
  if (static_cast<int>(map.size()) != c.num_qubits()) {
    throw std::invalid_argument("embed map size mismatch");
  }
  std::set<int> used;
  for (int p : map) {
    if (p < 0 || p >= num_qubits || used.count(p)) {
      throw std::invalid_argument("embed map must be injective and in range");
    }
    used.insert(p);
  }
  Circuit out(num_qubits);
  for (const Gate &g : c.gates()) {
    if (g.is_cnot()) {
      out.add_cx(map[g.control], map[g.target]);
    } else {
      out.add_1q(map[g.target], g.matrix);
    }
  }
  for (int q : c.ancillas()) out.mark_ancilla(map[q]);
  return out;
}

}  // namespace qcs
