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

#include "qcs/ucu.hpp"

#include <set>

#include "qcs/linalg.hpp"
#include "qcs/primitives.hpp"

namespace qcs {

namespace {

int width_of(std::initializer_list<const std::vector<int> *> lists, int tgt) {
  int m = tgt;
  for (const auto *l : lists) {
    for (int q : *l) m = std::max(m, q);
  }
  return m + 1;
}

// Carves ancillas into p disjoint q-wide copy registers.
std::vector<std::vector<int>> copy_registers(const std::vector<int> &ancillas,
                                             size_t p, size_t q) {
  if (ancillas.size() < p * q) {
    throw std::invalid_argument("insufficient ancillas: need p*q copies");
  }
  std::vector<std::vector<int>> regs(p);
  size_t at = 0;
  for (size_t i = 0; i < p; ++i) {
    regs[i].assign(ancillas.begin() + at, ancillas.begin() + at + q);
    at += q;
  }
  return regs;
}

}  // namespace

void LayeredTargets::validate() const {
  for (const auto &table : tables) {
    if (table.size() != (size_t{1} << q)) {
      throw std::invalid_argument("LayeredTargets table must have 2^q entries");
    }
    for (const Mat2 &u : table) {
      if (unitarity_residual(u) > 1e-10) {
        throw std::invalid_argument("LayeredTargets entry is not unitary");
      }
    }
  }
}

Circuit build_multi_target_ucu(const LayeredTargets &lt,
                               const std::vector<int> &ctrl,
                               const std::vector<int> &targets,
                               const std::vector<int> &ancillas,
                               int num_qubits) {
  lt.validate();
  if (static_cast<int>(ctrl.size()) != lt.q) {
    throw std::invalid_argument("control register width mismatch");
  }
  if (lt.tables.size() != targets.size()) {
    throw std::invalid_argument("one table per target required");
  }
  const size_t p = targets.size();
  const size_t q = ctrl.size();
  if (num_qubits < 0) {
    num_qubits = width_of({&ctrl, &targets, &ancillas}, 0);
  }

  Circuit c(num_qubits);
  if (q == 0) {
    for (size_t i = 0; i < p; ++i) {
      c.add_1q(targets[i], lt.tables[i][0]);
    }
    return c;
  }

  const auto regs = copy_registers(ancillas, p, q);
  const Circuit copy = build_copy(static_cast<int>(q), static_cast<int>(p),
                                  ctrl, regs, num_qubits);
  c.append(copy);
  for (size_t i = 0; i < p; ++i) {
    UcuSpec spec;
    spec.controls = regs[i];
    spec.targets = {targets[i]};
    spec.table.reserve(lt.tables[i].size());
    for (const Mat2 &u : lt.tables[i]) spec.table.push_back(u);
    c.append(widen(build_ucg(spec), num_qubits));
  }
  c.append(adjoint(copy));
  for (size_t i = 0; i < p * q; ++i) c.mark_ancilla(ancillas[i]);
  return c;
}

Circuit build_layered_ucu(const std::vector<UcuLayer> &layers,
                          const std::vector<int> &ctrl,
                          const std::vector<int> &targets,
                          const std::vector<int> &ancillas,
                          int num_qubits) {
  const size_t p = targets.size();
  const size_t q = ctrl.size();
  if (num_qubits < 0) {
    num_qubits = width_of({&ctrl, &targets, &ancillas}, 0);
  }
  Circuit c(num_qubits);
  if (q == 0) {
    // Degenerate: the layers are a fixed circuit.
    for (const UcuLayer &layer : layers) {
      for (const auto &[pos, table] : layer.tables) {
        c.add_1q(targets[pos], table[0]);
      }
      for (const CtrlCnotPlacement &pl : layer.cnots) {
        c.add_cx(targets[pl.src], targets[pl.dst]);
      }
    }
    return c;
  }

  const auto regs = copy_registers(ancillas, p, q);
  const Circuit copy = build_copy(static_cast<int>(q), static_cast<int>(p),
                                  ctrl, regs, num_qubits);
  c.append(copy);
  for (const UcuLayer &layer : layers) {
    // Disjoint-support check over the layer.
    std::set<int> used;
    auto touch = [&](int pos) {
      if (pos < 0 || pos >= static_cast<int>(p)) {
        throw std::invalid_argument("layer target position out of range");
      }
      if (!used.insert(pos).second) {
        throw std::invalid_argument("layer supports overlap");
      }
    };
    for (const auto &[pos, table] : layer.tables) {
      touch(pos);
      if (table.size() != (size_t{1} << q)) {
        throw std::invalid_argument("layer table must have 2^q entries");
      }
    }
    for (const CtrlCnotPlacement &pl : layer.cnots) {
      touch(pl.src);
      touch(pl.dst);
    }

    for (const auto &[pos, table] : layer.tables) {
      UcuSpec spec;
      spec.controls = regs[pos];
      spec.targets = {targets[pos]};
      for (const Mat2 &u : table) spec.table.push_back(u);
      c.append(widen(build_ucg(spec), num_qubits));
    }
    for (const CtrlCnotPlacement &pl : layer.cnots) {
      if (!pl.pattern.has_value()) {
        c.add_cx(targets[pl.src], targets[pl.dst]);
        continue;
      }
      // Fire iff the destination's local copy reads `pattern`: X-frame the
      // zero bits, then a (q+1)-fold Toffoli with the source appended.
      const uint64_t pat = *pl.pattern;
      const std::vector<int> &reg = regs[pl.dst];
      for (size_t b = 0; b < q; ++b) {
        if (!((pat >> b) & 1)) c.add_1q(reg[b], x_matrix());
      }
      std::vector<int> controls = reg;
      controls.push_back(targets[pl.src]);
      c.append(build_nfold_toffoli(controls, targets[pl.dst], {},
                                   ToffoliMode::NoAncilla, num_qubits));
      for (size_t b = 0; b < q; ++b) {
        if (!((pat >> b) & 1)) c.add_1q(reg[b], x_matrix());
      }
    }
  }
  c.append(adjoint(copy));
  for (size_t i = 0; i < p * q; ++i) c.mark_ancilla(ancillas[i]);
  return c;
}

}  // namespace qcs
