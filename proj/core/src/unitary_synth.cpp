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

#include "qcs/unitary_synth.hpp"

#include <cmath>

#include "qcs/linalg.hpp"
#include "qcs/mux.hpp"
#include "qcs/qsp.hpp"

namespace qcs {

namespace {

int unitary_width(const Mat &u) {
  if (u.rows() != u.cols() || u.rows() < 2) {
    throw std::invalid_argument("unitary must be square, dimension >= 2");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < u.rows()) ++n;
  if ((Eigen::Index{1} << n) != u.rows()) {
    throw std::invalid_argument("unitary dimension must be a power of two");
  }
  return n;
}

std::vector<std::vector<Complex>> columns_of(const Mat &u) {
  std::vector<std::vector<Complex>> cols(u.cols());
  for (Eigen::Index x = 0; x < u.cols(); ++x) {
    cols[x].resize(u.rows());
    for (Eigen::Index y = 0; y < u.rows(); ++y) cols[x][y] = u(y, x);
  }
  return cols;
}

// Emits diag(V', V'') on (qubits, msb) as synth(R) . muxRz . synth(L).
void emit_block_pair(Circuit &c, const Mat &vp, const Mat &vpp,
                     const std::vector<int> &qubits, int msb, int width);

void synth_rec(Circuit &c, const Mat &u, const std::vector<int> &qubits,
               int width) {
  const size_t n = qubits.size();
  if (n == 1) {
    c.add_1q(qubits[0], Mat2(u));
    return;
  }
  const CsdFactors f = csd_factor(u);
  const int msb = qubits.back();
  std::vector<int> rest(qubits.begin(), qubits.end() - 1);

  emit_block_pair(c, f.v2p, f.v2pp, rest, msb, width);

  std::vector<double> ry(f.thetas.size());
  for (size_t i = 0; i < ry.size(); ++i) ry[i] = -2.0 * f.thetas[i];
  c.append(build_mux_rotation(RotationAxis::Ry, ry, rest, msb, width));

  emit_block_pair(c, f.v1p, f.v1pp, rest, msb, width);
}

void emit_block_pair(Circuit &c, const Mat &vp, const Mat &vpp,
                     const std::vector<int> &qubits, int msb, int width) {
  const DemuxFactors d = demultiplex(vp, vpp);
  synth_rec(c, d.r, qubits, width);
  std::vector<double> rz(d.phases.size());
  for (size_t i = 0; i < rz.size(); ++i) rz[i] = -2.0 * d.phases[i];
  c.append(build_mux_rotation(RotationAxis::Rz, rz, qubits, msb, width));
  synth_rec(c, d.l, qubits, width);
}

}  // namespace

CqspResult build_oracle(const Mat &u, int budget_m) {
  const int n = unitary_width(u);
  if (unitarity_residual(u) > 1e-10) {
    throw std::invalid_argument("oracle input is not unitary");
  }
  CqspSpec spec;
  spec.k = n;
  spec.n = n;
  spec.states = columns_of(u);
  return build_cqsp(spec, budget_m);
}

CqspResult build_controlled_oracle(const std::vector<Mat> &family,
                                   int budget_m, OracleBranch branch) {
  if (family.empty()) {
    throw std::invalid_argument("controlled oracle needs at least one block");
  }
  const size_t blocks = family.size();
  if ((blocks & (blocks - 1)) != 0) {
    throw std::invalid_argument("family size must be a power of two");
  }
  int sel = 0;
  while ((size_t{1} << sel) < blocks) ++sel;  // n - k selectors
  const int k = unitary_width(family[0]);
  const int n = sel + k;
  for (const Mat &m : family) {
    if (m.rows() != (Eigen::Index{1} << k) || unitarity_residual(m) > 1e-10) {
      throw std::invalid_argument("family entries must be equal-size unitaries");
    }
  }

  if (branch == OracleBranch::Auto) {
    const double c = rosenthal_layer_constant(k);
    const double threshold = 2.0 * (n + c * k) * std::pow(2.0, k);
    branch = (static_cast<double>(budget_m) <= threshold)
                 ? OracleBranch::UcgCascade
                 : OracleBranch::Cqsp;
  }

  if (branch == OracleBranch::Cqsp) {
    // One (n, k)-CQSP over the combined (x, y) control word.
    CqspSpec spec;
    spec.k = n;
    spec.n = k;
    spec.states.resize(size_t{1} << n);
    for (uint64_t x = 0; x < blocks; ++x) {
      const auto cols = columns_of(family[x]);
      for (uint64_t y = 0; y < (uint64_t{1} << k); ++y) {
        spec.states[x + (y << sel)] = cols[y];
      }
    }
    CqspResult r = build_cqsp(spec, budget_m);
    return {r.circuit, "cqsp:" + r.method};
  }

  // Cascade of k UCGs V^{[n+i-1]}_{n+i} merging (x, y, written prefix),
  // with deferred diagonals between consecutive stages.
  std::vector<std::vector<AmplitudeTree>> trees(blocks);
  for (uint64_t x = 0; x < blocks; ++x) {
    for (const auto &col : columns_of(family[x])) {
      trees[x].push_back(amplitude_tree(col));
    }
  }
  Circuit c(n + k);
  std::vector<double> pending;
  for (int level = 0; level < k; ++level) {
    UcuSpec u;
    for (int j = 0; j < n + level; ++j) u.controls.push_back(j);
    u.targets = {n + level};
    const uint64_t words = uint64_t{1} << (n + level);
    u.table.reserve(words);
    for (uint64_t w = 0; w < words; ++w) {
      const uint64_t x = w & ((uint64_t{1} << sel) - 1);
      const uint64_t y = (w >> sel) & ((uint64_t{1} << k) - 1);
      const uint64_t prefix = w >> n;
      Mat g = trees[x][y].node_gate(level, prefix);
      if (!pending.empty()) g *= std::polar(1.0, pending[w]);
      u.table.push_back(std::move(g));
    }
    if (level + 1 < k) {
      UcgDeferred d = build_ucg_deferred(u);
      c.append(widen(d.circuit, n + k));
      pending = std::move(d.diag_phases);
    } else {
      c.append(widen(build_ucg(u), n + k));
    }
  }
  return {c, "ucg_cascade"};
}

Circuit build_unitary_csd(const Mat &u, int /*budget_m*/) {
  const int n = unitary_width(u);
  if (unitarity_residual(u) > 1e-10) {
    throw std::invalid_argument("build_unitary_csd input is not unitary");
  }
  Circuit c(n);
  std::vector<int> qubits(n);
  for (int i = 0; i < n; ++i) qubits[i] = i;
  synth_rec(c, u, qubits, n);
  return c;
}

long long csd_cnot_count(int n) {
  if (n < 1) return 0;
  return (3 * ((1LL << (2 * n)) / 4)) - ((3 * (1LL << n)) / 2);
}

long long cnot_lower_bound(int n) {
  const long long raw = (1LL << (2 * n)) - 3LL * n - 1;
  return (raw + 3) / 4;
}

DepthModelPoint depth_model(int n, int k, int m) {
  if (n < 1 || k < 1 || k > n || m < 1) {
    throw std::invalid_argument("depth_model requires 1 <= k <= n, m >= 1");
  }
  DepthModelPoint p;
  p.n = n;
  p.k = k;
  p.m = m;
  const double half_k = static_cast<double>(k) / 2.0;
  p.predicted_depth = n * std::pow(2.0, n - half_k) +
                      std::pow(2.0, 2.0 * n + half_k) / m;
  p.predicted_size = m * std::pow(2.0, n - half_k) +
                     std::pow(2.0, 2.0 * n + half_k);
  const double kc = std::round(std::log2(static_cast<double>(n) * m) - n);
  p.k_star = static_cast<int>(std::clamp(kc, 1.0, static_cast<double>(n)));
  return p;
}

}  // namespace qcs
