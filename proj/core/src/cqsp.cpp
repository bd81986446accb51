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

#include "qcs/cqsp.hpp"

#include <cmath>

#include "qcs/linalg.hpp"
#include "qcs/mux.hpp"
#include "qcs/qsp.hpp"
#include "qcs/ucu.hpp"

namespace qcs {

namespace {

// Stage methods available inside the two-stage split (no recursion into the
// split itself).
Circuit build_stage(const CqspSpec &spec, int budget_m, std::string *method) {
  if (spec.k > 0 && budget_m >= controlled_layers_threshold(spec.k, spec.n) &&
      budget_m >= controlled_layers_required_ancillas(spec.k, spec.n)) {
    if (method) *method = "controlled_layers";
    return build_cqsp_controlled_layers(spec, budget_m);
  }
  if (method) *method = "case1";
  return build_cqsp_case1(spec, budget_m);
}

}  // namespace

void CqspSpec::validate() const {
  if (k < 0 || n < 1) {
    throw std::invalid_argument("CqspSpec requires k >= 0, n >= 1");
  }
  if (states.size() != (size_t{1} << k)) {
    throw std::invalid_argument("CqspSpec needs 2^k states");
  }
  for (const auto &v : states) {
    if (v.size() != (size_t{1} << n)) {
      throw std::invalid_argument("CqspSpec state length must be 2^n");
    }
    double nrm = 0;
    for (const Complex &z : v) nrm += std::norm(z);
    if (std::abs(std::sqrt(nrm) - 1.0) > 1e-10) {
      throw std::invalid_argument("CqspSpec state is not normalized");
    }
  }
}

Circuit build_cqsp_case1(const CqspSpec &spec, int /*budget_m*/) {
  spec.validate();
  const int k = spec.k, n = spec.n;
  std::vector<AmplitudeTree> trees;
  trees.reserve(spec.states.size());
  for (const auto &v : spec.states) trees.push_back(amplitude_tree(v));

  Circuit c(k + n);
  // Diagonals are deferred between consecutive stages as in the plain
  // cascade; only the last stage synthesizes one.
  std::vector<double> pending;
  for (int level = 0; level < n; ++level) {
    UcuSpec u;
    for (int j = 0; j < k + level; ++j) u.controls.push_back(j);
    u.targets = {k + level};
    const uint64_t words = uint64_t{1} << (k + level);
    u.table.reserve(words);
    for (uint64_t x = 0; x < words; ++x) {
      const uint64_t iw = x & ((uint64_t{1} << k) - 1);
      const uint64_t prefix = x >> k;
      Mat g = trees[iw].node_gate(level, prefix);
      if (!pending.empty()) g *= std::polar(1.0, pending[x]);
      u.table.push_back(std::move(g));
    }
    if (level + 1 < n) {
      UcgDeferred d = build_ucg_deferred(u);
      c.append(widen(d.circuit, k + n));
      pending = std::move(d.diag_phases);
    } else {
      c.append(widen(build_ucg(u), k + n));
    }
  }
  return c;
}

int controlled_layers_required_ancillas(int k, int n) {
  const int p_max = 2 * ((1 << n) - 1);  // widest layer (two gates per node)
  return rosenthal_required_ancillas(n) + k * p_max;
}

long long controlled_layers_threshold(int k, int n) {
  const double c = rosenthal_layer_constant(n);
  const double a = 2.0 * c * n * std::pow(2.0, n);
  const double b = static_cast<double>(k) * std::pow(2.0, n);
  return static_cast<long long>(std::ceil(std::max(a, b)));
}

Circuit build_cqsp_controlled_layers(const CqspSpec &spec, int budget_m) {
  spec.validate();
  const int k = spec.k, n = spec.n;
  if (budget_m < controlled_layers_required_ancillas(k, n)) {
    throw std::invalid_argument(
        "insufficient ancillas: controlled layers need " +
        std::to_string(controlled_layers_required_ancillas(k, n)));
  }
  const RosenthalPlan plan = make_rosenthal_plan(n);
  const auto layer_qs = plan.layer_qubits();

  // Layout: [0,k) control index, then the plan shifted by k, then the copy
  // block reused across layers.
  const int plan_base = k;
  int copy_base = k + plan.total_qubits;
  size_t p_max = 0;
  for (const auto &qs : layer_qs) p_max = std::max(p_max, qs.size());
  const int width = copy_base + k * static_cast<int>(p_max);

  std::vector<int> ctrl(k);
  for (int j = 0; j < k; ++j) ctrl[j] = j;
  std::vector<int> copy_block;
  for (int q = copy_base; q < width; ++q) copy_block.push_back(q);

  std::vector<int> plan_map(plan.total_qubits);
  for (int q = 0; q < plan.total_qubits; ++q) plan_map[q] = plan_base + q;

  std::vector<std::array<RosenthalPlan::Layer, 5>> per_i;
  per_i.reserve(spec.states.size());
  for (const auto &v : spec.states) per_i.push_back(plan.layers(v));

  auto controlled_layer = [&](int r) {
    LayeredTargets lt;
    lt.q = k;
    std::vector<int> targets;
    const size_t width_r = layer_qs[r].size();
    lt.tables.resize(width_r);
    for (size_t j = 0; j < width_r; ++j) {
      targets.push_back(plan_base + layer_qs[r][j]);
      lt.tables[j].resize(size_t{1} << k);
      for (size_t iw = 0; iw < per_i.size(); ++iw) {
        lt.tables[j][iw] = per_i[iw][r].gates[j].second;
      }
    }
    return build_multi_target_ucu(lt, ctrl, targets, copy_block, width);
  };

  Circuit c(width);
  c.append(controlled_layer(0));
  c.append(embed(plan.c1_prime, width, plan_map));
  c.append(embed(plan.c1_second, width, plan_map));
  c.append(controlled_layer(1));
  c.append(embed(plan.c2, width, plan_map));
  c.append(controlled_layer(2));
  c.append(embed(plan.c3, width, plan_map));
  c.append(controlled_layer(3));
  c.append(embed(plan.c4, width, plan_map));
  c.append(controlled_layer(4));
  c.append(embed(plan.c5, width, plan_map));
  for (int q : plan.ancilla_list) c.mark_ancilla(plan_base + q);
  c.mark_ancillas(copy_block);
  return c;
}

Circuit build_cqsp_two_stage(const CqspSpec &spec, int budget_m, int split_s) {
  spec.validate();
  const int k = spec.k, n = spec.n;
  int s = split_s;
  if (s < 0) {
    s = static_cast<int>(std::ceil(4 * std::log2(static_cast<double>(n + k))))
        - k;
  }
  if (s <= 0) {
    // Degenerate split.
    return build_cqsp_case1(spec, budget_m);
  }
  if (s >= n) {
    // Stage 2 is the identity; stage 1 is the whole preparation.
    Circuit stage = build_stage(spec, budget_m, nullptr);
    return stage;
  }

  const int low = n - s;  // residual width
  const uint64_t dim_low = uint64_t{1} << low;
  const uint64_t dim_s = uint64_t{1} << s;

  // Stage 1: marginals on the top s target qubits.
  CqspSpec marg;
  marg.k = k;
  marg.n = s;
  marg.states.resize(size_t{1} << k);
  std::vector<std::vector<double>> vprime(size_t{1} << k);
  for (size_t i = 0; i < marg.states.size(); ++i) {
    marg.states[i].resize(dim_s);
    vprime[i].resize(dim_s);
    for (uint64_t eta = 0; eta < dim_s; ++eta) {
      double mass = 0;
      for (uint64_t p = 0; p < dim_low; ++p) {
        mass += std::norm(spec.states[i][eta * dim_low + p]);
      }
      vprime[i][eta] = std::sqrt(mass);
      marg.states[i][eta] = Complex{vprime[i][eta], 0};
    }
  }

  // Stage 2: conditional residues, controlled on (i, eta).
  CqspSpec resid;
  resid.k = k + s;
  resid.n = low;
  resid.states.resize(size_t{1} << (k + s));
  for (uint64_t i = 0; i < (uint64_t{1} << k); ++i) {
    for (uint64_t eta = 0; eta < dim_s; ++eta) {
      auto &st = resid.states[i + (eta << k)];
      st.assign(dim_low, Complex{0, 0});
      if (vprime[i][eta] > 0) {
        for (uint64_t p = 0; p < dim_low; ++p) {
          st[p] = spec.states[i][eta * dim_low + p] / vprime[i][eta];
        }
      } else {
        // The branch has zero amplitude; any unitary completion works.
        st[0] = Complex{1, 0};
      }
    }
  }

  std::string m1, m2;
  Circuit stage1 = build_stage(marg, budget_m, &m1);
  Circuit stage2 = build_stage(resid, budget_m, &m2);

  // Register map: stage-1 targets sit on the top s target qubits; stage-2
  // controls are (i, eta) and its targets the low n-s qubits. Ancillas of
  // both stages share the pool above k + n.
  const int anc1 = stage1.num_qubits() - (k + s);
  const int anc2 = stage2.num_qubits() - (k + s + low);
  const int width = k + n + std::max(anc1, anc2);

  std::vector<int> map1;
  for (int j = 0; j < k; ++j) map1.push_back(j);
  for (int j = 0; j < s; ++j) map1.push_back(k + low + j);
  for (int j = 0; j < anc1; ++j) map1.push_back(k + n + j);

  std::vector<int> map2;
  for (int j = 0; j < k; ++j) map2.push_back(j);
  for (int j = 0; j < s; ++j) map2.push_back(k + low + j);
  for (int j = 0; j < low; ++j) map2.push_back(k + j);
  for (int j = 0; j < anc2; ++j) map2.push_back(k + n + j);

  Circuit c(width);
  c.append(embed(stage1, width, map1));
  c.append(embed(stage2, width, map2));
  for (int q = k + n; q < width; ++q) c.mark_ancilla(q);
  return c;
}

CqspResult build_cqsp(const CqspSpec &spec, int budget_m, CqspMethod method,
                      int split_s) {
  spec.validate();
  const int k = spec.k, n = spec.n;

  if (method == CqspMethod::Auto && k == 0) {
    // Degenerates to standard preparation.
    QspResult r = build_qsp(spec.states[0], budget_m);
    return {r.circuit, r.method};
  }

  if (method == CqspMethod::Auto) {
    const double cap = std::pow(2.0, n + k);
    const double small = static_cast<double>(budget_m) * (n + k) * (n + k);
    if (small <= cap) {
      method = CqspMethod::Case1;
    } else if (budget_m >= controlled_layers_threshold(k, n) &&
               budget_m >= controlled_layers_required_ancillas(k, n)) {
      method = CqspMethod::ControlledLayers;
    } else {
      method = CqspMethod::TwoStage;
    }
  }

  switch (method) {
    case CqspMethod::Case1:
      return {build_cqsp_case1(spec, budget_m), "case1"};
    case CqspMethod::ControlledLayers:
      return {build_cqsp_controlled_layers(spec, budget_m),
              "controlled_layers"};
    case CqspMethod::TwoStage:
      return {build_cqsp_two_stage(spec, budget_m, split_s), "two_stage"};
    case CqspMethod::Auto:
      break;
  }
  throw std::logic_error("unreachable cqsp dispatch");
}

}  // namespace qcs
