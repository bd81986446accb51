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

#include <string>
#include <vector>

#include "qcs/circuit.hpp"
#include "qcs/cqsp.hpp"

namespace qcs {

enum class OracleBranch { Auto, UcgCascade, Cqsp };

/// The U-oracle |x>|0^n> -> |x>|u_x> loading column x of U, built as an
/// (n, n) controlled preparation over the columns. Register layout:
/// [0, n) address, [n, 2n) data, ancillas above.
CqspResult build_oracle(const Mat &u, int budget_m);

/// sum_x |x><x| (x) O_{U_x} for a family of 2^{n-k} k-qubit unitaries:
/// either a cascade of k growing UCGs or one (n, k)-CQSP, per the budget.
/// Registers: [0, n-k) selector x, [n-k, n) column selector y, [n, n+k)
/// data targets.
CqspResult build_controlled_oracle(const std::vector<Mat> &family,
                                   int budget_m,
                                   OracleBranch branch = OracleBranch::Auto);

/// Cosine-sine recursion: each level splits off a multiplexed Ry between
/// two demultiplexed block pairs (each a multiplexed Rz between two
/// (n-1)-qubit syntheses). Exact up to global phase; no ancillas;
/// Theta(4^n) CNOTs.
Circuit build_unitary_csd(const Mat &u, int budget_m = 0);

/// Number of CNOTs the recursion emits: (3/4) 4^n - (3/2) 2^n for n >= 1.
long long csd_cnot_count(int n);

/// Lower bound ceil((4^n - 3n - 1) / 4) on CNOT count for n-qubit circuits.
long long cnot_lower_bound(int n);

/// Analytic cost model of the ancilla-assisted synthesis route:
///   depth(n, k, m) = n 2^{n-k/2} + 2^{2n+k/2} / m
///   size(n, k, m)  = m 2^{n-k/2} + 2^{2n+k/2}
/// with the balancing minimizer k* = clamp(round(log2(n m) - n), 1, n).
/// Advisory output; the synthesized circuit's guarantee is correctness and
/// Theta(4^n) size.
struct DepthModelPoint {
  int n = 0, k = 0, m = 0;
  double predicted_depth = 0;
  double predicted_size = 0;
  int k_star = 1;
};
DepthModelPoint depth_model(int n, int k, int m);

}  // namespace qcs
