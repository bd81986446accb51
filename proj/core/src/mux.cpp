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

#include "qcs/mux.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "qcs/linalg.hpp"

namespace qcs {

namespace {

constexpr double kPi = std::numbers::pi;

Mat2 rot(RotationAxis axis, double theta) {
  return axis == RotationAxis::Rz ? rz_matrix(theta) : ry_matrix(theta);
}

// Cascade angles: phi_i = 2^-q * sum_x (-1)^{<gray(i-1), x>} theta_x, where
// the rotation before the i-th CNOT sees sign prefix gray(i-1).
std::vector<double> cascade_angles(const std::vector<double> &theta) {
  const size_t n = theta.size();
  std::vector<double> phi(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    const uint64_t g = i ^ (i >> 1);
    double s = 0;
    for (size_t x = 0; x < n; ++x) {
      s += (std::popcount(g & x) & 1) ? -theta[x] : theta[x];
    }
    phi[i] = s / static_cast<double>(n);
  }
  return phi;
}

}  // namespace

Circuit build_mux_rotation(RotationAxis axis, const std::vector<double> &angles,
                           const std::vector<int> &controls, int target,
                           int num_qubits) {
  const size_t q = controls.size();
  if (angles.size() != (size_t{1} << q)) {
    throw std::invalid_argument("mux rotation needs 2^q angles");
  }
  Circuit c(num_qubits);
  if (q == 0) {
    c.add_1q(target, rot(axis, angles[0]));
    return c;
  }
  const std::vector<double> phi = cascade_angles(angles);
  const uint64_t n = uint64_t{1} << q;
  for (uint64_t i = 1; i <= n; ++i) {
    c.add_1q(target, rot(axis, phi[i - 1]));
    const int pos = (i == n) ? static_cast<int>(q) - 1
                             : std::countr_zero(i);
    c.add_cx(controls[pos], target);
  }
  return c;
}

double append_diagonal(Circuit &out, const std::vector<double> &phases,
                       const std::vector<int> &qubits) {
  const size_t j = qubits.size();
  if (phases.size() != (size_t{1} << j)) {
    throw std::invalid_argument("diagonal needs 2^j phases");
  }
  if (j == 0) return phases[0];
  const size_t half = size_t{1} << (j - 1);
  std::vector<double> lam(half), mu(half);
  for (size_t x = 0; x < half; ++x) {
    lam[x] = phases[x + half] - phases[x];
    mu[x] = (phases[x + half] + phases[x]) / 2;
  }
  std::vector<int> rest(qubits.begin(), qubits.end() - 1);
  out.append(build_mux_rotation(RotationAxis::Rz, lam, rest, qubits.back(),
                                out.num_qubits()));
  return append_diagonal(out, mu, rest);
}

Circuit build_diagonal(const std::vector<double> &phases,
                       const std::vector<int> &qubits, int num_qubits) {
  Circuit c(num_qubits);
  const double g = append_diagonal(c, phases, qubits);
  if (std::abs(g) > 0) {
    if (c.gates().empty()) {
      Mat2 m = Mat2::Identity() * std::polar(1.0, g);
      c.add_1q(qubits.empty() ? 0 : qubits[0], m);
    } else {
      // Scale any one gate: a scalar on a single gate scales the whole
      // operator.
      Circuit scaled(num_qubits);
      bool done = false;
      for (const Gate &gt : c.gates()) {
        if (!done && !gt.is_cnot()) {
          scaled.add_1q(gt.target, Mat2(gt.matrix * std::polar(1.0, g)));
          done = true;
        } else {
          scaled.add(gt);
        }
      }
      if (!done) {
        scaled.add_1q(qubits[0], Mat2(Mat2::Identity() * std::polar(1.0, g)));
      }
      c = scaled;
    }
  }
  return c;
}

void UcuSpec::validate() const {
  if (targets.empty()) {
    throw std::invalid_argument("UcuSpec needs at least one target");
  }
  if (table.size() != (size_t{1} << controls.size())) {
    throw std::invalid_argument("UcuSpec table must have 2^|S| entries");
  }
  std::set<int> seen(controls.begin(), controls.end());
  for (int t : targets) {
    if (seen.count(t)) {
      throw std::invalid_argument("UcuSpec controls and targets must be "
                                  "disjoint");
    }
    seen.insert(t);
  }
  if (seen.size() != controls.size() + targets.size()) {
    throw std::invalid_argument("UcuSpec indices must be distinct");
  }
  const Eigen::Index d = Eigen::Index{1} << targets.size();
  for (const Mat &u : table) {
    if (u.rows() != d || u.cols() != d || unitarity_residual(u) > 1e-10) {
      throw std::invalid_argument("UcuSpec table entry is not unitary");
    }
  }
}

namespace {

// Demultiplexes the pair (a, b):
//   diag(a, b) = R * (I (x) u) * ZZ * (I (x) v)
// where ZZ = diag(e^{i pi/4}, e^{-i pi/4}, e^{-i pi/4}, e^{i pi/4}) over
// (control, target) and R applies Rz(a0)/Rz(a1) on the control for target
// bit 0/1. The fixed middle becomes one CNOT after local rewrites.
struct PairDemux {
  Mat2 u, v;
  double a0, a1;
};

PairDemux pair_demultiplex(const Mat2 &a, const Mat2 &b) {
  const Mat2 x = a * b.adjoint();
  const double t_half = std::arg(x.determinant()) / 2;
  const Mat2 su = x * std::polar(1.0, -t_half);
  const Complex x0 = su(0, 0);
  const double phi = 2 * t_half;
  PairDemux p;
  p.a0 = -kPi / 2 - phi / 2 - std::arg(x0);
  p.a1 = kPi / 2 - phi / 2 + std::arg(x0);
  Mat2 r = Mat2::Zero();
  r(0, 0) = std::polar(1.0, p.a0 / 2);
  r(1, 1) = std::polar(1.0, p.a1 / 2);

  Eigen::ComplexEigenSolver<Mat2> es(r * x * r);
  Mat2 vec = es.eigenvectors();
  Vec vals = es.eigenvalues();
  if (std::abs(vals(0) + Complex{0, 1}) < 1e-8) {
    vec.col(0).swap(vec.col(1));
  }
  vec.col(0).normalize();
  vec.col(1).normalize();
  p.u = vec;
  Mat2 d = Mat2::Zero();
  d(0, 0) = std::polar(1.0, kPi / 4);
  d(1, 1) = std::polar(1.0, -kPi / 4);
  p.v = d * vec.adjoint() * r.adjoint() * b;
  return p;
}

struct UcgState {
  Circuit *out;
  const std::vector<int> *controls;
  int target;
  // Deferred multiplexed-Rz ladder: slot l holds 2^{l+1} angles indexed by
  // (pair word | target bit << l), applied to controls[l].
  std::vector<std::vector<double>> ucrz;
  double phase = 0.0;
};

const Mat2 &u_mult() {
  static const Mat2 m = rz_matrix(kPi / 2) * rx_matrix(kPi / 2) *
                        rz_matrix(kPi / 2);
  return m;
}
const Mat2 &v_mult() {
  static const Mat2 m = rz_matrix(kPi / 2) * rx_matrix(kPi / 2);
  return m;
}

void rec_demux(std::vector<Mat2> tab, UcgState &st, const Mat2 &left,
               const Mat2 &right) {
  const size_t n = tab.size();
  const size_t mid = n / 2;
  int level = 0;
  while ((size_t{1} << (level + 1)) < n) ++level;  // n = 2^{level+1}

  // Fold the pending ladder slot of this size into the incoming table.
  std::vector<double> &pend = st.ucrz[level];
  for (size_t i = 0; i < n; ++i) {
    Mat2 dm = Mat2::Zero();
    if (i < mid) {
      dm(0, 0) = std::polar(1.0, -0.5 * pend[i]);
      dm(1, 1) = std::polar(1.0, -0.5 * pend[i + mid]);
    } else {
      dm(0, 0) = std::polar(1.0, 0.5 * pend[i - mid]);
      dm(1, 1) = std::polar(1.0, 0.5 * pend[i]);
    }
    tab[i] = tab[i] * dm;
  }

  std::vector<Mat2> us(mid), vs(mid);
  std::vector<double> rzl(n);
  for (size_t i = 0; i < mid; ++i) {
    PairDemux p = pair_demultiplex(tab[i], tab[i + mid]);
    us[i] = p.u;
    vs[i] = p.v;
    rzl[i] = p.a0 + 1.5 * kPi;
    rzl[i + mid] = p.a1 + 1.5 * kPi;
  }
  st.ucrz[level] = rzl;

  if (mid == 1) {
    st.out->add_1q(st.target, Mat2(v_mult() * vs[0] * left));
  } else {
    rec_demux(std::move(vs), st, left, v_mult());
  }
  st.out->add_cx((*st.controls)[level], st.target);
  st.phase += 1.75 * kPi;
  if (mid == 1) {
    st.out->add_1q(st.target, Mat2(right * us[0] * u_mult()));
  } else {
    rec_demux(std::move(us), st, u_mult(), right);
  }
}

}  // namespace

UcgDeferred build_ucg_deferred(const UcuSpec &spec) {
  spec.validate();
  if (spec.targets.size() != 1) {
    throw std::invalid_argument("build_ucg requires exactly one target");
  }
  const int k = static_cast<int>(spec.controls.size());
  const int t = spec.targets[0];
  int width = t;
  for (int c : spec.controls) width = std::max(width, c);
  width += 1;

  UcgDeferred result{Circuit(width), {}};
  if (k == 0) {
    result.circuit.add_1q(t, Mat2(spec.table[0]));
    result.diag_phases.assign(2, 0.0);
    return result;
  }

  std::vector<Mat2> tab(spec.table.size());
  for (size_t i = 0; i < tab.size(); ++i) tab[i] = spec.table[i];

  UcgState st;
  st.out = &result.circuit;
  st.controls = &spec.controls;
  st.target = t;
  st.ucrz.resize(k);
  for (int l = 0; l < k; ++l) {
    st.ucrz[l].assign(size_t{1} << (l + 1), 0.0);
  }
  rec_demux(std::move(tab), st, Mat2::Identity(), Mat2::Identity());

  // Collapse the surviving ladder and the tracked scalar into one phase
  // vector over (controls..., target).
  const size_t dim = size_t{1} << (k + 1);
  result.diag_phases.assign(dim, st.phase);
  for (size_t y = 0; y < dim; ++y) {
    const size_t x = y & ((size_t{1} << k) - 1);
    const size_t tb = y >> k;
    for (int l = 0; l < k; ++l) {
      const size_t idx = (x & ((size_t{1} << l) - 1)) + (tb << l);
      const double sign = ((x >> l) & 1) ? 0.5 : -0.5;
      result.diag_phases[y] += sign * st.ucrz[l][idx];
    }
  }
  return result;
}

Circuit build_ucg(const UcuSpec &spec, int /*budget_m*/) {
  UcgDeferred d = build_ucg_deferred(spec);
  if (spec.controls.empty()) {
    return d.circuit;
  }
  std::vector<int> qubits = spec.controls;
  qubits.push_back(spec.targets[0]);
  d.circuit.append(
      build_diagonal(d.diag_phases, qubits, d.circuit.num_qubits()));
  return d.circuit;
}

}  // namespace qcs
