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

#include "qcs/linalg.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qcs {

namespace {
constexpr double kPi = std::numbers::pi;

void require_unitary(const Mat &u, double tol, const char *what) {
  if (u.rows() != u.cols() || unitarity_residual(u) > tol) {
    throw std::invalid_argument(std::string(what) + ": input is not unitary");
  }
}
}  // namespace

Mat2 rz_matrix(double theta) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::polar(1.0, -theta / 2);
  m(1, 1) = std::polar(1.0, theta / 2);
  return m;
}

Mat2 ry_matrix(double theta) {
  Mat2 m;
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -s, s, c;
  return m;
}

Mat2 rx_matrix(double theta) {
  Mat2 m;
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0};
  return m;
}

Mat2 x_matrix() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 h_matrix() {
  Mat2 m;
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

Mat2 phase_matrix(double alpha) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = std::polar(1.0, alpha);
  return m;
}

ZyzAngles zyz_decompose(const Mat2 &u) {
  require_unitary(u, 1e-10, "zyz_decompose");
  // Strip the determinant phase, then read the SU(2) Euler angles.
  const Complex det = u.determinant();
  const double alpha = std::arg(det) / 2;
  Mat2 su = u * std::polar(1.0, -alpha);
  const double c = std::abs(su(0, 0));
  const double gamma = 2.0 * std::atan2(std::abs(su(1, 0)), c);
  double beta, delta;
  if (std::abs(su(0, 0)) > 1e-12 && std::abs(su(1, 0)) > 1e-12) {
    const double p00 = std::arg(su(0, 0));  // -(beta+delta)/2
    const double p10 = std::arg(su(1, 0));  // (beta-delta)/2
    beta = p10 - p00;
    delta = -p10 - p00;
  } else if (std::abs(su(0, 0)) > 1e-12) {
    // gamma ~ 0: only beta+delta matters.
    beta = -2.0 * std::arg(su(0, 0));
    delta = 0;
  } else {
    // gamma ~ pi: only beta-delta matters.
    beta = 2.0 * std::arg(su(1, 0));
    delta = 0;
  }
  return {alpha, beta, gamma, delta};
}

AxbxcFactors axbxc_factor(const Mat2 &u) {
  require_unitary(u, 1e-10, "axbxc_factor");
  const ZyzAngles z = zyz_decompose(u);
  AxbxcFactors f;
  f.alpha = z.alpha;
  f.a = rz_matrix(z.beta) * ry_matrix(z.gamma / 2);
  f.b = ry_matrix(-z.gamma / 2) * rz_matrix(-(z.delta + z.beta) / 2);
  f.c = rz_matrix((z.delta - z.beta) / 2);
  return f;
}

Mat CsdFactors::reconstruct() const {
  const Eigen::Index n = v1p.rows();
  Mat c = Mat::Zero(n, n), s = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    c(i, i) = std::cos(thetas[i]);
    s(i, i) = std::sin(thetas[i]);
  }
  Mat u(2 * n, 2 * n);
  u.topLeftCorner(n, n) = v1p * c * v2p;
  u.topRightCorner(n, n) = v1p * s * v2pp;
  u.bottomLeftCorner(n, n) = -v1pp * s * v2p;
  u.bottomRightCorner(n, n) = v1pp * c * v2pp;
  return u;
}

CsdFactors csd_factor(const Mat &u) {
  require_unitary(u, 1e-10, "csd_factor");
  const Eigen::Index dim = u.rows();
  if (dim < 4 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("csd_factor requires dimension 2^n, n >= 2");
  }
  const Eigen::Index n = dim / 2;
  const Mat u00 = u.topLeftCorner(n, n);
  const Mat u01 = u.topRightCorner(n, n);
  const Mat u10 = u.bottomLeftCorner(n, n);
  const Mat u11 = u.bottomRightCorner(n, n);

  // Singular values of U00 descending = cos(theta) with theta ascending.
  Eigen::JacobiSVD<Mat> svd(u00, Eigen::ComputeFullU | Eigen::ComputeFullV);
  CsdFactors f;
  f.v1p = svd.matrixU();
  f.v2p = svd.matrixV().adjoint();

  // Columns of U10 V2'^dag are -sin(theta_i) * v1pp_i; mutually orthogonal
  // by unitarity regardless of singular-value clusters.
  const Mat t = u10 * svd.matrixV();
  f.thetas.resize(n);
  std::vector<double> cs(n), sn(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double c = std::clamp(svd.singularValues()(i), 0.0, 1.0);
    const double s = t.col(i).norm();
    f.thetas[i] = std::atan2(s, c);
    cs[i] = std::cos(f.thetas[i]);
    sn[i] = std::sin(f.thetas[i]);
  }

  f.v1pp = Mat::Zero(n, n);
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (sn[i] > 1e-7) {
      f.v1pp.col(i) = -t.col(i) / t.col(i).norm();
    } else {
      free_cols.push_back(i);
    }
  }
  if (!free_cols.empty()) {
    // Complete the fixed columns to an orthonormal basis by Gram-Schmidt
    // against them.
    std::vector<Vec> basis;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (sn[i] > 1e-7) basis.push_back(f.v1pp.col(i));
    }
    size_t next = 0;
    for (Eigen::Index e = 0; e < n && next < free_cols.size(); ++e) {
      Vec v = Vec::Zero(n);
      v(e) = 1.0;
      for (const Vec &b : basis) v -= b.dot(v) * b;
      // second pass for numerical orthogonality
      for (const Vec &b : basis) v -= b.dot(v) * b;
      const double nr = v.norm();
      if (nr > 1e-6) {
        v /= nr;
        basis.push_back(v);
        f.v1pp.col(free_cols[next++]) = v;
      }
    }
    if (next != free_cols.size()) {
      throw std::runtime_error("csd_factor: basis completion failed");
    }
  }

  // Rows of V2'' from whichever of X = V1'^dag U01 = S V2'' and
  // Z = V1''^dag U11 = C V2'' is better conditioned per row.
  const Mat x = f.v1p.adjoint() * u01;
  const Mat z = f.v1pp.adjoint() * u11;
  f.v2pp = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Vec row = (sn[i] >= cs[i]) ? Vec(x.row(i).transpose() / sn[i])
                               : Vec(z.row(i).transpose() / cs[i]);
    const double nr = row.norm();
    if (nr < 1e-6) {
      throw std::runtime_error("csd_factor: degenerate row");
    }
    f.v2pp.row(i) = (row / nr).transpose();
  }
  return f;
}

Mat DemuxFactors::d() const {
  Mat m = Mat::Zero(phases.size(), phases.size());
  for (size_t i = 0; i < phases.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
        std::polar(1.0, phases[i]);
  }
  return m;
}

DemuxFactors demultiplex(const Mat &v, const Mat &w) {
  require_unitary(v, 1e-10, "demultiplex");
  require_unitary(w, 1e-10, "demultiplex");
  if (v.rows() != w.rows()) {
    throw std::invalid_argument("demultiplex dimension mismatch");
  }
  const Eigen::Index n = v.rows();
  const Mat m = v * w.adjoint();

  // Unitary matrices are normal, so the Schur form is diagonal and the
  // Schur vectors are an orthonormal eigenbasis.
  Mat q;
  Vec evals(n);
  if (n == 1) {
    q = Mat::Identity(1, 1);
    evals(0) = m(0, 0);
  } else {
    Eigen::ComplexSchur<Mat> schur(m, true);
    if (schur.info() != Eigen::Success) {
      throw std::runtime_error("demultiplex: Schur decomposition failed");
    }
    q = schur.matrixU();
    evals = schur.matrixT().diagonal();
  }

  // Sort eigenphases by principal argument in [0, 2pi).
  std::vector<Eigen::Index> order(n);
  std::vector<double> arg2(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    order[i] = i;
    double a = std::arg(evals(i));
    if (a < 0) a += 2 * kPi;
    arg2[i] = a;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     return arg2[a] < arg2[b];
                   });

  DemuxFactors f;
  f.l = Mat(n, n);
  f.phases.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    f.l.col(i) = q.col(order[i]);
    f.phases[i] = arg2[order[i]] / 2;
  }
  f.r = f.d().adjoint() * f.l.adjoint() * v;
  return f;
}

AmplitudeTree::AmplitudeTree(int n, std::vector<Complex> beta0,
                             std::vector<Complex> beta1,
                             std::vector<double> node_norm)
    : n_(n),
      beta0_(std::move(beta0)),
      beta1_(std::move(beta1)),
      norm_(std::move(node_norm)) {
  const size_t expected = (size_t{1} << n) - 1;
  if (beta0_.size() != expected || beta1_.size() != expected ||
      norm_.size() != expected) {
    throw std::invalid_argument("amplitude tree must have 2^n - 1 nodes");
  }
}

Mat2 AmplitudeTree::node_gate(int level, uint64_t word) const {
  const Complex b0 = beta0(level, word);
  const Complex b1 = beta1(level, word);
  Mat2 m;
  m << b0, -std::conj(b1), b1, std::conj(b0);
  return m;
}

AmplitudeTree amplitude_tree(const std::vector<Complex> &v) {
  const size_t dim = v.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("amplitude_tree input must have length 2^n");
  }
  int n = 0;
  while ((size_t{1} << n) < dim) ++n;
  if (n == 0) {
    throw std::invalid_argument("amplitude_tree requires n >= 1");
  }
  double nrm = 0;
  for (const Complex &z : v) nrm += std::norm(z);
  if (std::abs(std::sqrt(nrm) - 1.0) > 1e-10) {
    throw std::invalid_argument("amplitude_tree input is not normalized");
  }

  // Subtree masses, level n (leaves) down to the root.
  std::vector<std::vector<double>> mass(n + 1);
  mass[n].resize(dim);
  for (size_t i = 0; i < dim; ++i) mass[n][i] = std::norm(v[i]);
  for (int j = n - 1; j >= 0; --j) {
    mass[j].resize(size_t{1} << j);
    for (uint64_t a = 0; a < (uint64_t{1} << j); ++a) {
      mass[j][a] = mass[j + 1][a] + mass[j + 1][a + (uint64_t{1} << j)];
    }
  }

  const size_t nodes = (size_t{1} << n) - 1;
  std::vector<Complex> b0(nodes), b1(nodes);
  std::vector<double> nn(nodes);
  for (int j = 0; j < n; ++j) {
    for (uint64_t a = 0; a < (uint64_t{1} << j); ++a) {
      const size_t idx = AmplitudeTree::node_index(j, a);
      const double wx = std::sqrt(mass[j][a]);
      nn[idx] = wx;
      if (wx <= 0) {
        // Unreachable branch: identity keeps circuits shallow.
        b0[idx] = 1.0;
        b1[idx] = 0.0;
        continue;
      }
      const uint64_t child0 = a;
      const uint64_t child1 = a + (uint64_t{1} << j);
      if (j + 1 < n) {
        b0[idx] = std::sqrt(mass[j + 1][child0]) / wx;
        b1[idx] = std::sqrt(mass[j + 1][child1]) / wx;
      } else {
        b0[idx] = v[child0] / wx;
        b1[idx] = v[child1] / wx;
      }
    }
  }
  return AmplitudeTree(n, std::move(b0), std::move(b1), std::move(nn));
}

}  // namespace qcs
