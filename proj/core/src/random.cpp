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

#include "qcs/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace qcs {

Mat haar_unitary(int dim, Rng &rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      z(i, j) = Complex{g(rng), g(rng)};
    }
  }
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    q.col(i) *= (std::abs(d) > 1e-300) ? d / std::abs(d) : Complex{1, 0};
  }
  return q;
}

std::vector<Complex> random_state(size_t dim, Rng &rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> v(dim);
  double nrm = 0;
  for (auto &z : v) {
    z = Complex{g(rng), g(rng)};
    nrm += std::norm(z);
  }
  nrm = std::sqrt(nrm);
  for (auto &z : v) z /= nrm;
  return v;
}

}  // namespace qcs
