#pragma once

#include <vector>

#include "qcs/circuit.hpp"
#include "qcs/statevector.hpp"

namespace qcs::test {

inline double max_abs_diff(const Mat &a, const Mat &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double state_diff(const StateVector &a, const StateVector &b) {
  double worst = 0;
  for (size_t i = 0; i < a.amplitudes().size(); ++i) {
    worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  }
  return worst;
}

// Block-diagonal matrix of a UCG table over (controls..., target) with
// control word bits below the target bit, matching
// extract_unitary(c, controls + {target}).
inline Mat ucg_block_matrix(const std::vector<Mat> &table) {
  const size_t k_dim = table.size();
  const Eigen::Index t_dim = table[0].rows();
  const Eigen::Index dim = static_cast<Eigen::Index>(k_dim) * t_dim;
  Mat m = Mat::Zero(dim, dim);
  for (size_t x = 0; x < k_dim; ++x) {
    for (Eigen::Index r = 0; r < t_dim; ++r) {
      for (Eigen::Index c = 0; c < t_dim; ++c) {
        m(static_cast<Eigen::Index>(x) + r * k_dim,
          static_cast<Eigen::Index>(x) + c * k_dim) = table[x](r, c);
      }
    }
  }
  return m;
}

}  // namespace qcs::test
