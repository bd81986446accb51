#include <doctest.h>

#include <cmath>

#include "qcs/linalg.hpp"
#include "qcs/mux.hpp"
#include "qcs/random.hpp"
#include "qcs/statevector.hpp"
#include "test_helpers.hpp"

using namespace qcs;

namespace {

Mat mux_rotation_direct(RotationAxis axis, const std::vector<double> &angles) {
  std::vector<Mat> table;
  for (double a : angles) {
    table.push_back(axis == RotationAxis::Rz ? rz_matrix(a) : ry_matrix(a));
  }
  return test::ucg_block_matrix(table);
}

}  // namespace

TEST_CASE("mux rotations match the block matrix exactly") {
  Rng rng(123);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (int q = 0; q <= 4; ++q) {
    std::vector<double> angles(size_t{1} << q);
    for (double &a : angles) a = ang(rng);
    std::vector<int> controls(q);
    for (int i = 0; i < q; ++i) controls[i] = i;
    for (RotationAxis axis : {RotationAxis::Ry, RotationAxis::Rz}) {
      Circuit c = build_mux_rotation(axis, angles, controls, q, q + 1);
      std::vector<int> on = controls;
      on.push_back(q);
      Mat got = extract_unitary(c, on);
      CHECK(test::max_abs_diff(got, mux_rotation_direct(axis, angles)) <
            1e-10);
      if (q >= 1) {
        Metrics m = metrics(c);
        CHECK(m.size == (2LL << q));
        CHECK(m.cnot_count == (1LL << q));
      }
    }
  }
}

TEST_CASE("diagonal synthesis is exact including the global phase") {
  Rng rng(321);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (int j = 1; j <= 4; ++j) {
    std::vector<double> phases(size_t{1} << j);
    for (double &p : phases) p = ang(rng);
    std::vector<int> qubits(j);
    for (int i = 0; i < j; ++i) qubits[i] = i;
    Circuit c = build_diagonal(phases, qubits, j);
    Mat got = extract_unitary(c, qubits);
    Mat want = Mat::Zero(1 << j, 1 << j);
    for (int i = 0; i < (1 << j); ++i) want(i, i) = std::polar(1.0, phases[i]);
    CHECK(test::max_abs_diff(got, want) < 1e-10);
    CHECK(metrics(c).size <= (2LL << j) - 3 + 1);
  }
}

TEST_CASE("ucg with no controls is the gate itself") {
  Rng rng(5);
  UcuSpec spec;
  spec.targets = {0};
  spec.table = {haar_unitary(2, rng)};
  Circuit c = build_ucg(spec);
  CHECK(c.gates().size() == 1);
  CHECK(depth(c) == 1);
  CHECK(test::max_abs_diff(extract_unitary(c, {0}), spec.table[0]) < 1e-12);
}

TEST_CASE("ucg with identity and X equals CNOT") {
  UcuSpec spec;
  spec.controls = {0};
  spec.targets = {1};
  spec.table = {Mat2::Identity(), x_matrix()};
  Circuit c = build_ucg(spec);
  Mat got = extract_unitary(c, {0, 1});
  Mat want = Mat::Zero(4, 4);
  want(0, 0) = 1;
  want(3, 1) = 1;
  want(2, 2) = 1;
  want(1, 3) = 1;
  CHECK(test::max_abs_diff(got, want) < 1e-10);
}

TEST_CASE("ucg block-diagonal equality, exhaustively to 4 controls") {
  Rng rng(99);
  for (int k = 1; k <= 4; ++k) {
    UcuSpec spec;
    for (int j = 0; j < k; ++j) spec.controls.push_back(j);
    spec.targets = {k};
    for (uint64_t x = 0; x < (uint64_t{1} << k); ++x) {
      spec.table.push_back(haar_unitary(2, rng));
    }
    Circuit c = build_ucg(spec);
    std::vector<int> on = spec.controls;
    on.push_back(k);
    CHECK(test::max_abs_diff(extract_unitary(c, on),
                             test::ucg_block_matrix(spec.table)) < 1e-10);
    CHECK(metrics(c).size <= 6LL << k);
  }
}

TEST_CASE("ucg size stays within 6 * 2^k at three controls") {
  Rng rng(17);
  UcuSpec spec;
  spec.controls = {0, 1, 2};
  spec.targets = {3};
  for (int x = 0; x < 8; ++x) spec.table.push_back(haar_unitary(2, rng));
  Circuit c = build_ucg(spec);
  CHECK(metrics(c).size <= 48);
  CHECK(test::max_abs_diff(extract_unitary(c, {0, 1, 2, 3}),
                           test::ucg_block_matrix(spec.table)) < 1e-10);
}

TEST_CASE("ucg respects non-contiguous wire labels") {
  Rng rng(55);
  UcuSpec spec;
  spec.controls = {3, 0};
  spec.targets = {2};
  for (int x = 0; x < 4; ++x) spec.table.push_back(haar_unitary(2, rng));
  Circuit c = build_ucg(spec);
  Mat got = extract_unitary(c, {3, 0, 2});
  CHECK(test::max_abs_diff(got, test::ucg_block_matrix(spec.table)) < 1e-10);
}

TEST_CASE("ucg spec validation") {
  UcuSpec spec;
  spec.controls = {0};
  spec.targets = {0};
  spec.table = {Mat2::Identity(), Mat2::Identity()};
  CHECK_THROWS_AS(build_ucg(spec), std::invalid_argument);
  spec.targets = {1};
  spec.table.pop_back();
  CHECK_THROWS_AS(build_ucg(spec), std::invalid_argument);
}
