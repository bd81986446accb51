#include <doctest.h>

#include "qcs/linalg.hpp"
#include "qcs/primitives.hpp"
#include "qcs/random.hpp"
#include "qcs/statevector.hpp"
#include "qcs/ucu.hpp"
#include "test_helpers.hpp"

using namespace qcs;

namespace {

// Direct matrix of sum_x |x><x| (x) (U_1^x (x) ... (x) U_p^x) over
// (ctrl word bits, then target bits).
Mat multi_target_direct(const LayeredTargets &lt, size_t p) {
  const size_t q = lt.q;
  const Eigen::Index dim = Eigen::Index{1} << (q + p);
  Mat m = Mat::Zero(dim, dim);
  for (uint64_t x = 0; x < (uint64_t{1} << q); ++x) {
    Mat block = Mat::Identity(1, 1);
    for (size_t i = 0; i < p; ++i) {
      Mat next = Mat::Zero(block.rows() * 2, block.cols() * 2);
      // target i is bit q+i: kron with later targets on the left
      next.topLeftCorner(block.rows(), block.cols()) =
          lt.tables[i][x](0, 0) * block;
      next.topRightCorner(block.rows(), block.cols()) =
          lt.tables[i][x](0, 1) * block;
      next.bottomLeftCorner(block.rows(), block.cols()) =
          lt.tables[i][x](1, 0) * block;
      next.bottomRightCorner(block.rows(), block.cols()) =
          lt.tables[i][x](1, 1) * block;
      block = next;
    }
    for (Eigen::Index r = 0; r < block.rows(); ++r) {
      for (Eigen::Index c = 0; c < block.cols(); ++c) {
        m(x + (r << q), x + (c << q)) = block(r, c);
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("multi-target with no controls is a tensor layer") {
  Rng rng(1);
  LayeredTargets lt;
  lt.q = 0;
  lt.tables = {{haar_unitary(2, rng)}, {haar_unitary(2, rng)}};
  Circuit c = build_multi_target_ucu(lt, {}, {0, 1}, {}, 2);
  CHECK(depth(c) == 1);
  Mat got = extract_unitary(c, {0, 1});
  CHECK(test::max_abs_diff(got, multi_target_direct(lt, 2)) < 1e-10);
}

TEST_CASE("multi-target q=1 p=2 with X on control-one is a CNOT fan") {
  LayeredTargets lt;
  lt.q = 1;
  lt.tables = {{Mat2::Identity(), x_matrix()}, {Mat2::Identity(), x_matrix()}};
  Circuit c = build_multi_target_ucu(lt, {0}, {1, 2}, {3, 4}, 5);
  for (uint64_t x = 0; x < 8; ++x) {
    const uint64_t ctl = x & 1;
    const uint64_t want = ctl ? x ^ 6 : x;
    StateVector out = run(c, StateVector::basis(5, x));
    CHECK(std::abs(out.amplitude(want) - Complex{1, 0}) < 1e-10);
  }
}

TEST_CASE("multi-target q=2 p=3 equals the direct block construction") {
  Rng rng(42);
  LayeredTargets lt;
  lt.q = 2;
  lt.tables.resize(3);
  for (auto &table : lt.tables) {
    for (int x = 0; x < 4; ++x) table.push_back(haar_unitary(2, rng));
  }
  std::vector<int> ctrl = {0, 1};
  std::vector<int> targets = {2, 3, 4};
  std::vector<int> ancillas = {5, 6, 7, 8, 9, 10};
  Circuit c = build_multi_target_ucu(lt, ctrl, targets, ancillas, 11);
  Mat got = extract_unitary(c, {0, 1, 2, 3, 4});
  CHECK(test::max_abs_diff(got, multi_target_direct(lt, 3)) < 1e-10);

  // Parallel structure: copy + one UCG depth + uncopy.
  Circuit copy = build_copy(2, 3, ctrl, {{5, 6}, {7, 8}, {9, 10}}, 11);
  UcuSpec one;
  one.controls = {5, 6};
  one.targets = {2};
  for (int x = 0; x < 4; ++x) one.table.push_back(lt.tables[0][x]);
  long long ucg_depth = 0;
  for (size_t i = 0; i < 3; ++i) {
    UcuSpec s;
    s.controls = {5, 6};
    s.targets = {static_cast<int>(2 + i)};
    for (int x = 0; x < 4; ++x) s.table.push_back(lt.tables[i][x]);
    ucg_depth = std::max(ucg_depth, depth(build_ucg(s)));
  }
  CHECK(depth(c) <= 2 * depth(copy) + ucg_depth);

  for (uint64_t x = 0; x < 32; ++x) {
    CHECK(verify_ancilla_restored(c, StateVector::basis(11, x)));
  }
}

TEST_CASE("multi-target equals composing prefix-controlled layers") {
  // Naive oracle: apply the x-th tensor layer controlled on each x in turn.
  Rng rng(7);
  LayeredTargets lt;
  lt.q = 2;
  lt.tables.resize(2);
  for (auto &table : lt.tables) {
    for (int x = 0; x < 4; ++x) table.push_back(haar_unitary(2, rng));
  }
  Circuit c = build_multi_target_ucu(lt, {0, 1}, {2, 3}, {4, 5, 6, 7}, 8);
  Mat got = extract_unitary(c, {0, 1, 2, 3});
  CHECK(test::max_abs_diff(got, multi_target_direct(lt, 2)) < 1e-10);
}

TEST_CASE("multi-target demands enough ancillas") {
  LayeredTargets lt;
  lt.q = 2;
  lt.tables = {{Mat2::Identity(), Mat2::Identity(), Mat2::Identity(),
                Mat2::Identity()}};
  CHECK_THROWS_AS(build_multi_target_ucu(lt, {0, 1}, {2}, {3}, 4),
                  std::invalid_argument);
}

TEST_CASE("layered d=1 reduces to the multi-target semantics") {
  Rng rng(9);
  LayeredTargets lt;
  lt.q = 1;
  lt.tables.resize(2);
  for (auto &t : lt.tables) {
    t.push_back(haar_unitary(2, rng));
    t.push_back(haar_unitary(2, rng));
  }
  UcuLayer layer;
  layer.tables[0] = lt.tables[0];
  layer.tables[1] = lt.tables[1];
  Circuit c = build_layered_ucu({layer}, {0}, {1, 2}, {3, 4}, 5);
  Mat got = extract_unitary(c, {0, 1, 2});
  CHECK(test::max_abs_diff(got, multi_target_direct(lt, 2)) < 1e-10);
}

TEST_CASE("layered conditional SWAP equals controlled-SWAP") {
  // W^0 = I, W^1 = SWAP as three CNOTs between the two targets.
  UcuLayer l1, l2, l3;
  l1.cnots.push_back({0, 1, uint64_t{1}});
  l2.cnots.push_back({1, 0, uint64_t{1}});
  l3.cnots.push_back({0, 1, uint64_t{1}});
  Circuit c = build_layered_ucu({l1, l2, l3}, {0}, {1, 2}, {3, 4}, 5);
  for (uint64_t x = 0; x < 8; ++x) {
    uint64_t want = x;
    if (x & 1) {
      const uint64_t b1 = (x >> 1) & 1, b2 = (x >> 2) & 1;
      want = (x & 1) | (b2 << 1) | (b1 << 2);
    }
    StateVector out = run(c, StateVector::basis(5, x));
    CHECK(std::abs(out.amplitude(want) - Complex{1, 0}) < 1e-10);
  }
}

TEST_CASE("layered two-layer random circuit matches direct simulation") {
  Rng rng(31);
  const int q = 2;
  std::vector<UcuLayer> layers(2);
  for (auto &layer : layers) {
    for (int i = 0; i < 2; ++i) {
      std::vector<Mat2> t;
      for (int x = 0; x < 4; ++x) t.push_back(haar_unitary(2, rng));
      layer.tables[i] = t;
    }
  }
  Circuit c = build_layered_ucu(layers, {0, 1}, {2, 3}, {4, 5, 6, 7}, 8);
  // Direct: product of the two tensor layers per control word.
  const Eigen::Index dim = 16;
  Mat want = Mat::Zero(dim, dim);
  for (uint64_t x = 0; x < 4; ++x) {
    Mat w = Mat::Identity(4, 4);
    for (const auto &layer : layers) {
      Mat step(4, 4);
      const Mat2 &a = layer.tables.at(0)[x];
      const Mat2 &b = layer.tables.at(1)[x];
      for (int r = 0; r < 4; ++r) {
        for (int cidx = 0; cidx < 4; ++cidx) {
          step(r, cidx) = a(r & 1, cidx & 1) * b(r >> 1, cidx >> 1);
        }
      }
      w = step * w;
    }
    for (Eigen::Index r = 0; r < 4; ++r) {
      for (Eigen::Index cc = 0; cc < 4; ++cc) {
        want(x + (r << q), x + (cc << q)) = w(r, cc);
      }
    }
  }
  CHECK(test::max_abs_diff(extract_unitary(c, {0, 1, 2, 3}), want) < 1e-10);
}

TEST_CASE("layered rejects overlapping supports") {
  UcuLayer layer;
  layer.tables[0] = {Mat2::Identity(), Mat2::Identity()};
  layer.cnots.push_back({0, 1, std::nullopt});
  CHECK_THROWS_AS(build_layered_ucu({layer}, {0}, {1, 2}, {3, 4}, 5),
                  std::invalid_argument);
}
