#include <doctest.h>

#include <cmath>

#include "qcs/io.hpp"
#include "qcs/linalg.hpp"
#include "qcs/qsp.hpp"
#include "qcs/random.hpp"
#include "qcs/statevector.hpp"
#include "test_helpers.hpp"

using namespace qcs;

namespace {

StateVector target_state(const std::vector<Complex> &v, int total) {
  std::vector<Complex> a(size_t{1} << total, Complex{0, 0});
  for (size_t i = 0; i < v.size(); ++i) a[i] = v[i];
  return StateVector(total, std::move(a));
}

double prep_fidelity(const Circuit &c, const std::vector<Complex> &v) {
  StateVector out = run(c, StateVector::zero(c.num_qubits()));
  return fidelity(out, target_state(v, c.num_qubits()));
}

// The boolean-formula form of the leaf function: bit j set iff some
// depth-j+1 path t ending in 1 has all its interior choices matching.
uint64_t leaf_function_formula(const LeafAssignment &za) {
  uint64_t leaf = 0;
  for (int j = 1; j <= za.n; ++j) {
    bool bit = false;
    for (uint64_t t = 0; t < (uint64_t{1} << j) && !bit; ++t) {
      if (((t >> (j - 1)) & 1) == 0) continue;  // t_j = 1 paths only
      bool all = true;
      uint64_t word = 0;
      for (int i = 1; i <= j && all; ++i) {
        const uint64_t ti = (t >> (i - 1)) & 1;
        const uint8_t zx = za.z[AmplitudeTree::node_index(i - 1, word)];
        if (zx != ti) all = false;
        word += ti << (i - 1);
      }
      bit = bit || all;
    }
    if (bit) leaf |= uint64_t{1} << (j - 1);
  }
  return leaf;
}

}  // namespace

TEST_CASE("cascade on a basis target is the identity on |0>") {
  std::vector<Complex> v(8, Complex{0, 0});
  v[0] = 1;
  Circuit c = build_qsp_cascade(v);
  StateVector out = run(c, StateVector::zero(3));
  CHECK(std::abs(out.amplitude(0) - Complex{1, 0}) < 1e-9);
}

TEST_CASE("cascade prepares the uniform state") {
  std::vector<Complex> v(8, Complex{1 / std::sqrt(8.0), 0});
  Circuit c = build_qsp_cascade(v);
  CHECK(prep_fidelity(c, v) >= 1 - 1e-9);
}

TEST_CASE("cascade prepares random complex states up to n=8") {
  Rng rng(2025);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Complex> v = random_state(size_t{1} << n, rng);
      Circuit c = build_qsp_cascade(v);
      CHECK(prep_fidelity(c, v) >= 1 - 1e-9);
    }
  }
}

TEST_CASE("leaf walk on trivial assignments") {
  LeafAssignment z;
  z.n = 3;
  z.z.assign(7, 0);
  CHECK(leaf_function(z) == 0);
  z.z.assign(7, 1);
  CHECK(leaf_function(z) == 7);
}

TEST_CASE("leaf walk follows chosen branches") {
  LeafAssignment z;
  z.n = 2;
  z.z.assign(3, 0);
  z.z[AmplitudeTree::node_index(0, 0)] = 1;  // root -> child 1
  z.z[AmplitudeTree::node_index(1, 1)] = 1;  // node "1" -> leaf 11
  CHECK(leaf_function(z) == 3);
}

TEST_CASE("leaf walk agrees with the boolean formula") {
  Rng rng(4);
  for (int n = 1; n <= 3; ++n) {
    const size_t nodes = (size_t{1} << n) - 1;
    for (int trial = 0; trial < 200; ++trial) {
      LeafAssignment z;
      z.n = n;
      z.z.resize(nodes);
      for (auto &b : z.z) b = static_cast<uint8_t>(rng() & 1);
      CHECK(leaf_function(z) == leaf_function_formula(z));
    }
  }
}

TEST_CASE("u_leaf with one level is a CNOT") {
  Circuit c = build_u_leaf(1, {0}, {1}, {}, 2);
  CHECK(c.gates().size() == 1);
  CHECK(c.gates()[0].is_cnot());
}

TEST_CASE("u_leaf writes leaf(z) for every z at n=2") {
  const int n = 2;
  std::vector<int> node_q = {0, 1, 2};
  std::vector<int> out_q = {3, 4};
  std::vector<int> scratch = {5, 6};
  Circuit c = build_u_leaf(n, node_q, out_q, scratch, 7);
  for (uint64_t z = 0; z < 8; ++z) {
    LeafAssignment za;
    za.n = n;
    za.z = {static_cast<uint8_t>(z & 1), static_cast<uint8_t>((z >> 1) & 1),
            static_cast<uint8_t>((z >> 2) & 1)};
    const uint64_t leaf = leaf_function(za);
    StateVector out = run(c, StateVector::basis(7, z));
    const uint64_t want = z | (leaf << 3);
    CHECK(std::abs(out.amplitude(want) - Complex{1, 0}) < 1e-10);
    CHECK(verify_ancilla_restored(c, StateVector::basis(7, z)));
  }
}

TEST_CASE("u_leaf XORs into a dirty output register at n=3") {
  const int n = 3;
  std::vector<int> node_q = {0, 1, 2, 3, 4, 5, 6};
  std::vector<int> out_q = {7, 8, 9};
  std::vector<int> scratch = {10, 11, 12, 13, 14, 15};
  Circuit c = build_u_leaf(n, node_q, out_q, scratch, 16);
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const uint64_t z = rng() & 0x7F;
    const uint64_t a = rng() & 0x7;
    LeafAssignment za;
    za.n = n;
    za.z.resize(7);
    for (int i = 0; i < 7; ++i) za.z[i] = (z >> i) & 1;
    const uint64_t leaf = leaf_function(za);
    StateVector out = run(c, StateVector::basis(16, z | (a << 7)));
    const uint64_t want = z | ((a ^ leaf) << 7);
    CHECK(std::abs(out.amplitude(want) - Complex{1, 0}) < 1e-10);
  }
}

TEST_CASE("gamma maps the n=1 register to a path copy") {
  RosenthalPlan plan = make_rosenthal_plan(1);
  Rng rng(10);
  std::vector<Complex> v = random_state(2, rng);
  Circuit gamma = adjoint(build_gamma_dagger(v, plan));
  // Gamma: |t>|0> -> |t>|t> on (S, R_eps).
  for (uint64_t t = 0; t < 2; ++t) {
    StateVector out = run(gamma, StateVector::basis(plan.total_qubits, t));
    const uint64_t want = t | (t << 1);
    CHECK(std::abs(out.amplitude(want) - Complex{1, 0}) < 1e-9);
  }
}

TEST_CASE("gamma matches the register map built from phi_x at n=2") {
  const int n = 2;
  RosenthalPlan plan = make_rosenthal_plan(n);
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Complex> v = random_state(4, rng);
    const AmplitudeTree tree = amplitude_tree(v);
    Circuit gamma = adjoint(build_gamma_dagger(v, plan));
    for (uint64_t t = 0; t < 4; ++t) {
      StateVector out = run(gamma, StateVector::basis(plan.total_qubits, t));
      // Direct construction of the right side of the register map.
      std::vector<Complex> want(size_t{1} << plan.total_qubits,
                                Complex{0, 0});
      // R nodes: heap 0 = eps, 1 = "0", 2 = "1".
      std::array<Complex, 2> r_eps, r_0, r_1;
      auto phi = [&](int level, uint64_t word) {
        return std::array<Complex, 2>{tree.beta0(level, word),
                                      tree.beta1(level, word)};
      };
      auto basis_bit = [&](uint64_t b) {
        return std::array<Complex, 2>{b == 0 ? Complex{1, 0} : Complex{0, 0},
                                      b == 1 ? Complex{1, 0} : Complex{0, 0}};
      };
      const uint64_t t1 = t & 1, t2 = (t >> 1) & 1;
      r_eps = basis_bit(t1);              // eps = t_<1 always
      r_0 = (t1 == 0) ? basis_bit(t2) : phi(1, 0);
      r_1 = (t1 == 1) ? basis_bit(t2) : phi(1, 1);
      for (uint64_t b_eps = 0; b_eps < 2; ++b_eps) {
        for (uint64_t b0 = 0; b0 < 2; ++b0) {
          for (uint64_t b1 = 0; b1 < 2; ++b1) {
            const Complex amp = r_eps[b_eps] * r_0[b0] * r_1[b1];
            if (std::abs(amp) == 0.0) continue;
            uint64_t idx = t;
            idx |= b_eps << plan.r_qubit[0];
            idx |= b0 << plan.r_qubit[1];
            idx |= b1 << plan.r_qubit[2];
            want[idx] = amp;
          }
        }
      }
      double worst = 0;
      for (size_t i = 0; i < want.size(); ++i) {
        worst = std::max(worst, std::abs(want[i] - out.amplitudes()[i]));
      }
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("gamma composed with its adjoint is the identity at n=2") {
  RosenthalPlan plan = make_rosenthal_plan(2);
  Rng rng(12);
  std::vector<Complex> v = random_state(4, rng);
  Circuit gd = build_gamma_dagger(v, plan);
  Circuit round = compose(adjoint(gd), gd);
  StateVector in(plan.total_qubits,
                 random_state(size_t{1} << plan.total_qubits, rng));
  CHECK(test::state_diff(run(round, in), in) < 1e-9);
}

TEST_CASE("tree pipeline prepares states at n=1 and n=2") {
  Rng rng(13);
  for (int n = 1; n <= 2; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Complex> v = random_state(size_t{1} << n, rng);
      Circuit c = build_qsp_rosenthal(v, rosenthal_required_ancillas(n));
      CHECK(prep_fidelity(c, v) >= 1 - 1e-9);
      CHECK(verify_ancilla_restored(c,
                                    StateVector::zero(c.num_qubits())));
    }
  }
}

TEST_CASE("tree pipeline on a basis state restores everything") {
  std::vector<Complex> v(4, Complex{0, 0});
  v[0] = 1;
  Circuit c = build_qsp_rosenthal(v, rosenthal_required_ancillas(2));
  StateVector out = run(c, StateVector::zero(c.num_qubits()));
  CHECK(std::abs(out.amplitude(0) - Complex{1, 0}) < 1e-9);
}

TEST_CASE("five layers are depth one and the C circuits state-independent") {
  const int n = 2;
  RosenthalPlan plan = make_rosenthal_plan(n);
  Rng rng(14);
  std::vector<Complex> v = random_state(4, rng);
  std::vector<Complex> w = random_state(4, rng);
  const auto lv = plan.layers(v);
  for (const auto &layer : lv) {
    Circuit lc = layer_to_circuit(layer, plan.total_qubits);
    CHECK(depth(lc) == 1);
    for (const Gate &g : lc.gates()) CHECK_FALSE(g.is_cnot());
  }
  // Byte-identical C circuits across targets.
  RosenthalPlan again = make_rosenthal_plan(n);
  CHECK(circuit_to_json(plan.c1_prime) == circuit_to_json(again.c1_prime));
  CHECK(circuit_to_json(plan.c1_second) == circuit_to_json(again.c1_second));
  CHECK(circuit_to_json(plan.c2) == circuit_to_json(again.c2));
  CHECK(circuit_to_json(plan.c3) == circuit_to_json(again.c3));
  CHECK(circuit_to_json(plan.c4) == circuit_to_json(again.c4));
  CHECK(circuit_to_json(plan.c5) == circuit_to_json(again.c5));
  // Only the L layers differ between targets.
  const auto lw = plan.layers(w);
  bool differs = false;
  for (int r = 0; r < 5; ++r) {
    for (size_t i = 0; i < lv[r].gates.size(); ++i) {
      CHECK(lv[r].gates[i].first == lw[r].gates[i].first);
      if ((lv[r].gates[i].second - lw[r].gates[i].second)
              .cwiseAbs()
              .maxCoeff() > 1e-12) {
        differs = true;
      }
    }
  }
  CHECK(differs);
  // C2 and C3 are pure parallel-CNOT layers.
  for (const Gate &g : plan.c2.gates()) CHECK(g.is_cnot());
  for (const Gate &g : plan.c3.gates()) CHECK(g.is_cnot());
  CHECK(depth(plan.c2) == 1);
}

TEST_CASE("cascade and tree pipeline agree at n=2") {
  Rng rng(15);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Complex> v = random_state(4, rng);
    Circuit a = build_qsp_cascade(v);
    Circuit b = build_qsp_rosenthal(v, rosenthal_required_ancillas(2));
    StateVector sa = run(a, StateVector::zero(a.num_qubits()));
    StateVector sb = run(b, StateVector::zero(b.num_qubits()));
    // Compare on the main register.
    double f = 0;
    Complex ip{0, 0};
    for (uint64_t i = 0; i < 4; ++i) {
      ip += std::conj(sa.amplitude(i)) * sb.amplitude(i);
    }
    f = std::abs(ip);
    CHECK(f >= 1 - 1e-8);
  }
}

TEST_CASE("plan layer constant matches the closed form used by dispatch") {
  for (int n = 1; n <= 4; ++n) {
    RosenthalPlan plan = make_rosenthal_plan(n);
    CHECK(plan.layer_constant ==
          doctest::Approx(rosenthal_layer_constant(n)).epsilon(1e-12));
  }
}

TEST_CASE("qsp auto dispatch follows the budget") {
  Rng rng(16);
  std::vector<Complex> v = random_state(4, rng);
  CHECK(build_qsp(v, 0).method == "cascade");
  CHECK(build_qsp(v, rosenthal_required_ancillas(2)).method == "rosenthal");
  CHECK_THROWS_AS(build_qsp(v, 1, QspMethod::Rosenthal),
                  std::invalid_argument);
}
