#include <doctest.h>

#include "qcs/io.hpp"
#include "qcs/linalg.hpp"
#include "qcs/random.hpp"
#include "test_helpers.hpp"

using namespace qcs;

TEST_CASE("circuit json round trip preserves gates and ancillas") {
  Rng rng(1);
  Circuit c(3);
  c.mark_ancilla(2);
  c.add_1q(0, Mat2(haar_unitary(2, rng)));
  c.add_cx(0, 1);
  c.add_1q(2, x_matrix());
  Circuit back = circuit_from_json(circuit_to_json(c));
  CHECK(back.num_qubits() == 3);
  CHECK(back.ancillas() == c.ancillas());
  REQUIRE(back.gates().size() == c.gates().size());
  for (size_t i = 0; i < c.gates().size(); ++i) {
    CHECK(back.gates()[i].kind == c.gates()[i].kind);
    CHECK(back.gates()[i].target == c.gates()[i].target);
    if (!c.gates()[i].is_cnot()) {
      CHECK((back.gates()[i].matrix - c.gates()[i].matrix)
                .cwiseAbs()
                .maxCoeff() < 1e-15);
    }
  }
}

TEST_CASE("statevector json round trip") {
  Rng rng(2);
  StateVector s(3, random_state(8, rng));
  StateVector back = statevector_from_json(statevector_to_json(s));
  CHECK(test::state_diff(s, back) < 1e-15);
}

TEST_CASE("unitary json round trip") {
  Rng rng(3);
  Mat u = haar_unitary(8, rng);
  Mat back = unitary_from_json(unitary_to_json(u));
  CHECK(test::max_abs_diff(u, back) < 1e-15);
}

TEST_CASE("ucu spec json round trip") {
  Rng rng(4);
  UcuSpec spec;
  spec.controls = {0, 2};
  spec.targets = {1};
  for (int x = 0; x < 4; ++x) spec.table.push_back(haar_unitary(2, rng));
  UcuSpec back = ucu_spec_from_json(ucu_spec_to_json(spec));
  CHECK(back.controls == spec.controls);
  CHECK(back.targets == spec.targets);
  for (int x = 0; x < 4; ++x) {
    CHECK(test::max_abs_diff(back.table[x], spec.table[x]) < 1e-15);
  }
}

TEST_CASE("cqsp spec json round trip") {
  Rng rng(5);
  CqspSpec spec;
  spec.k = 1;
  spec.n = 2;
  spec.states = {random_state(4, rng), random_state(4, rng)};
  CqspSpec back = cqsp_spec_from_json(cqsp_spec_to_json(spec));
  CHECK(back.k == 1);
  CHECK(back.n == 2);
  for (int i = 0; i < 2; ++i) {
    for (int p = 0; p < 4; ++p) {
      CHECK(std::abs(back.states[i][p] - spec.states[i][p]) < 1e-15);
    }
  }
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(circuit_from_json("{oops"), std::invalid_argument);
  CHECK_THROWS_AS(statevector_from_json("{\"num_qubits\":2,\"amplitudes\":[]}"),
                  std::invalid_argument);
}
