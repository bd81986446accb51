#include <doctest.h>

#include "qcs/circuit.hpp"
#include "qcs/linalg.hpp"
#include "qcs/random.hpp"
#include "qcs/statevector.hpp"
#include "test_helpers.hpp"

using namespace qcs;

TEST_CASE("append and depth on small circuits") {
  Circuit c(2);
  c.add_cx(0, 1);
  CHECK(c.gates().size() == 1);
  CHECK(depth(c) == 1);

  Circuit p(2);
  p.add_1q(0, h_matrix());
  p.add_1q(1, h_matrix());
  CHECK(depth(p) == 1);  // disjoint supports share a layer

  Circuit s(3);
  s.add_cx(0, 1);
  s.add_cx(1, 2);
  CHECK(depth(s) == 2);  // shared qubit forces serialization
}

TEST_CASE("depth of empty and parallel circuits") {
  CHECK(depth(Circuit(4)) == 0);
  Circuit c(6);
  c.add_cx(0, 1);
  c.add_cx(2, 3);
  c.add_cx(4, 5);
  CHECK(depth(c) == 1);
}

TEST_CASE("gate validation") {
  Circuit c(2);
  Mat2 bad;
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(c.add_1q(0, bad), std::invalid_argument);
  CHECK_THROWS_AS(c.add_cx(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(c.add_cx(0, 5), std::invalid_argument);
}

TEST_CASE("compose with adjoint gives the identity map") {
  Rng rng(42);
  Circuit c(4);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int i = 0; i < 50; ++i) {
    if (i % 3 == 0) {
      int a = pick(rng), b = pick(rng);
      if (a == b) b = (b + 1) % 4;
      c.add_cx(a, b);
    } else {
      c.add_1q(pick(rng), Mat2(haar_unitary(2, rng)));
    }
  }
  Circuit round = compose(c, adjoint(c));
  StateVector in(4, random_state(16, rng));
  StateVector out = run(round, in);
  CHECK(test::state_diff(in, out) < 1e-10);
}

TEST_CASE("adjoint of CNOT is CNOT and adjoint is an involution") {
  Rng rng(7);
  Circuit c(3);
  c.add_cx(0, 1);
  c.add_1q(2, Mat2(haar_unitary(2, rng)));
  c.add_cx(2, 0);
  Circuit cc = adjoint(adjoint(c));
  REQUIRE(cc.gates().size() == c.gates().size());
  for (size_t i = 0; i < c.gates().size(); ++i) {
    CHECK(c.gates()[i].kind == cc.gates()[i].kind);
    CHECK(c.gates()[i].target == cc.gates()[i].target);
    if (!c.gates()[i].is_cnot()) {
      CHECK((c.gates()[i].matrix - cc.gates()[i].matrix).cwiseAbs().maxCoeff()
            < 1e-15);
    }
  }
  Circuit sole(2);
  sole.add_cx(0, 1);
  Circuit adj = adjoint(sole);
  CHECK(adj.gates()[0].is_cnot());
  CHECK(adj.gates()[0].control == 0);
  CHECK(adj.gates()[0].target == 1);
}

TEST_CASE("remap by identity is bit-identical, depth invariant under remap") {
  Rng rng(3);
  Circuit c(3);
  c.add_1q(0, Mat2(haar_unitary(2, rng)));
  c.add_cx(0, 2);
  c.add_cx(2, 1);
  CHECK(remap(c, {0, 1, 2}) == c);
  Circuit r = remap(c, {2, 0, 1});
  CHECK(depth(r) == depth(c));
  CHECK_THROWS_AS(remap(c, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("compose metrics bounds") {
  Rng rng(11);
  Circuit a(3), b(3);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int i = 0; i < 20; ++i) {
    a.add_1q(pick(rng), Mat2(haar_unitary(2, rng)));
    b.add_1q(pick(rng), Mat2(haar_unitary(2, rng)));
  }
  Circuit ab = compose(a, b);
  CHECK(metrics(ab).size == metrics(a).size + metrics(b).size);
  CHECK(depth(ab) <= depth(a) + depth(b));
}

TEST_CASE("metrics invariants") {
  Circuit c(3);
  c.mark_ancilla(2);
  c.add_cx(0, 1);
  c.add_1q(2, x_matrix());
  Metrics m = metrics(c);
  CHECK(m.size == 2);
  CHECK(m.cnot_count == 1);
  CHECK(m.ancilla_count == 1);
  CHECK(m.depth <= m.size);
}
