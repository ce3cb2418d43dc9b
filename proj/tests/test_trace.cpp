#include <doctest.h>

#include <random>

#include "btinv/relations.hpp"
#include "btinv/trace.hpp"
#include "support/oracles.hpp"

using namespace btinv;
using oracle::A;
using oracle::B;
using oracle::one;
using oracle::U;
using oracle::V;

TEST_SUITE("trace") {
  TEST_CASE("small values") {
    TraceEngine engine;
    const Algebra& alg = engine.algebra();
    const Elem id = Elem::one(2);
    const Elem r1 = alg.mul_R(id, 1), e1 = alg.mul_E(id, 1);
    CHECK(engine.trace(Elem::one(1)) == one());
    CHECK(engine.trace(id) == one());
    CHECK(engine.trace(r1) == A());
    CHECK(engine.trace(e1) == B());
    CHECK(engine.trace(alg.mul_R(e1, 1)) == A());
    CHECK(engine.trace(alg.mul_R(r1, 1)) == one() + (U() - one()) * B() + (V() - one()) * A());
    const Elem r1_cubed = alg.mul_R(alg.mul_R(r1, 1), 1);
    const Frac w = V() - one();
    CHECK(engine.trace(r1_cubed) == A() * (U() + w * w) + U() * w * B());
    CHECK(engine.trace(Elem(2)) == Frac());
  }

  TEST_CASE("inverse generator") {
    TraceEngine engine;
    const Elem r1_inv = engine.algebra().mul_R(Elem::one(2), 1, -1);
    // rho(R^-1) = a + (1-v)b/u + (1/u - 1)a = a c
    CHECK(engine.trace(r1_inv) == A() * oracle::c_generic());
  }

  TEST_CASE("three strands") {
    TraceEngine engine;
    const Algebra& alg = engine.algebra();
    const Elem id = Elem::one(3);
    CHECK(engine.trace(alg.mul_E(alg.mul_E(id, 1), 2)) == B() * B());
    CHECK(engine.trace(alg.mul_R(alg.mul_R(id, 1), 2)) == A() * A());
    // E_{1,3} is conjugate to E_1
    CHECK(engine.trace(alg.mul_tie_pair(id, 0, 2)) == B());
  }

  TEST_CASE("rules on random elements") {
    TraceEngine engine;
    const Algebra& alg = engine.algebra();
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
      const int n = 2 + t % 3;
      Elem x = random_element(n, rng), y = random_element(n, rng);
      REQUIRE(engine.trace(alg.mul(x, y)) == engine.trace(alg.mul(y, x)));
      const Frac rx = engine.trace(x);
      Elem up = x.extended(n + 1);
      REQUIRE(engine.trace(alg.mul_R(up, n)) == A() * rx);
      REQUIRE(engine.trace(alg.mul_E(alg.mul_R(up, n), n)) == A() * rx);
      REQUIRE(engine.trace(alg.mul_E(up, n)) == B() * rx);
    }
  }

  TEST_CASE("partner choice does not matter") {
    TraceEngine largest(generic_algebra(), A(), B(), TiePartner::largest);
    TraceEngine smallest(generic_algebra(), A(), B(), TiePartner::smallest);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 150; ++t) {
      Elem x = random_element(2 + t % 4, rng, 4);
      REQUIRE(largest.trace(x) == smallest.trace(x));
    }
  }

  TEST_CASE("memo is reused") {
    TraceEngine engine;
    Elem x = engine.algebra().mul_R(engine.algebra().mul_R(Elem::one(3), 1), 2);
    engine.trace(x);
    const std::size_t size = engine.memo_size();
    CHECK(size > 0);
    engine.trace(x);
    CHECK(engine.memo_size() == size);
  }
}
