#include <doctest.h>

#include "nslat/characteristic.hpp"
#include "nslat/errors.hpp"
#include "nslat/trigonal.hpp"
#include "support/generators.hpp"

using namespace nslat;
using nslat::testing::Rng;

TEST_CASE("characteristic examples") {
  CHECK(is_characteristic(GramLattice::diagonal({1, -1}), make_vector({1, 1})));
  CHECK(is_characteristic(hyperbolic_plane(), make_vector({0, 0})));
  CHECK(is_characteristic(odd_unimodular(1, 3), make_vector({3, 1, 1, 1})));
  CHECK_FALSE(is_characteristic(odd_unimodular(1, 3), make_vector({3, 1, 1, 0})));
  CHECK_THROWS_AS(find_characteristic(GramLattice::diagonal({2})), NotUnimodular);
}

TEST_CASE("van der Blij examples") {
  CHECK(van_der_blij_check(GramLattice::diagonal({1, -1}), make_vector({1, 1})));
  CHECK(van_der_blij_check(GramLattice::diagonal({1}), make_vector({3})));
  CHECK(van_der_blij_check(hyperbolic_plane(), make_vector({2, 2})));
  CHECK_THROWS_AS(van_der_blij_check(hyperbolic_plane(), make_vector({1, 0})), PreconditionViolation);
}

TEST_CASE("reflections") {
  GramLattice l = odd_unimodular(1, 3);
  const Vector v = make_vector({1, 1, 1, 1});
  const Vector x = make_vector({5, 3, 3, 1});
  CHECK(reflect(l, v, x) == make_vector({3, 1, 1, -1}));
  CHECK(reflect(l, v, reflect(l, v, x)) == x);
  CHECK(reflect(l, unit_vector(4, 2), x) == make_vector({5, 3, -3, 1}));
  // 2 b(x,v) / b(v,v) = 2/3.
  CHECK_THROWS_AS(reflect(GramLattice(Matrix{{3, 1}, {1, 1}}), make_vector({1, 0}), make_vector({0, 1})),
                  PreconditionViolation);
}

TEST_CASE("property: reflections preserve norm and characteristic vectors") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.index(7) + 2;
    GramLattice l = odd_unimodular(1, n - 1);
    Vector v(n), x(n);
    for (auto& c : v) c = rng.uniform(-2, 2);
    if (l.norm(v) == 0) continue;
    Integer nv = l.norm(v);
    if (nv != 1 && nv != -1 && nv != 2 && nv != -2) continue;
    for (auto& c : x) c = 2 * rng.uniform(-4, 4) + 1;
    Vector y = reflect(l, v, x);
    CHECK(l.norm(y) == l.norm(x));
    CHECK(is_characteristic(l, y));
    CHECK(reflect(l, v, y) == x);
  }
}

TEST_CASE("normalisation examples") {
  CHECK(normalize_claim1(make_vector({5, 3, 3, 1})).normalized == make_vector({3, 1, 1, 1}));
  CHECK(normalize_claim1(make_vector({-7})).normalized == make_vector({7}));
  Vector c = canonical_characteristic(10);
  Claim1Result r = normalize_claim1(c);
  CHECK(r.normalized == c);
  CHECK_THROWS_AS(normalize_claim1(make_vector({1, 2})), PreconditionViolation);
}

TEST_CASE("property: normalisation transcript") {
  Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.index(9) + 1;
    GramLattice l = odd_unimodular(1, n - 1);
    Vector x(n);
    for (auto& c : x) c = rng.uniform(-9, 9);
    if (l.norm(x) < 0) continue;
    Claim1Result r = normalize_claim1(x);
    CHECK(r.isometry * x == r.normalized);
    CHECK(change_basis(l, BasisChange(r.isometry)) == l);
    Vector cur = x;
    for (const auto& step : r.transcript) {
      CHECK(l.norm(step.value) == l.norm(x));
      if (step.kind == "reflect") {
        CHECK(abs(step.value[0]) < abs(cur[0]));
      }
      cur = step.value;
    }
    const Vector& y = r.normalized;
    for (std::size_t i = 0; i < n; ++i) CHECK(y[i] >= 0);
    for (std::size_t i = 2; i < n; ++i) CHECK(y[i] <= y[i - 1]);
    if (n >= 4) CHECK(y[1] + y[2] + y[3] <= y[0]);
    if (n == 3) CHECK(y[1] + y[2] <= y[0]);
  }
}

TEST_CASE("canonical characteristic") {
  CHECK(canonical_characteristic(1) == make_vector({3}));
  CHECK(odd_unimodular(1, 0).norm(canonical_characteristic(1)) == 9);
  CHECK(odd_unimodular(1, 3).norm(canonical_characteristic(4)) == 6);
  CHECK(odd_unimodular(1, 9).norm(canonical_characteristic(10)) == 0);
  CHECK(is_primitive(canonical_characteristic(10)));
}

TEST_CASE("main equivalence examples") {
  EquivalenceResult p2 = main_equivalence(GramLattice::diagonal({1}), make_vector({-3}));
  CHECK(p2.holds);
  CHECK(p2.which == EquivalenceCase::Rank1);
  EquivalenceResult u = main_equivalence(hyperbolic_plane(), make_vector({-2, -2}));
  CHECK(u.holds);
  CHECK(u.which == EquivalenceCase::Hyperbolic);
  EquivalenceResult en = main_equivalence(odd_unimodular(1, 9), zero_vector(10));
  CHECK_FALSE(en.holds);
  CHECK_THROWS_AS(main_equivalence(odd_unimodular(2, 1), make_vector({1, 1, 1})), SignatureOutOfScope);
}

TEST_CASE("property: diagonalisation of scrambled odd lattices") {
  Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.index(10) + 1;
    GramLattice l = change_basis(odd_unimodular(1, n - 1), testing::random_unimodular(n, rng, 3 * static_cast<int>(n)));
    BasisChange d = diagonalize_odd_hyperbolic(l);
    CHECK(change_basis(l, d) == odd_unimodular(1, n - 1));
  }
}

TEST_CASE("property: hyperbolic bases of scrambled U") {
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    GramLattice l = change_basis(hyperbolic_plane(), testing::random_unimodular(2, rng, 20));
    CHECK(change_basis(l, hyperbolic_basis(l)) == hyperbolic_plane());
  }
}

TEST_CASE("property: witness bases make omega special") {
  Rng rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.index(10) + 1;
    SurfaceData base = testing::admitting_model(n, rng);
    BasisChange m = testing::random_unimodular(n, rng, 3 * static_cast<int>(n));
    GramLattice l = change_basis(base.ns, m);
    Vector w = m.to_new(base.K);
    EquivalenceResult r = main_equivalence(l, w);
    REQUIRE(r.holds);
    REQUIRE(r.basis);
    CHECK(is_special(l, w, r.basis->columns()));
  }
}

TEST_CASE("above rank ten the decision carries no basis") {
  Vector w(11, Integer(1));
  w[0] = 3;
  // (3,1,...,1) has norm 9 - 10 = -1 = 10 - 11.
  EquivalenceResult r = main_equivalence(odd_unimodular(1, 10), w);
  CHECK(r.holds);
  CHECK_FALSE(r.basis);
}
