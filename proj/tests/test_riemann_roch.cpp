#include <doctest.h>

#include "nslat/errors.hpp"
#include "nslat/riemann_roch.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace nslat;
using nslat::testing::Rng;

namespace {

NumericalClass cls(long rank, Vector c1, long c2) { return {rank, std::move(c1), c2}; }

}  // namespace

TEST_CASE("chi examples") {
  SurfaceData p2 = testing::p2();
  CHECK(chi_general(p2, NumericalClass::line(make_vector({0})), NumericalClass::line(make_vector({0}))) == 1);
  CHECK(chi_line(p2, make_vector({0})) == 1);
  CHECK(chi_line(p2, make_vector({-1})) == 0);
  CHECK(chi_line(p2, make_vector({1})) == 3);
  CHECK(chi_line(p2, make_vector({2})) == 6);
  CHECK(chi_line(testing::hirzebruch(), make_vector({-1, 0})) == 0);
}

TEST_CASE("rank-one self pairing forces c2 = 0") {
  SurfaceData s = testing::blown_up_p2(3);
  for (long c2 = -3; c2 <= 3; ++c2) {
    NumericalClass e = cls(1, make_vector({1, 2, -1}), c2);
    CHECK((chi_general(s, e, e) == 1) == (c2 == 0));
  }
}

TEST_CASE("rank-zero exceptional classes have c1^2 = -1") {
  SurfaceData s = testing::blown_up_p2(3);
  int exceptional = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long c2 = -2; c2 <= 2; ++c2) {
          NumericalClass z = cls(0, make_vector({a, b, c}), c2);
          if (chi_general(s, z, z) == 1) {
            ++exceptional;
            CHECK(s.ns.norm(z.c1) == -1);
          }
        }
  CHECK(exceptional > 0);
}

TEST_CASE("property: Riemann-Roch against the Chern character") {
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng.index(6) + 1;
    SurfaceData s = testing::scramble(testing::admitting_model(n, rng), testing::random_unimodular(n, rng, 10));
    auto random_class = [&] {
      NumericalClass c;
      c.rank = rng.uniform(-2, 3);
      c.c1 = Vector(n);
      for (auto& x : c.c1) x = rng.uniform(-4, 4);
      c.c2 = rng.uniform(-4, 4);
      return c;
    };
    NumericalClass e = random_class(), f = random_class();
    CHECK(chi_general(s, e, f) == oracle::chern_character_chi(s, e, f));
    Vector d(n);
    for (auto& x : d) x = rng.uniform(-5, 5);
    CHECK(chi_line(s, d) == chi_general(s, NumericalClass::line(zero_vector(n)), NumericalClass::line(d)));
    // Wu parity.
    CHECK((s.ns.norm(d) + s.ns.pair(s.K, d)) % 2 == 0);
  }
}

TEST_CASE("property: additivity in the second argument") {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    SurfaceData s = testing::blown_up_p2(4);
    NumericalClass e{rng.uniform(0, 2), make_vector({rng.uniform(-3, 3), rng.uniform(-3, 3), 0, 1}), rng.uniform(-2, 2)};
    NumericalClass f1{rng.uniform(0, 2), make_vector({1, rng.uniform(-3, 3), 0, 0}), rng.uniform(-2, 2)};
    NumericalClass f2{rng.uniform(0, 2), make_vector({0, 1, rng.uniform(-3, 3), 0}), rng.uniform(-2, 2)};
    // Chern data of F1 + F2: c2 = c2(F1) + c2(F2) + c1(F1).c1(F2).
    NumericalClass sum{f1.rank + f2.rank, f1.c1 + f2.c1, f1.c2 + f2.c2 + s.ns.pair(f1.c1, f2.c1)};
    try {
      CHECK(chi_general(s, e, sum) == chi_general(s, e, f1) + chi_general(s, e, f2));
    } catch (const ParityError&) {
      // Not every random Chern datum is realisable.
    }
  }
}

TEST_CASE("parity failures are typed") {
  SurfaceData bad{GramLattice::diagonal({1}), make_vector({0}), 1};
  CHECK_THROWS_AS(chi_line(bad, make_vector({1})), ParityError);
  SurfaceData chi2{GramLattice::diagonal({1}), make_vector({-3}), 2};
  CHECK_THROWS_AS(chi_line(chi2, make_vector({1})), PreconditionViolation);
  CHECK_THROWS_AS(chi_line(testing::p2(), make_vector({1, 1})), DimensionMismatch);
}

TEST_CASE("collections and divisor chains") {
  SurfaceData p2 = testing::p2();
  std::vector<NumericalClass> beilinson{NumericalClass::line(make_vector({0})), NumericalClass::line(make_vector({1})),
                                        NumericalClass::line(make_vector({2}))};
  CollectionCheck c = verify_collection(p2, beilinson);
  CHECK(c.exceptional);
  DivisorChain d = collection_to_trigonal(p2, beilinson);
  CHECK(d.divisors == std::vector<Vector>{make_vector({1}), make_vector({1})});
  CHECK(d.form == TrigonalForm::of({1, 1}));
  CHECK(trigonal_to_collection(p2, d.divisors) == beilinson);

  SurfaceData u = testing::hirzebruch();
  std::vector<NumericalClass> sigma{NumericalClass::line(make_vector({0, 0})), NumericalClass::line(make_vector({1, 0})),
                                    NumericalClass::line(make_vector({0, 1})), NumericalClass::line(make_vector({1, 1}))};
  CHECK(verify_collection(u, sigma).exceptional);
  CHECK(collection_to_trigonal(u, sigma).form == TrigonalForm::of({0, -2, 0}));

  std::vector<NumericalClass> wrong{NumericalClass::line(make_vector({1})), NumericalClass::line(make_vector({0}))};
  CollectionCheck w = verify_collection(p2, wrong);
  CHECK_FALSE(w.exceptional);
  REQUIRE(w.failure);
  CHECK(w.failure->first == 1);
  CHECK(w.failure->second == 0);
  CHECK_THROWS_AS(collection_to_trigonal(p2, wrong), PreconditionViolation);

  CHECK(trigonal_to_collection(p2, {}) == std::vector<NumericalClass>{NumericalClass::line(make_vector({0}))});
}

TEST_CASE("canonical divisor family on blown-up planes") {
  for (std::size_t n = 2; n <= 10; ++n) {
    SurfaceData s = testing::blown_up_p2(n);
    // D_i = f_{i+1} for i < n, D_n = f_1 and D_{n+1} = 2 D_n.
    std::vector<Vector> d;
    for (std::size_t i = 1; i < n; ++i) d.push_back(unit_vector(n, i));
    d.push_back(unit_vector(n, 0));
    Vector k = -3 * d[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i) k = k + d[i];
    CHECK(k == s.K);
    // The collection (O, O(D_1), ..., O(D_n), O(2 D_n)).
    std::vector<NumericalClass> classes{NumericalClass::line(zero_vector(n))};
    for (const auto& v : d) classes.push_back(NumericalClass::line(v));
    classes.push_back(NumericalClass::line(2 * d[n - 1]));
    CHECK(classes.size() == n + 2);
    CHECK(verify_collection(s, classes).exceptional);
    DivisorChain chain = collection_to_trigonal(s, classes);
    CHECK(trigonal_to_collection(s, chain.divisors) == classes);
  }
}

TEST_CASE("trigonal_to_collection names failures") {
  SurfaceData p2 = testing::p2();
  CHECK_THROWS_AS(trigonal_to_collection(p2, {make_vector({1}), make_vector({2})}), PreconditionViolation);
  try {
    trigonal_to_collection(p2, {make_vector({3})});
    FAIL("expected failure");
  } catch (const PreconditionViolation& e) {
    CHECK(std::string(e.what()).find("D_1") != std::string::npos);
  }
}

TEST_CASE("mixed rank relations") {
  SurfaceData s = testing::blown_up_p2(3);
  // Z = O_E(-1)-like class: rank 0, c1 = E, with chi(Z,Z) = 1.
  NumericalClass z{0, make_vector({0, 1, 0}), 0};
  NumericalClass z2{0, make_vector({0, 0, 1}), 0};
  MixedRankRelations r = mixed_rank_relations(s, z, z2);
  CHECK(r.z_exceptional);
  CHECK(r.z_norm_minus_one);
  REQUIRE(r.rank_zero_orthogonal);
  CHECK(*r.rank_zero_orthogonal);

  Rng rng(43);
  int seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    NumericalClass zz{0, make_vector({rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)}), rng.uniform(-2, 2)};
    NumericalClass f{rng.uniform(1, 2), make_vector({rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)}),
                     rng.uniform(-2, 2)};
    MixedRankRelations m;
    try {
      m = mixed_rank_relations(s, zz, f);
    } catch (const ParityError&) {
      continue;
    }
    CHECK(m.z_exceptional == (m.chi_zz == 1));
    if (m.z_exceptional) CHECK(m.z_norm_minus_one);
    // chi(F,Z) = 0 with Z exceptional forces the displayed identity.
    if (m.z_exceptional && m.chi_fz == 0) {
      ++seen;
      CHECK(m.displayed_identity);
    }
  }
  CHECK(seen > 0);
  CHECK_THROWS_AS(mixed_rank_relations(s, NumericalClass::line(zero_vector(3)), z), InvalidInput);
}
