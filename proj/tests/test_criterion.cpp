#include <doctest.h>

#include "nslat/characteristic.hpp"
#include "nslat/criterion.hpp"
#include "nslat/errors.hpp"
#include "support/generators.hpp"

using namespace nslat;
using nslat::testing::Rng;

namespace {

SurfaceData enriques() { return {direct_sum(hyperbolic_plane(), e8(true)), zero_vector(10), 1}; }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("criterion examples") {
  CriterionResult p2 = criterion(testing::p2());
  CHECK(p2.admits);
  CHECK(p2.which == CriterionCase::Rank1);
  CriterionResult sigma = criterion(testing::hirzebruch());
  CHECK(sigma.admits);
  CHECK(sigma.which == CriterionCase::Hyperbolic);
  // K^2 = 8 for the Hirzebruch surfaces.
  CHECK(testing::hirzebruch().ns.norm(testing::hirzebruch().K) == 8);
  CriterionResult en = criterion(enriques());
  CHECK_FALSE(en.admits);
  CHECK_FALSE(en.obstruction);
}

TEST_CASE("criterion obstructions") {
  SurfaceData nonuni{GramLattice::diagonal({1, -2}), make_vector({-3, 0}), 1};
  CHECK(criterion(nonuni).obstruction == Obstruction::NotUnimodular);
  SurfaceData sig{odd_unimodular(2, 1), make_vector({1, 1, 1}), 1};
  CHECK(criterion(sig).obstruction == Obstruction::WrongSignature);
  SurfaceData notchar{odd_unimodular(1, 1), make_vector({-2, 1}), 1};
  CHECK(criterion(notchar).obstruction == Obstruction::NotCharacteristic);
  SurfaceData chi2 = testing::p2();
  chi2.chiO = 2;
  CHECK_THROWS_AS(criterion(chi2), PreconditionViolation);
}

TEST_CASE("property: criterion agrees with the lattice equivalence") {
  Rng rng(51);
  int admitted = 0, rejected = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = rng.index(12) + 1;
    GramLattice l = (n == 2 && rng.coin()) ? hyperbolic_plane()
                    : (n == 10 && rng.coin()) ? direct_sum(hyperbolic_plane(), e8(true))
                                            : odd_unimodular(1, n - 1);
    Vector k(n);
    // Characteristic vectors: all-odd coordinates in the odd model, even
    // ones in the even models.
    for (auto& x : k) x = l.is_even() ? 2 * rng.uniform(-2, 2) : 2 * rng.uniform(-3, 2) + 1;
    if (rng.uniform(0, 3) == 0 && !l.is_even()) {
      k = Vector(n, Integer(1));
      k[0] = -3;
    }
    BasisChange m = testing::random_unimodular(n, rng, 2 * static_cast<int>(n));
    SurfaceData s = testing::scramble({l, k, 1}, m);
    CriterionResult c = criterion(s);
    EquivalenceResult e = main_equivalence(s.ns, s.K);
    CHECK(c.admits == e.holds);
    if (c.admits) {
      ++admitted;
      CHECK(s.ns.norm(s.K) == 10 - static_cast<long>(n));
    } else {
      ++rejected;
    }
    // Invariance under a further change of basis.
    CHECK(criterion(testing::scramble(s, testing::random_unimodular(n, rng, 6))).admits == c.admits);
  }
  CHECK(admitted > 50);
  CHECK(rejected > 50);
}

TEST_CASE("witness examples") {
  WitnessResult p2 = construct_witness(testing::p2());
  REQUIRE(p2.witness);
  std::vector<Vector> c1;
  for (const auto& c : p2.witness->classes) c1.push_back(c.c1);
  CHECK(c1 == std::vector<Vector>{make_vector({0}), make_vector({1}), make_vector({2})});

  WitnessResult u = construct_witness(testing::hirzebruch());
  REQUIRE(u.witness);
  CHECK(u.witness->classes.size() == 4);
  CHECK(verify_collection(u.witness->surface, u.witness->classes).exceptional);

  // diag(1,-1) with K = (-3,1): 4 classes.
  WitnessResult odd = construct_witness(testing::blown_up_p2(2));
  REQUIRE(odd.witness);
  CHECK(odd.witness->classes.size() == 4);
  CHECK(verify_collection(odd.witness->surface, odd.witness->classes).exceptional);

  WitnessResult en = construct_witness(enriques());
  CHECK_FALSE(en.witness);
  CHECK_FALSE(en.decision.admits);

  BlowUp b = blowup(enriques().ns, enriques().K, 1);
  WitnessResult big = construct_witness({b.lattice, b.canonical, 1});
  CHECK(big.decision.admits);
  CHECK_FALSE(big.witness);
  CHECK(big.note.find("rank 10") != std::string::npos);
}

TEST_CASE("property: scrambled witnesses verify") {
  Rng rng(52);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = rng.index(10) + 1;
    SurfaceData s = testing::scramble(testing::admitting_model(n, rng),
                                      testing::random_unimodular(n, rng, 3 * static_cast<int>(n)));
    WitnessResult w = construct_witness(s);
    REQUIRE(w.witness);
    CHECK(w.witness->classes.size() == n + 2);
    CollectionCheck c = verify_collection(s, w.witness->classes);
    CHECK(c.exceptional);
    for (std::size_t i = 0; i < n + 2; ++i) CHECK(c.chi(i, i) == 1);
  }
}

TEST_CASE("necessary conditions") {
  NecessaryConditions q = necessary_conditions(GramLattice::diagonal({2}), 1, 0, 2);
  CHECK_FALSE(q.mod8);
  NecessaryConditions en = necessary_conditions(enriques().ns, 10, 0, 10);
  CHECK(en.all_hold());
  CHECK_FALSE(criterion(enriques()).admits);
  BlowUp b = blowup(testing::p2().ns, testing::p2().K, 2);
  NecessaryConditions bu = necessary_conditions(b.lattice, 2, 0, 2);
  CHECK_FALSE(bu.unimodular);
  CHECK_FALSE(bu.zero_cycle_degree_one);
  CHECK_FALSE(bu.all_hold());
}

TEST_CASE("Picard rank one arithmetic") {
  PicardRankOne p = picard_rank_one_analysis(2, ints({0, 1, 2}));
  CHECK(p.m == 0);
  CHECK(p.k == 1);
  CHECK(p.deg_hn == 1);
  CHECK(p.c1_coefficient == 3);
  PicardRankOne p1 = picard_rank_one_analysis(1, ints({0, 1}));
  CHECK(p1.c1_coefficient == 2);
  try {
    picard_rank_one_analysis(3, ints({5, 7, 9, 11}));
    FAIL("k = 2 must be rejected");
  } catch (const PreconditionViolation& e) {
    CHECK(std::string(e.what()).find("1/8") != std::string::npos);
  }
  PicardRankOne rev = picard_rank_one_analysis(2, ints({2, 1, 0}));
  CHECK(rev.k == 1);
  CHECK(rev.m == -2);
  CHECK_THROWS_AS(picard_rank_one_analysis(2, ints({0, 0, 1})), PreconditionViolation);
  CHECK_THROWS_AS(picard_rank_one_analysis(2, ints({0, 1, 5})), PreconditionViolation);
  CHECK_THROWS_AS(picard_rank_one_analysis(2, ints({0, 1})), InvalidInput);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Integer> a;
    for (std::size_t i = 0; i <= n; ++i) a.push_back(Integer(static_cast<long>(i) + 3));
    CHECK(picard_rank_one_analysis(n, a).c1_coefficient == static_cast<long>(n + 1));
  }
}
