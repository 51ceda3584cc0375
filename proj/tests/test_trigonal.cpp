#include <doctest.h>

#include <numeric>

#include "nslat/errors.hpp"
#include "nslat/trigonal.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace nslat;
using nslat::testing::Rng;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Coordinates (-3, 1, ..., 1) of omega in diag(1,-1,...,-1).
Vector canonical_in_diagonal(std::size_t n) {
  Vector w(n, Integer(1));
  w[0] = -3;
  return w;
}

void check_special_reduction(const SpecialPair& s, const SpecialReduction& red) {
  const std::size_t n = s.rank();
  SpecialPair after = s.with_basis(red.basis);  // throws unless omega is still special
  Vector w = after.omega_in_basis();
  if (red.kind == CanonicalKind::Hyperbolic) {
    CHECK(w == make_vector({-2, -2}));
  } else {
    // b(omega, e_1) = -3 and b(omega, e_i) = -1 for the diagonal forms.
    for (std::size_t i = 0; i < n; ++i) {
      Integer want = (i == 0 && red.kind == CanonicalKind::OddDiagonal) ? -3 : -1;
      CHECK(s.lattice().pair(s.omega(), red.basis.column(i)) == want);
    }
    if (red.kind == CanonicalKind::OddDiagonal) CHECK(w == canonical_in_diagonal(n));
  }
}

}  // namespace

TEST_CASE("determinant recurrence examples") {
  CHECK(trig_determinants(ints({0, 0})) == ints({1, 0, -1}));
  CHECK(trig_determinants(ints({1, 3, 1})) == ints({1, 1, 2, 1}));
  CHECK(trig_determinants(std::vector<Integer>{}) == ints({1}));
}

TEST_CASE("property: recurrence matches expansion and gcds are stable") {
  Rng rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = rng.index(8) + 1;
    std::vector<Integer> a(n);
    for (auto& x : a) x = rng.uniform(-5, 5);
    auto d = trig_determinants(a);
    CHECK(d.back() == TrigonalForm{a}.lattice().determinant());
    if (n <= 6) CHECK(d.back() == oracle::leibniz_det(TrigonalForm{a}.matrix()));
    for (std::size_t m = 2; m < d.size(); ++m) CHECK(gcd(d[m], d[m - 1]) == gcd(d[m - 1], d[m - 2]));
  }
}

TEST_CASE("trigonal recognition") {
  CHECK(as_trigonal(TrigonalForm::of({1, 3, 1}).matrix()) == TrigonalForm::of({1, 3, 1}));
  CHECK_FALSE(as_trigonal(Matrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  CHECK(to_string(TrigonalForm::of({-2, 0})) == "[-2,0]");
}

TEST_CASE("trigonal families") {
  // A triple in diag(1,-1) found by brute force over [-3,3]^2.
  GramLattice l = GramLattice::diagonal({1, -1});
  std::vector<Vector> found;
  for (long a = -3; a <= 3 && found.empty(); ++a)
    for (long b = -3; b <= 3 && found.empty(); ++b)
      for (long c = -3; c <= 3 && found.empty(); ++c)
        for (long d = -3; d <= 3 && found.empty(); ++d)
          for (long e = -3; e <= 3 && found.empty(); ++e)
            for (long f = -3; f <= 3 && found.empty(); ++f) {
              std::vector<Vector> v{make_vector({a, b}), make_vector({c, d}), make_vector({e, f})};
              if (check_trigonal_family(l, v).trigonal) found = v;
            }
  REQUIRE_FALSE(found.empty());
  TrigonalFamilyReport r = check_trigonal_family(l, found);
  CHECK(r.lattice_unimodular);
  CHECK(r.first_n_form_a_basis);

  std::vector<Vector> bad{make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1})};
  CHECK_FALSE(check_trigonal_family(l, bad).trigonal);
  std::vector<Vector> rank1{make_vector({1}), make_vector({-1})};
  CHECK_FALSE(check_trigonal_family(GramLattice::diagonal({1}), rank1).trigonal);
  CHECK_THROWS_AS(check_trigonal_family(l, rank1), DimensionMismatch);
}

TEST_CASE("corner families") {
  std::vector<Vector> e{make_vector({1})};
  CornerFamily c = extend_to_corner_family(GramLattice::diagonal({1}), e);
  CHECK(c.corner == 1);
  CHECK(c.vectors.size() == 3);

  std::vector<Vector> u{make_vector({1, 0}), make_vector({0, 1})};
  CHECK(extend_to_corner_family(hyperbolic_plane(), u).corner == 1);

  GramLattice neg = TrigonalForm::of({-2, -1}).lattice();
  CHECK(extend_to_corner_family(neg, u).corner == -1);
  CHECK_THROWS_AS(extend_to_corner_family(GramLattice::diagonal({2}), e), NotUnimodular);
}

TEST_CASE("property: corner sign follows n_plus") {
  Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    TrigonalForm f = testing::random_special_form(rng.index(7) + 1, rng);
    GramLattice l = f.lattice();
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < f.size(); ++i) basis.push_back(unit_vector(f.size(), i));
    CornerFamily c = extend_to_corner_family(l, basis);
    CHECK(c.corner == 1);  // n_plus = 1
  }
}

TEST_CASE("slide moves") {
  SpecialPair s = SpecialPair::from_trigonal(TrigonalForm::of({0, 4}));
  CHECK(move_slide(s, 0, -2).current_trigonal() == TrigonalForm::of({0, 0}));
  SpecialPair s3 = SpecialPair::from_trigonal(TrigonalForm::of({0, 3}));
  CHECK(move_slide(s3, 0, -1).current_trigonal() == TrigonalForm::of({0, 1}));
  CHECK(move_slide(s3, 0, 0).basis().matrix() == Matrix::identity(2));
  // Interior zero: both neighbours move.
  SpecialPair t = SpecialPair::from_trigonal(TrigonalForm::of({-2, 0, 1}));
  CHECK(move_slide(t, 1, 1).current_trigonal() == TrigonalForm::of({-4, 0, 3}));
  CHECK_THROWS_AS(move_slide(s3, 1, 1), PreconditionViolation);
}

TEST_CASE("split moves") {
  SplitResult r = move_split(SpecialPair::from_trigonal(TrigonalForm::of({-1, -2})), 0);
  CHECK(r.unit.current_trigonal() == TrigonalForm::of({-1}));
  CHECK(r.complement.current_trigonal() == TrigonalForm::of({-1}));
  // Unimodular analogue of [-1,0,5] -> [-1] + [1,5].
  SplitResult r2 = move_split(SpecialPair::from_trigonal(TrigonalForm::of({-1, 0, 2})), 0);
  CHECK(r2.complement.current_trigonal() == TrigonalForm::of({1, 2}));
  CHECK_THROWS_AS(move_split(SpecialPair::from_trigonal(TrigonalForm::of({-2, -1})), 0),
                  PreconditionViolation);
  // Interior unit: both neighbours absorb it.
  SplitResult r3 = move_split(SpecialPair::from_trigonal(TrigonalForm::of({0, -1, 1})), 1);
  CHECK(r3.complement.current_trigonal() == TrigonalForm::of({1, 2}));
}

TEST_CASE("property: moves preserve invariants") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    TrigonalForm f = testing::random_special_form(rng.index(8) + 2, rng);
    SpecialPair s = SpecialPair::from_trigonal(f);
    const Signature sig = s.lattice().signature();
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f.diag[j] == 0) {
        SpecialPair t = move_slide(s, j, rng.uniform(-3, 3));
        CHECK(change_basis(s.lattice(), t.basis()).determinant() == s.lattice().determinant());
        CHECK(GramLattice(t.current_gram()).signature() == sig);
        CHECK(is_special(t.lattice(), t.omega(), t.basis().columns()));
      }
      if (f.diag[j] == -1) {
        SplitResult r = move_split(s, j);
        const Integer du = r.unit.lattice().determinant();
        const Integer dc = r.complement.lattice().determinant();
        CHECK(du * dc == s.lattice().determinant());
        Signature a = r.unit.lattice().signature(), b = r.complement.lattice().signature();
        CHECK(a.n_plus + b.n_plus == sig.n_plus);
        CHECK(a.n_minus + b.n_minus == sig.n_minus);
        CHECK(r.complement.current_trigonal());
      }
    }
  }
}

TEST_CASE("even reduction") {
  EvenReduction r = reduce_even(SpecialPair::from_trigonal(TrigonalForm::of({0, 2})));
  CHECK(r.m == 1);
  EvenReduction r2 = reduce_even(SpecialPair::from_trigonal(TrigonalForm::of({0, 0, 0, 0})));
  CHECK(r2.m == 2);
  CHECK_THROWS_AS(reduce_even(SpecialPair::from_trigonal(TrigonalForm::of({0, 1}))),
                  PreconditionViolation);
  EvenReduction r3 = reduce_even(SpecialPair::from_trigonal(TrigonalForm::of({-4, 0, 0, 0})));
  CHECK(r3.m == 2);
}

TEST_CASE("property: even forms reduce to sums of hyperbolic planes") {
  Rng rng(24);
  int done = 0;
  for (int trial = 0; trial < 4000 && done < 150; ++trial) {
    const std::size_t n = 2 * (rng.index(4) + 1);
    std::vector<Integer> a(n);
    for (auto& x : a) x = 2 * rng.uniform(-2, 2);
    TrigonalForm f{a};
    auto d = trig_determinants(a);
    if (d.back() != 1 && d.back() != -1) continue;
    ++done;
    SpecialPair s = SpecialPair::from_trigonal(f);
    EvenReduction r = reduce_even(s);
    CHECK(2 * r.m == n);
    GramLattice u = change_basis(s.lattice(), r.basis);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(u.entry(i, j) == ((i / 2 == j / 2 && i != j) ? 1 : 0));
    CHECK(as_trigonal(change_basis(s.lattice(), r.zero_basis).gram()) ==
          TrigonalForm{std::vector<Integer>(n, Integer(0))});
  }
  CHECK(done >= 100);
}

TEST_CASE("special reduction examples") {
  SpecialPair neg = SpecialPair::from_trigonal(TrigonalForm::of({-2, -1}));
  SpecialReduction r = reduce_special(neg);
  CHECK(r.kind == CanonicalKind::NegativeDiagonal);
  CHECK(change_basis(neg.lattice(), r.basis) == GramLattice::diagonal({-1, -1}));

  SpecialPair h = SpecialPair::from_trigonal(TrigonalForm::of({0, 0}));
  CHECK(h.omega() == make_vector({-2, -2}));
  SpecialReduction rh = reduce_special(h);
  CHECK(rh.kind == CanonicalKind::Hyperbolic);
  CHECK(rh.basis.matrix() == Matrix::identity(2));

  SpecialPair odd3 = SpecialPair::from_trigonal(TrigonalForm::of({0, 0, -1}));
  SpecialReduction r3 = reduce_special(odd3);
  CHECK(r3.kind == CanonicalKind::OddDiagonal);
  CHECK(change_basis(odd3.lattice(), r3.basis) == GramLattice::diagonal({1, -1, -1}));

  SpecialPair pos = SpecialPair::from_trigonal(TrigonalForm::of({1, 2}));
  CHECK_THROWS_AS(reduce_special(pos), SignatureOutOfScope);
  CHECK_THROWS_AS(SpecialPair(hyperbolic_plane(), make_vector({0, 0})), PreconditionViolation);
}

TEST_CASE("property: random special pairs of length 5 reduce to the diagonal") {
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    TrigonalForm f = testing::random_special_form(5, rng);
    SpecialPair s = SpecialPair::from_trigonal(f);
    SpecialReduction r = reduce_special(s);
    CHECK(r.kind == CanonicalKind::OddDiagonal);
    CHECK(change_basis(s.lattice(), r.basis) == GramLattice::diagonal({1, -1, -1, -1, -1}));
    check_special_reduction(s, r);
    CHECK(s.lattice().norm(s.omega()) == 5);
  }
}

TEST_CASE("property: negative definite special pairs") {
  Rng rng(26);
  int done = 0;
  for (int trial = 0; trial < 5000 && done < 100; ++trial) {
    const std::size_t n = rng.index(6) + 1;
    std::vector<Integer> a(n);
    for (auto& x : a) x = rng.uniform(-4, -1);
    TrigonalForm f{a};
    if (f.lattice().signature() != Signature{0, n, 0} || !f.lattice().is_unimodular()) continue;
    ++done;
    SpecialPair s = SpecialPair::from_trigonal(f);
    SpecialReduction r = reduce_special(s);
    CHECK(r.kind == CanonicalKind::NegativeDiagonal);
    check_special_reduction(s, r);
    // 8 floor((n+ + 1)/2) + n+ - n- with n+ = 0.
    CHECK(s.lattice().norm(s.omega()) == -static_cast<long>(n));
  }
  CHECK(done >= 50);
}

TEST_CASE("small entries") {
  CHECK(exists_small_entry(ints({1, 2})) == 0);
  CHECK(exists_small_entry(ints({-2, -1})) == 1);
  CHECK(exists_small_entry(ints({1, 2, 0}), SmallEntryRule::MinusOneOrZero) == 2);
  CHECK_THROWS_AS(exists_small_entry(ints({2, 2})), NotUnimodular);
}

TEST_CASE("trigonal lattice recognition") {
  CHECK(is_trigonal_lattice(direct_sum(hyperbolic_plane(), e8(true))) == Decision::No);
  CHECK(is_trigonal_lattice(GramLattice::diagonal({1, -1, -1})) == Decision::Yes);
  CHECK(is_trigonal_lattice(GramLattice(Matrix{{1, 1}, {1, 2}})) == Decision::Yes);
  CHECK(is_trigonal_lattice(hyperbolic_plane()) == Decision::Yes);
  CHECK(is_trigonal_lattice(e8(false)) == Decision::No);
  CHECK_THROWS_AS(is_trigonal_lattice(GramLattice::diagonal({2})), NotUnimodular);
}
