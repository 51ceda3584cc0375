#include "nslat/criterion.hpp"

#include <set>
#include <stdexcept>

#include "nslat/errors.hpp"

namespace nslat {

std::string to_string(CriterionCase c) {
  switch (c) {
    case CriterionCase::Rank1:
      return "RANK1";
    case CriterionCase::Hyperbolic:
      return "HYPERBOLIC";
    case CriterionCase::Odd:
      return "ODD";
    case CriterionCase::None:
      return "NONE";
  }
  return "?";
}

std::string to_string(Obstruction o) {
  switch (o) {
    case Obstruction::NotUnimodular:
      return "NOT_UNIMODULAR";
    case Obstruction::WrongSignature:
      return "WRONG_SIGNATURE";
    case Obstruction::NotCharacteristic:
      return "NOT_CHARACTERISTIC";
  }
  return "?";
}

CriterionResult criterion(const SurfaceData& s) {
  s.validate();
  if (s.chiO != 1) throw PreconditionViolation("criterion assumes chi(O) = 1");
  CriterionResult out;
  const GramLattice& l = s.ns;
  const std::size_t n = l.rank();
  if (n == 0 || !l.is_unimodular()) {
    out.obstruction = Obstruction::NotUnimodular;
    out.reason = "Neron-Severi lattice is not unimodular (determinant " +
                 l.determinant().get_str() + ")";
    return out;
  }
  const Signature sig = l.signature();
  if (sig.n_plus != 1) {
    out.obstruction = Obstruction::WrongSignature;
    out.reason = "signature (" + std::to_string(sig.n_plus) + "," + std::to_string(sig.n_minus) +
                 ") is not (1,n-1)";
    return out;
  }
  if (!is_characteristic(l, s.K)) {
    out.obstruction = Obstruction::NotCharacteristic;
    out.reason = "K is not characteristic";
    return out;
  }
  const Integer k2 = l.norm(s.K);
  const Integer want = 10 - static_cast<long>(n);
  if (k2 != want) {
    out.reason = "K^2 = " + k2.get_str() + " but 10 - rank = " + want.get_str();
    return out;
  }
  const Integer c = content(s.K);
  if (n == 1) {
    if (c == 3) {
      out.admits = true;
      out.which = CriterionCase::Rank1;
      out.reason = "rank 1 with K = 3D, D primitive";
    } else {
      out.reason = "rank 1 but K is not three times a primitive class";
    }
    return out;
  }
  if (l.is_even()) {
    if (n == 2 && c == 2) {
      out.admits = true;
      out.which = CriterionCase::Hyperbolic;
      out.reason = "even of rank 2 with K = 2D, D primitive";
    } else if (n == 2) {
      out.reason = "even of rank 2 but K is not twice a primitive class";
    } else {
      out.reason = "even lattice of rank " + std::to_string(n) + " is not the hyperbolic plane";
    }
    return out;
  }
  if (c == 1) {
    out.admits = true;
    out.which = CriterionCase::Odd;
    out.reason = "odd with K primitive and K^2 = 10 - rank";
  } else {
    out.reason = "odd lattice but K has content " + c.get_str();
  }
  return out;
}

WitnessResult construct_witness(const SurfaceData& s, const DiagonalizationLimits& limits) {
  WitnessResult out;
  out.decision = criterion(s);
  if (!out.decision.admits) {
    out.note = "no collection: " + out.decision.reason;
    return out;
  }
  const std::size_t n = s.ns.rank();
  if (out.decision.which == CriterionCase::Odd && n > 10) {
    out.note = "decision only: no explicit basis is constructed above rank 10";
    return out;
  }
  EquivalenceResult eq = main_equivalence(s.ns, s.K, limits);
  if (!eq.holds || !eq.basis) throw std::logic_error("criterion and basis search disagree");
  std::vector<Vector> f = eq.basis->columns();

  std::vector<Vector> c1;
  const Vector zero = zero_vector(n);
  switch (out.decision.which) {
    case CriterionCase::Rank1:
      // K = -3D with D = f_1.
      c1 = {zero, f[0], 2 * f[0]};
      break;
    case CriterionCase::Hyperbolic:
      // K = -2D_1 - 2D_2.
      c1 = {zero, f[0], f[1], f[0] + f[1]};
      break;
    case CriterionCase::Odd: {
      // Gram diag(1,-1,...,-1) and K = -3 f_1 + f_2 + ... + f_n; with
      // D_n = f_1 and D_i = f_{i+1} this is K = D_1 + ... + D_{n-1} - 3 D_n.
      c1.push_back(zero);
      for (std::size_t i = 1; i < n; ++i) c1.push_back(f[i]);
      c1.push_back(f[0]);
      c1.push_back(2 * f[0]);
      break;
    }
    case CriterionCase::None:
      throw std::logic_error("admitting decision without a case");
  }
  CollectionWitness w{s, {}};
  for (auto& v : c1) w.classes.push_back(NumericalClass::line(v));
  CollectionCheck check = verify_collection(s, w.classes);
  if (!check.exceptional) throw std::logic_error("constructed witness fails: " + check.message);
  if (w.classes.size() != n + 2) throw std::logic_error("witness has wrong length");
  out.witness = std::move(w);
  out.note = "verified: chi(E_i,E_i) = 1 and chi(E_j,E_i) = 0 for j > i";
  return out;
}

NecessaryConditions necessary_conditions(const GramLattice& ns, const Integer& rho,
                                         const Integer& b1, const Integer& b2) {
  NecessaryConditions out;
  out.unimodular = ns.is_unimodular();
  out.mod8 = mod8_congruence_holds(rho, b1, b2);
  out.zero_cycle_degree_one = out.unimodular;
  return out;
}

PicardRankOne picard_rank_one_analysis(std::size_t n, const std::vector<Integer>& a) {
  if (n == 0) throw InvalidInput("dimension must be positive");
  if (a.size() != n + 1)
    throw InvalidInput("expected " + std::to_string(n + 1) + " exponents, got " +
                       std::to_string(a.size()));
  std::set<Integer> seen(a.begin(), a.end());
  if (seen.size() != a.size()) throw PreconditionViolation("exponents are not pairwise distinct");
  std::set<Integer> differences;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) differences.insert(a[i] - a[j]);
  if (differences.size() > n)
    throw PreconditionViolation(std::to_string(differences.size()) +
                                " distinct differences exceed the " + std::to_string(n) +
                                " roots of the Hilbert polynomial");
  Integer m = a[0], k = a[1] - a[0];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != m + k * static_cast<long>(i))
      throw PreconditionViolation("exponents are not an arithmetic progression");
  if (k < 0) {
    m = -m;
    k = -k;
  }
  if (k != 1) {
    Integer kn;
    mpz_pow_ui(kn.get_mpz_t(), k.get_mpz_t(), n);
    throw PreconditionViolation("k = " + k.get_str() + " forces deg(H^n) = 1/" + kn.get_str() +
                                ", not an integer");
  }
  // sum_{l=1}^n l = (n/2) deg(H^{n-1} c1).
  const Integer sum = Integer(static_cast<unsigned long>(n)) * (n + 1) / 2;
  return {m, k, 1, 2 * sum / static_cast<unsigned long>(n)};
}

}  // namespace nslat
