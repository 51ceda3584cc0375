#include "nslat/riemann_roch.hpp"

#include <stdexcept>

#include "nslat/errors.hpp"

namespace nslat {

void SurfaceData::validate() const {
  if (K.size() != ns.rank())
    throw DimensionMismatch("canonical class has length " + std::to_string(K.size()) +
                            ", lattice rank is " + std::to_string(ns.rank()));
}

namespace {

void require_class(const SurfaceData& s, const NumericalClass& c) {
  if (c.c1.size() != s.ns.rank())
    throw DimensionMismatch("c1 has length " + std::to_string(c.c1.size()) +
                            ", lattice rank is " + std::to_string(s.ns.rank()));
}

Integer halve(const Integer& twice, const char* what) {
  if (mpz_odd_p(twice.get_mpz_t()))
    throw ParityError(std::string(what) + ": 2 chi = " + twice.get_str() + " is odd");
  return twice / 2;
}

}  // namespace

Integer chi_general(const SurfaceData& s, const NumericalClass& e, const NumericalClass& f) {
  s.validate();
  require_class(s, e);
  require_class(s, f);
  const GramLattice& l = s.ns;
  Integer twice = 2 * e.rank * f.rank * s.chiO;
  twice += f.rank * l.norm(e.c1) + e.rank * l.norm(f.c1) - 2 * l.pair(e.c1, f.c1);
  twice -= e.rank * l.pair(s.K, f.c1) - f.rank * l.pair(s.K, e.c1);
  twice -= 2 * (f.rank * e.c2 + e.rank * f.c2);
  return halve(twice, "Riemann-Roch");
}

Integer chi_line(const SurfaceData& s, const Vector& d) {
  s.validate();
  if (s.chiO != 1) throw PreconditionViolation("line bundle formula assumes chi(O) = 1");
  if (d.size() != s.ns.rank()) throw DimensionMismatch("divisor length does not match lattice");
  Integer twice = s.ns.norm(d) - s.ns.pair(s.K, d) + 2;
  return halve(twice, "line bundle Riemann-Roch (K not characteristic?)");
}

CollectionCheck verify_collection(const SurfaceData& s, const std::vector<NumericalClass>& classes) {
  const std::size_t k = classes.size();
  CollectionCheck out{Matrix(k, k), true, std::nullopt, {}};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.chi(i, j) = chi_general(s, classes[i], classes[j]);
  for (std::size_t i = 0; i < k && !out.failure; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const Integer want = i == j ? 1 : 0;
      if (out.chi(j, i) != want) {
        out.exceptional = false;
        out.failure = std::pair{j, i};
        out.message = "chi(E_" + std::to_string(j) + ", E_" + std::to_string(i) + ") = " +
                      out.chi(j, i).get_str() + ", expected " + want.get_str();
        break;
      }
    }
  return out;
}

DivisorChain collection_to_trigonal(const SurfaceData& s,
                                    const std::vector<NumericalClass>& classes) {
  s.validate();
  if (classes.empty()) throw InvalidInput("empty collection");
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].rank != 1)
      throw PreconditionViolation("class " + std::to_string(i) + " has rank " +
                                  classes[i].rank.get_str() + ", expected 1");
  CollectionCheck check = verify_collection(s, classes);
  if (!check.exceptional) throw PreconditionViolation("not numerically exceptional: " + check.message);

  DivisorChain out;
  for (std::size_t i = 1; i < classes.size(); ++i)
    out.divisors.push_back(classes[i].c1 - classes[i - 1].c1);
  auto form = as_trigonal(gram_of(s.ns, out.divisors));
  if (!form) throw std::logic_error("exceptional line bundles with non-trigonal differences");
  out.form = *form;
  for (const auto& d : out.divisors)
    if (s.ns.pair(s.K, d) != -2 - s.ns.norm(d))
      throw std::logic_error("exceptional line bundles violating K.D = -2 - D^2");
  return out;
}

std::vector<NumericalClass> trigonal_to_collection(const SurfaceData& s,
                                                   const std::vector<Vector>& divisors) {
  s.validate();
  if (s.chiO != 1) throw PreconditionViolation("construction assumes chi(O) = 1");
  for (const auto& d : divisors)
    if (d.size() != s.ns.rank()) throw DimensionMismatch("divisor length does not match lattice");
  Matrix g = gram_of(s.ns, divisors);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j) {
      const Integer want = j == i + 1 ? 1 : 0;
      if (g(i, j) != want)
        throw PreconditionViolation("D_" + std::to_string(i + 1) + ".D_" + std::to_string(j + 1) +
                                    " = " + g(i, j).get_str() + ", expected " + want.get_str());
    }
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (s.ns.pair(s.K, divisors[i]) != -2 - g(i, i))
      throw PreconditionViolation("K.D_" + std::to_string(i + 1) + " = " +
                                  s.ns.pair(s.K, divisors[i]).get_str() + ", expected " +
                                  Integer(-2 - g(i, i)).get_str());
  std::vector<NumericalClass> out{NumericalClass::line(zero_vector(s.ns.rank()))};
  for (const auto& d : divisors) out.push_back(NumericalClass::line(out.back().c1 + d));
  if (!verify_collection(s, out).exceptional)
    throw std::logic_error("trigonal divisors gave a non-exceptional collection");
  return out;
}

MixedRankRelations mixed_rank_relations(const SurfaceData& s, const NumericalClass& z,
                                        const NumericalClass& f) {
  if (z.rank != 0) throw InvalidInput("first class must have rank 0");
  MixedRankRelations out;
  out.chi_zz = chi_general(s, z, z);
  out.chi_fz = chi_general(s, f, z);
  out.z_exceptional = out.chi_zz == 1;
  out.z_norm_minus_one = s.ns.norm(z.c1) == -1;
  if (f.rank == 0) out.rank_zero_orthogonal = s.ns.pair(z.c1, f.c1) == 0;
  out.displayed_identity =
      2 * s.ns.pair(z.c1, f.c1) == -f.rank * (s.ns.pair(s.K, z.c1) + 1 + 2 * z.c2);
  return out;
}

}  // namespace nslat
