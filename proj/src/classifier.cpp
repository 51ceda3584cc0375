#include "nslat/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "nslat/errors.hpp"

namespace nslat {

namespace {

Integer lcm_of(const std::vector<Integer>& p) {
  Integer l = 1;
  for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_mpz_t());
  return l;
}

void require_multiplicities(const std::vector<Integer>& p) {
  if (p.size() < 2) throw InvalidInput("need at least two multiple fibres");
  for (const auto& x : p)
    if (x < 2) throw InvalidInput("multiplicity " + x.get_str() + " is below 2");
}

std::string tuple_string(std::vector<Integer> p) {
  std::sort(p.begin(), p.end());
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
  return s + ")";
}

}  // namespace

Integer dolgachev_lambda(const std::vector<Integer>& p) {
  require_multiplicities(p);
  const Integer l = lcm_of(p);
  Integer lambda = Integer(static_cast<unsigned long>(p.size() - 1)) * l;
  for (const auto& x : p) lambda -= l / x;
  if (p.size() == 2) {
    Integer c;
    mpz_gcd(c.get_mpz_t(), p[0].get_mpz_t(), p[1].get_mpz_t());
    const Integer q1 = p[0] / c, q2 = p[1] / c;
    if (lambda != c * q1 * q2 - q1 - q2)
      throw std::logic_error("two-fibre formula disagrees for " + tuple_string(p));
  }
  return lambda;
}

DolgachevDecision dolgachev_admits(const std::vector<Integer>& p) {
  DolgachevDecision out;
  out.lambda = dolgachev_lambda(p);
  out.admits = out.lambda == 1;
  const std::string t = tuple_string(p);
  out.listed = t == "(2,3)" || t == "(2,4)" || t == "(3,3)" || t == "(2,2,2)";
  if (out.admits && !out.listed)
    out.note = "lambda = 1 outside the four listed tuples; excluded by the classification, "
               "report if reached";
  else if (out.admits)
    out.note = "X_9" + t + ": K generates the rank-one fibre line";
  else if (out.lambda == 0)
    out.note = "K is torsion";
  else
    out.note = "K = " + out.lambda.get_str() + " times a primitive class";
  return out;
}

std::string to_string(Kodaira k) {
  switch (k) {
    case Kodaira::MinusInfinity:
      return "MINUS_INF";
    case Kodaira::Zero:
      return "ZERO";
    case Kodaira::One:
      return "ONE";
    case Kodaira::Two:
      return "TWO";
  }
  return "?";
}

Kodaira kodaira_from_string(const std::string& s) {
  if (s == "MINUS_INF") return Kodaira::MinusInfinity;
  if (s == "ZERO") return Kodaira::Zero;
  if (s == "ONE") return Kodaira::One;
  if (s == "TWO") return Kodaira::Two;
  throw InvalidInput("unknown Kodaira dimension '" + s + "'");
}

void SurfaceDescriptor::validate() const {
  const bool elliptic = kodaira == Kodaira::Zero || kodaira == Kodaira::One;
  if (multiplicities.has_value() != elliptic)
    throw InvalidInput(elliptic ? "multiplicities are required for Kodaira dimension 0 and 1"
                                : "multiplicities only apply to Kodaira dimension 0 and 1");
  if (!multiplicities) return;
  const auto& p = *multiplicities;
  require_multiplicities(p);
  if (!std::is_sorted(p.begin(), p.end()))
    throw InvalidInput("multiplicities must be nondecreasing");
  if (kodaira == Kodaira::Zero && p != std::vector<Integer>{2, 2})
    throw InvalidInput("Kodaira dimension 0 forces multiplicities (2,2)");
  if (kodaira == Kodaira::One && p == std::vector<Integer>{2, 2})
    throw InvalidInput("multiplicities (2,2) give Kodaira dimension 0");
}

Classification classify_pgq0(const SurfaceDescriptor& d) {
  d.validate();
  if (!d.minimal) return {true, "not minimal: blow-ups of surfaces with p_g = q = 0 admit one"};
  switch (d.kodaira) {
    case Kodaira::MinusInfinity:
      return {true, "rational: blow-up of P2 or a Hirzebruch surface"};
    case Kodaira::Zero:
      return {false, "Enriques surface: the lattice is even of rank 10 and K = 0"};
    case Kodaira::One: {
      DolgachevDecision dd = dolgachev_admits(*d.multiplicities);
      std::string j = "Dolgachev surface with lambda = " + dd.lambda.get_str();
      if (!dd.note.empty()) j += "; " + dd.note;
      return {dd.admits, j};
    }
    case Kodaira::Two:
      return {true, "general type: K^2 = 10 - rho holds and no lattice obstruction applies"};
  }
  throw std::logic_error("unhandled Kodaira dimension");
}

ParityCheck even_odd_duality_check(const SurfaceData& s) {
  s.validate();
  if (!s.ns.is_unimodular()) throw NotUnimodular("parity check needs a unimodular lattice");
  ParityCheck out;
  out.characteristic = is_characteristic(s.ns, s.K);
  out.lattice_even = s.ns.is_even();
  out.content_even = content(s.K) % 2 == 0;
  if (!out.characteristic) {
    out.message = "K is not characteristic";
    return out;
  }
  out.holds = out.lattice_even == out.content_even;
  out.message = std::string(out.lattice_even ? "even lattice" : "odd lattice") + ", content " +
                content(s.K).get_str();
  return out;
}

std::string to_string(RationalCase c) {
  switch (c) {
    case RationalCase::P2:
      return "P2";
    case RationalCase::QuadricPicZ:
      return "QUADRIC_PIC_Z";
    case RationalCase::DelPezzoPicZK:
      return "DELPEZZO_PIC_ZK";
    case RationalCase::ConicBundle:
      return "CONIC_BUNDLE";
  }
  return "?";
}

RationalCase rational_case_from_string(const std::string& s) {
  if (s == "P2") return RationalCase::P2;
  if (s == "QUADRIC_PIC_Z") return RationalCase::QuadricPicZ;
  if (s == "DELPEZZO_PIC_ZK") return RationalCase::DelPezzoPicZK;
  if (s == "CONIC_BUNDLE") return RationalCase::ConicBundle;
  throw InvalidInput("unknown rational case '" + s + "'");
}

RationalObstruction minimal_geom_rational_obstruction(const RationalInput& in) {
  switch (in.which) {
    case RationalCase::P2: {
      SurfaceData p2{GramLattice::diagonal({1}), make_vector({-3}), 1};
      CriterionResult r = criterion(p2);
      return {r.admits, "P2: " + r.reason};
    }
    case RationalCase::QuadricPicZ:
      // rho = 1, b1 = 0, b2 = 2 over the algebraic closure.
      if (mod8_congruence_holds(1, 0, 2)) throw std::logic_error("mod 8 test passed for quadric");
      return {false, "rho = 1 differs from b2 = 2 modulo 8"};
    case RationalCase::DelPezzoPicZK: {
      if (!in.K2) throw InvalidInput("del Pezzo case needs K2");
      const Integer d = *in.K2;
      if (d < 1 || d > 9) throw InvalidInput("del Pezzo degree must lie in 1..9");
      // Pic = Z K, so N^1 = <d> with K the generator.
      SurfaceData s{GramLattice::diagonal(std::vector<Integer>{d}), make_vector({1}), 1};
      if (!s.ns.is_unimodular())
        return {false, "N^1 = <" + d.get_str() + "> is not unimodular"};
      CriterionResult r = criterion(s);
      return {r.admits, "unimodularity forces K^2 = 1 while rank one needs K^2 = 9: " + r.reason};
    }
    case RationalCase::ConicBundle: {
      if (!in.surface) throw InvalidInput("conic bundle case needs a surface");
      if (in.surface->ns.rank() != 2) throw InvalidInput("conic bundle lattice must have rank 2");
      CriterionResult r = criterion(*in.surface);
      return {r.admits, to_string(r.which) + ": " + r.reason};
    }
  }
  throw std::logic_error("unhandled rational case");
}

}  // namespace nslat
