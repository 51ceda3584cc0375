#pragma once

// Deciding and constructing numerically exceptional collections of
// maximal length from lattice data.

#include <optional>
#include <string>
#include <vector>

#include "nslat/characteristic.hpp"
#include "nslat/riemann_roch.hpp"

namespace nslat {

enum class CriterionCase { Rank1, Hyperbolic, Odd, None };
enum class Obstruction { NotUnimodular, WrongSignature, NotCharacteristic };

std::string to_string(CriterionCase c);
std::string to_string(Obstruction o);

struct CriterionResult {
  bool admits = false;
  CriterionCase which = CriterionCase::None;
  std::string reason;
  std::optional<Obstruction> obstruction;
};

// Requires chi(O) = 1. Inputs outside the scope of the theorem come back
// as an obstruction report, not an exception.
CriterionResult criterion(const SurfaceData& s);

struct CollectionWitness {
  SurfaceData surface;
  std::vector<NumericalClass> classes;
};

struct WitnessResult {
  CriterionResult decision;
  std::optional<CollectionWitness> witness;
  std::string note;
};

// SearchExhausted escapes when the bounded diagonalisation fails; that is
// not a statement about existence.
WitnessResult construct_witness(const SurfaceData& s, const DiagonalizationLimits& limits = {});

struct NecessaryConditions {
  bool unimodular = false;
  bool mod8 = false;
  bool zero_cycle_degree_one = false;
  bool all_hold() const { return unimodular && mod8 && zero_cycle_degree_one; }
};

NecessaryConditions necessary_conditions(const GramLattice& ns, const Integer& rho,
                                         const Integer& b1, const Integer& b2);

struct PicardRankOne {
  Integer m;
  Integer k;  // positive after replacing H by -H
  Integer deg_hn;
  Integer c1_coefficient;
};

// a_0, ..., a_n with L_i = O(a_i H). Throws PreconditionViolation when the
// data cannot come from a numerically exceptional collection.
PicardRankOne picard_rank_one_analysis(std::size_t n, const std::vector<Integer>& a);

}  // namespace nslat
