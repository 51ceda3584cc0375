#pragma once

// Euler pairing of numerical classes on a surface through Riemann-Roch.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nslat/lattice.hpp"
#include "nslat/trigonal.hpp"

namespace nslat {

struct NumericalClass {
  Integer rank;
  Vector c1;
  Integer c2;

  static NumericalClass line(Vector c1) { return {1, std::move(c1), 0}; }
  friend bool operator==(const NumericalClass&, const NumericalClass&) = default;
};

struct SurfaceData {
  GramLattice ns;
  Vector K;
  Integer chiO = 1;

  // Checks that K lies in ns.
  void validate() const;
};

Integer chi_general(const SurfaceData& s, const NumericalClass& e, const NumericalClass& f);

// chi(E, F) for numerical line bundles with c1(F) - c1(E) = d.
Integer chi_line(const SurfaceData& s, const Vector& d);

struct CollectionCheck {
  Matrix chi;  // chi(E_i, E_j)
  bool exceptional = false;
  // First (j, i) with j >= i violating chi(E_j, E_i) = delta_ij.
  std::optional<std::pair<std::size_t, std::size_t>> failure;
  std::string message;
};

CollectionCheck verify_collection(const SurfaceData& s, const std::vector<NumericalClass>& classes);

struct DivisorChain {
  std::vector<Vector> divisors;  // D_i = c1(E_i) - c1(E_{i-1})
  TrigonalForm form;
};

DivisorChain collection_to_trigonal(const SurfaceData& s,
                                    const std::vector<NumericalClass>& classes);

// Rank-one classes with c1(E_i) = D_1 + ... + D_i.
std::vector<NumericalClass> trigonal_to_collection(const SurfaceData& s,
                                                   const std::vector<Vector>& divisors);

struct MixedRankRelations {
  Integer chi_zz;
  Integer chi_fz;  // chi(F, Z)
  bool z_exceptional = false;
  bool z_norm_minus_one = false;
  // Only for rank-zero F.
  std::optional<bool> rank_zero_orthogonal;
  // 2 c1(Z).c1(F) = -rk F (K.c1(Z) + 1 + 2 c2(Z)).
  bool displayed_identity = false;
};

MixedRankRelations mixed_rank_relations(const SurfaceData& s, const NumericalClass& z,
                                        const NumericalClass& f);

}  // namespace nslat
