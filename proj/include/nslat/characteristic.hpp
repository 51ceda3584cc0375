#pragma once

// Characteristic elements, reflections and orbit normalisation in
// <1> + <-1>^{n-1}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nslat/lattice.hpp"

namespace nslat {

bool is_characteristic(const GramLattice& lattice, const Vector& w);

// Some characteristic vector; throws NotUnimodular when the mod-2 system
// is singular.
Vector find_characteristic(const GramLattice& lattice);

// b(w, w) = n+ - n- (mod 8). Throws NotUnimodular or PreconditionViolation
// (w not characteristic).
bool van_der_blij_check(const GramLattice& lattice, const Vector& w);

// x - 2 b(x,v)/b(v,v) v; throws PreconditionViolation when not integral.
Vector reflect(const GramLattice& lattice, const Vector& v, const Vector& x);

struct NormalizationStep {
  std::string kind;  // "sign", "sort", "reflect"
  Vector value;      // after the step
};

struct Claim1Result {
  Vector normalized;
  std::vector<NormalizationStep> transcript;
  // Isometry of diag(1,-1,...,-1) with isometry * x = normalized.
  Matrix isometry;
};

// Requires x^2 >= 0 in diag(1,-1,...,-1). Output satisfies
// 0 <= x_n <= ... <= x_2, and x_2 + x_3 + x_4 <= x_1 (x_2 + x_3 for n = 3).
Claim1Result normalize_claim1(const Vector& x);

// (3, 1, ..., 1) in diag(1,-1,...,-1).
Vector canonical_characteristic(std::size_t n);

struct DiagonalizationLimits {
  long box = 6;
  std::uint64_t node_budget = 20'000'000;
};

// Basis (columns) in which an odd unimodular lattice of signature
// (1, n-1) has Gram diag(1,-1,...,-1). Throws SearchExhausted when the
// bounded search fails.
BasisChange diagonalize_odd_hyperbolic(const GramLattice& lattice,
                                       const DiagonalizationLimits& limits = {});

// Basis with Gram [[0,1],[1,0]] for an even unimodular lattice of
// signature (1,1).
BasisChange hyperbolic_basis(const GramLattice& lattice);

enum class EquivalenceCase { Rank1, Hyperbolic, Odd };

std::string to_string(EquivalenceCase c);

struct EquivalenceResult {
  bool holds = false;
  std::optional<EquivalenceCase> which;
  std::string reason;
  // Basis in which omega is special; absent when the condition fails and
  // for odd lattices of rank above 10.
  std::optional<BasisChange> basis;
  std::vector<NormalizationStep> transcript;
};

// Signature must be (1, n-1); throws SignatureOutOfScope otherwise.
EquivalenceResult main_equivalence(const GramLattice& lattice, const Vector& w,
                                   const DiagonalizationLimits& limits = {});

}  // namespace nslat
