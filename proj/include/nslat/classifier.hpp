#pragma once

// Surfaces with p_g = q = 0: Dolgachev arithmetic and the decision by
// Kodaira dimension.

#include <optional>
#include <string>
#include <vector>

#include "nslat/criterion.hpp"

namespace nslat {

// (n-1) L - sum L/p_i with L = lcm(p_i). Needs n >= 2 and p_i >= 2.
Integer dolgachev_lambda(const std::vector<Integer>& p);

struct DolgachevDecision {
  Integer lambda;
  bool admits = false;
  // One of (2,3), (2,4), (3,3), (2,2,2) up to order.
  bool listed = false;
  std::string note;
};

DolgachevDecision dolgachev_admits(const std::vector<Integer>& p);

enum class Kodaira { MinusInfinity, Zero, One, Two };

std::string to_string(Kodaira k);
Kodaira kodaira_from_string(const std::string& s);

struct SurfaceDescriptor {
  bool minimal = true;
  Kodaira kodaira = Kodaira::MinusInfinity;
  std::optional<std::vector<Integer>> multiplicities;
  std::optional<Integer> K2;

  // Throws InvalidInput on inconsistent data.
  void validate() const;
};

struct Classification {
  bool admits = false;
  std::string justification;
};

Classification classify_pgq0(const SurfaceDescriptor& d);

struct ParityCheck {
  bool characteristic = false;
  bool lattice_even = false;
  bool content_even = false;
  // lattice_even == content_even; only meaningful for characteristic K.
  bool holds = false;
  std::string message;
};

// ns must be unimodular.
ParityCheck even_odd_duality_check(const SurfaceData& s);

enum class RationalCase { P2, QuadricPicZ, DelPezzoPicZK, ConicBundle };

std::string to_string(RationalCase c);
RationalCase rational_case_from_string(const std::string& s);

struct RationalInput {
  RationalCase which = RationalCase::P2;
  std::optional<Integer> K2;          // del Pezzo degree
  std::optional<SurfaceData> surface;  // conic bundle, rank 2
};

struct RationalObstruction {
  bool admits = false;
  std::string reason;
};

RationalObstruction minimal_geom_rational_obstruction(const RationalInput& in);

}  // namespace nslat
