#pragma once

// Toric systems of a collection and the fan they determine.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nslat/riemann_roch.hpp"

namespace nslat {

struct ToricSystem {
  std::vector<Integer> self_intersections;  // a_i = D_i^2, cyclic
  std::size_t size() const { return self_intersections.size(); }
  bool sum_rule_holds() const;
};

using Ray = std::array<Integer, 2>;

struct Fan {
  std::vector<Ray> rays;
  long winding_number = 0;
};

// D_1, ..., D_{n+1}; appends D_0 = -K - sum D_i, so the cycle reads
// (D_1, ..., D_{n+1}, D_0). Violations raise PreconditionViolation naming
// the indices.
ToricSystem toric_system_from_collection(const SurfaceData& s, const std::vector<Vector>& d);

// Seeds v_0 = (1,0), v_1 = (0,1) and applies v_{i+1} = -v_{i-1} - a_i v_i.
// Throws PreconditionViolation for N < 3 or a failed sum rule and
// InvalidInput when the rays do not close up into a smooth complete fan.
Fan fan_from_toric_system(const ToricSystem& t);

struct ToricVerdict {
  bool valid = false;
  std::string reason;
  std::optional<Fan> fan;
};

ToricVerdict verify_abstract_toric_system(const ToricSystem& t);

Integer det2(const Ray& a, const Ray& b);

// Counts full turns of the ray cycle around the origin, exactly.
long winding_number(const std::vector<Ray>& rays);

std::string fan_svg(const Fan& f, const ToricSystem& t);

}  // namespace nslat
