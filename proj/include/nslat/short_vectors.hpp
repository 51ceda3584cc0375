#pragma once

// Exact enumeration of lattice points in an ellipsoid x^T Q x <= bound for
// a positive definite integer matrix Q.

#include <cstddef>
#include <cstdint>
#include <functional>

#include "nslat/matrix.hpp"

namespace nslat {

struct EnumerationLimits {
  // Every coordinate is restricted to [-box, box].
  long box = 6;
  // Number of tree nodes visited before giving up.
  std::uint64_t node_budget = 50'000'000;
};

enum class EnumerationStatus { Complete, Stopped, BudgetExhausted };

// Calls visit(x, value) for every nonzero x with x^T Q x <= bound inside
// the box. Enumeration stops early when visit returns false. Throws
// PreconditionViolation if Q is not positive definite.
EnumerationStatus enumerate_short_vectors(
    const Matrix& q, const Integer& bound, const EnumerationLimits& limits,
    const std::function<bool(const Vector&, const Integer&)>& visit);

// LLL reduction (delta = 3/4) of the Gram matrix of a positive definite
// form, in exact rational arithmetic. Returns the unimodular matrix whose
// columns are the reduced basis in the original coordinates.
Matrix lll_reduce(const Matrix& q);

}  // namespace nslat
