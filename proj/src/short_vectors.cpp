#include "nslat/short_vectors.hpp"

#include <algorithm>
#include <vector>

#include "nslat/errors.hpp"

namespace nslat {

namespace {

struct Enumerator {
  std::size_t n;
  std::vector<std::vector<Rational>> mu;  // mu[i][j] for j > i
  std::vector<Rational> diag;             // q_ii of the LDL^T factorisation
  Rational bound;
  long box;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  const std::function<bool(const Vector&, const Integer&)>& visit;
  const Matrix& q;
  Vector x;
  bool stopped = false;
  bool exhausted = false;

  // Coordinates above i are fixed; used is their contribution to the form.
  void level(std::size_t i, const Rational& used) {
    if (stopped || exhausted) return;
    Rational centre = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) centre -= mu[i][j] * Rational(x[j]);
    const Rational room = bound - used;
    // Walk outward from the integer nearest to the centre.
    Integer start;
    {
      Rational shifted = centre + Rational(1, 2);
      mpz_fdiv_q(start.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    }
    const Integer lo(-box), hi(box);
    for (int side = 0; side < 2; ++side) {
      Integer v = side == 0 ? start : start - 1;
      if (side == 0 && v < lo) v = lo;
      if (side == 1 && v > hi) v = hi;
      for (; v >= lo && v <= hi; side == 0 ? ++v : --v) {
        if (++nodes > budget) {
          exhausted = true;
          return;
        }
        Rational d = Rational(v) - centre;
        Rational contribution = diag[i] * d * d;
        if (contribution > room) break;
        x[i] = v;
        if (i == 0) {
          bool nonzero = false;
          for (const auto& c : x)
            if (c != 0) {
              nonzero = true;
              break;
            }
          if (nonzero) {
            Vector qx = q * x;
            Integer value = 0;
            for (std::size_t t = 0; t < n; ++t) value += x[t] * qx[t];
            if (!visit(x, value)) stopped = true;
          }
        } else {
          level(i - 1, used + contribution);
        }
        if (stopped || exhausted) {
          x[i] = 0;
          return;
        }
      }
    }
    x[i] = 0;
  }
};

}  // namespace

EnumerationStatus enumerate_short_vectors(
    const Matrix& q, const Integer& bound, const EnumerationLimits& limits,
    const std::function<bool(const Vector&, const Integer&)>& visit) {
  if (!q.is_square() || !q.is_symmetric())
    throw InvalidInput("enumeration needs a symmetric square matrix");
  const std::size_t n = q.rows();
  if (n == 0 || bound < 0) return EnumerationStatus::Complete;

  // Rational LDL^T: x^T Q x = sum_i diag[i] (x_i + sum_{j>i} mu[i][j] x_j)^2.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(q(i, j));
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] <= 0) throw PreconditionViolation("enumeration matrix is not positive definite");
    diag[i] = a[i][i];
    for (std::size_t j = i + 1; j < n; ++j) mu[i][j] = a[i][j] / diag[i];
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = i + 1; c < n; ++c) a[r][c] -= mu[i][r] * diag[i] * mu[i][c];
  }

  Enumerator e{n,      std::move(mu),     std::move(diag), Rational(bound), limits.box,
               limits.node_budget, 0, visit, q, zero_vector(n)};
  e.level(n - 1, Rational(0));
  if (e.exhausted) return EnumerationStatus::BudgetExhausted;
  if (e.stopped) return EnumerationStatus::Stopped;
  return EnumerationStatus::Complete;
}

namespace {

struct Gso {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> b;
};

Gso gram_schmidt(const Matrix& g) {
  const std::size_t n = g.rows();
  Gso out{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational r = g(i, j);
      for (std::size_t k = 0; k < j; ++k) r -= out.mu[j][k] * out.mu[i][k] * out.b[k];
      out.mu[i][j] = r / out.b[j];
    }
    Rational r = g(i, i);
    for (std::size_t k = 0; k < i; ++k) r -= out.mu[i][k] * out.mu[i][k] * out.b[k];
    if (r <= 0) throw PreconditionViolation("LLL needs a positive definite form");
    out.b[i] = r;
  }
  return out;
}

Integer round_nearest(const Rational& x) {
  Rational shifted = x + Rational(1, 2);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return f;
}

}  // namespace

Matrix lll_reduce(const Matrix& q) {
  const std::size_t n = q.rows();
  Matrix basis = Matrix::identity(n);
  if (n < 2) return basis;
  auto gram = [&] { return basis.transpose() * q * basis; };
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      Gso g = gram_schmidt(gram());
      const Integer r = round_nearest(g.mu[k][jj]);
      if (r == 0) continue;
      for (std::size_t i = 0; i < n; ++i) basis(i, k) -= r * basis(i, jj);
    }
    Gso g = gram_schmidt(gram());
    const Rational& m = g.mu[k][k - 1];
    if (g.b[k] < (Rational(3, 4) - m * m) * g.b[k - 1]) {
      for (std::size_t i = 0; i < n; ++i) std::swap(basis(i, k), basis(i, k - 1));
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      ++k;
    }
  }
  return basis;
}

}  // namespace nslat
