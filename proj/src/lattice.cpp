#include "nslat/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "nslat/errors.hpp"

namespace nslat {

GramLattice::GramLattice(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square())
    throw InvalidInput("Gram matrix is not square: " + std::to_string(gram_.rows()) + "x" +
                       std::to_string(gram_.cols()));
  if (!gram_.is_symmetric()) throw InvalidInput("Gram matrix is not symmetric");
}

GramLattice GramLattice::diagonal(std::initializer_list<long> entries) {
  Vector v;
  for (long x : entries) v.emplace_back(x);
  return diagonal(std::span<const Integer>(v));
}

GramLattice GramLattice::diagonal(std::span<const Integer> entries) {
  return GramLattice(Matrix::diagonal(entries));
}

Integer GramLattice::pair(const Vector& x, const Vector& y) const {
  const std::size_t n = rank();
  if (x.size() != n || y.size() != n)
    throw DimensionMismatch("vector length does not match lattice rank " + std::to_string(n));
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (y[j] != 0) row += gram_(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

Vector GramLattice::pairings(const Vector& x) const {
  if (x.size() != rank())
    throw DimensionMismatch("vector length does not match lattice rank " +
                            std::to_string(rank()));
  return gram_ * x;
}

Integer GramLattice::determinant() const { return nslat::determinant(gram_); }

Signature GramLattice::signature() const {
  const std::size_t n = rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram_(i, j));

  Signature s;
  // Active indices are [k, n). Each step splits off one diagonal entry by a
  // congruence that clears its row and column.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (a[i][i] != 0) {
        p = i;
        break;
      }
    if (p == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        s.n_zero += n - k;
        return s;
      }
      // e_i += e_j makes the diagonal entry 2 a_ij.
      for (std::size_t t = k; t < n; ++t) a[pi][t] += a[pj][t];
      for (std::size_t t = k; t < n; ++t) a[t][pi] += a[t][pj];
      p = pi;
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      for (auto& row : a) std::swap(row[p], row[k]);
    }
    const Rational pivot = a[k][k];
    if (pivot > 0)
      ++s.n_plus;
    else
      ++s.n_minus;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / pivot;
      for (std::size_t t = k; t < n; ++t) a[i][t] -= f * a[k][t];
      for (std::size_t t = k; t < n; ++t) a[t][i] = a[i][t];
    }
  }
  return s;
}

bool GramLattice::is_unimodular() const {
  if (rank() == 0) return true;
  Integer d = determinant();
  return d == 1 || d == -1;
}

bool GramLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (mpz_odd_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

BasisChange::BasisChange(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw InvalidInput("basis change matrix is not square");
  if (m_.rows() == 0) return;
  Integer d = nslat::determinant(m_);
  if (d != 1 && d != -1)
    throw PreconditionViolation("basis change has determinant " + d.get_str() +
                                ", expected +-1");
}

BasisChange BasisChange::inverse() const {
  auto inv = inverse_unimodular(m_);
  if (!inv) throw std::logic_error("unimodular matrix without integer inverse");
  return BasisChange(*inv);
}

Vector BasisChange::to_new(const Vector& old_coords) const {
  auto x = solve_integer(m_, old_coords);
  if (!x) throw std::logic_error("unimodular system without integer solution");
  return *x;
}

Vector dual_vector(const GramLattice& lattice, const Vector& functional) {
  if (functional.size() != lattice.rank())
    throw DimensionMismatch("functional length does not match lattice rank");
  if (!lattice.is_unimodular())
    throw NotUnimodular("dual vector requested in a lattice of determinant " +
                        lattice.determinant().get_str());
  auto x = solve_integer(lattice.gram(), functional);
  if (!x) throw NotUnimodular("no integral dual vector");
  return *x;
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  return GramLattice(direct_sum(a.gram(), b.gram()));
}

GramLattice change_basis(const GramLattice& lattice, const BasisChange& m) {
  if (m.size() != lattice.rank())
    throw DimensionMismatch("basis change size does not match lattice rank");
  return GramLattice(m.matrix().transpose() * lattice.gram() * m.matrix());
}

BlowUp blowup(const GramLattice& lattice, const Vector& canonical, const Integer& degree) {
  if (degree < 1) throw InvalidInput("blow-up degree must be positive");
  if (canonical.size() != lattice.rank())
    throw DimensionMismatch("canonical class length does not match lattice rank");
  Matrix e(1, 1);
  e(0, 0) = -degree;
  BlowUp out{GramLattice(direct_sum(lattice.gram(), e)), canonical};
  out.canonical.emplace_back(1);
  return out;
}

Integer noether_K2(const Integer& b1, const Integer& b2) {
  if (b1 < 0 || b2 < 1) throw InvalidInput("Betti numbers out of range");
  return 10 + 2 * b1 - b2;
}

bool mod8_congruence_holds(const Integer& rho, const Integer& b1, const Integer& b2) {
  Integer diff = rho - (b2 - 2 * b1);
  return mpz_divisible_ui_p(diff.get_mpz_t(), 8) != 0;
}

GramLattice hyperbolic_plane() { return GramLattice(Matrix{{0, 1}, {1, 0}}); }

GramLattice odd_unimodular(std::size_t n_plus, std::size_t n_minus) {
  Vector d;
  for (std::size_t i = 0; i < n_plus; ++i) d.emplace_back(1);
  for (std::size_t i = 0; i < n_minus; ++i) d.emplace_back(-1);
  return GramLattice::diagonal(std::span<const Integer>(d));
}

GramLattice e8(bool negative) {
  // Cartan matrix of E8, Bourbaki labelling with node 2 attached to node 4.
  static const int edges[7][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
  Matrix m(8, 8);
  const long s = negative ? -1 : 1;
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2 * s;
  for (const auto& e : edges) {
    m(e[0], e[1]) = -s;
    m(e[1], e[0]) = -s;
  }
  return GramLattice(m);
}

}  // namespace nslat
