#pragma once

// Integer symmetric bilinear forms given by a Gram matrix in a
// distinguished basis.

#include <cstddef>
#include <initializer_list>
#include <span>

#include "nslat/matrix.hpp"

namespace nslat {

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t rank() const { return n_plus + n_minus + n_zero; }
  bool is_nondegenerate() const { return n_zero == 0; }
  bool is_definite() const { return n_zero == 0 && (n_plus == 0 || n_minus == 0); }
  friend bool operator==(const Signature&, const Signature&) = default;
};

class GramLattice {
 public:
  GramLattice() = default;  // the zero lattice
  explicit GramLattice(Matrix gram);

  static GramLattice diagonal(std::initializer_list<long> entries);
  static GramLattice diagonal(std::span<const Integer> entries);

  std::size_t rank() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const Integer& entry(std::size_t i, std::size_t j) const { return gram_(i, j); }

  Integer pair(const Vector& x, const Vector& y) const;
  Integer norm(const Vector& x) const { return pair(x, x); }
  // The functional b(x, -) in coordinates: gram * x.
  Vector pairings(const Vector& x) const;

  Integer determinant() const;
  Signature signature() const;
  bool is_unimodular() const;
  bool is_even() const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  Matrix gram_;
};

// Square integer matrix with determinant +-1; columns are the new basis
// vectors written in the old coordinates.
class BasisChange {
 public:
  explicit BasisChange(Matrix m);
  static BasisChange identity(std::size_t n) { return BasisChange(Matrix::identity(n)); }
  static BasisChange from_columns(std::span<const Vector> columns) {
    return BasisChange(Matrix::from_columns(columns));
  }

  const Matrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  Vector column(std::size_t j) const { return m_.column(j); }
  std::vector<Vector> columns() const { return m_.columns(); }

  BasisChange inverse() const;
  // Coordinates in the old basis of a vector given in the new one.
  Vector to_old(const Vector& new_coords) const { return m_ * new_coords; }
  // Coordinates in the new basis of a vector given in the old one.
  Vector to_new(const Vector& old_coords) const;

  // this followed by next: the columns of next are read in this basis.
  BasisChange then(const BasisChange& next) const { return BasisChange(m_ * next.m_); }

 private:
  Matrix m_;
};

Vector dual_vector(const GramLattice& lattice, const Vector& functional);

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

// Gram matrix of the basis given by the columns of m: m^T * gram * m.
GramLattice change_basis(const GramLattice& lattice, const BasisChange& m);

struct BlowUp {
  GramLattice lattice;
  Vector canonical;
};

// L + <-d> with the canonical class extended by the exceptional class
// with coefficient one.
BlowUp blowup(const GramLattice& lattice, const Vector& canonical, const Integer& degree);

// K^2 from Noether's formula for chi(O_S) = 1, b0 = 1.
Integer noether_K2(const Integer& b1, const Integer& b2);

// True when rho = b2 - 2 b1 (mod 8). False is an obstruction to
// numerically exceptional collections of maximal length.
bool mod8_congruence_holds(const Integer& rho, const Integer& b1, const Integer& b2);

// Standard models.
GramLattice hyperbolic_plane();
GramLattice odd_unimodular(std::size_t n_plus, std::size_t n_minus);  // <1>^p + <-1>^q
GramLattice e8(bool negative);

}  // namespace nslat
