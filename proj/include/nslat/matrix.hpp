#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nslat {

using Integer = mpz_class;
using Rational = mpq_class;

// Integer coordinates in a distinguished basis.
using Vector = std::vector<Integer>;

Vector make_vector(std::initializer_list<long> values);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Integer& s, const Vector& a);

// gcd of the coordinates; 0 for the zero vector.
Integer content(const Vector& x);
bool is_primitive(const Vector& x);

std::string to_string(const Vector& x);

// Dense row-major integer matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Integer> entries);
  static Matrix from_columns(std::span<const Vector> columns);
  static Matrix from_rows(std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> columns() const;
  void set_column(std::size_t j, const Vector& v);

  Matrix transpose() const;
  bool is_symmetric() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Fraction-free (Bareiss) elimination with row pivoting.
Integer determinant(const Matrix& m);

// Exact solution of a * x = b over the rationals; nullopt when a is
// singular.
std::optional<std::vector<Rational>> solve_rational(const Matrix& a, const Vector& b);

// Exact integer solution of a * x = b; nullopt when a is singular or the
// unique rational solution is not integral.
std::optional<Vector> solve_integer(const Matrix& a, const Vector& b);

// Inverse of a matrix with determinant +-1.
std::optional<Matrix> inverse_unimodular(const Matrix& m);

// Block-diagonal matrix.
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace nslat
