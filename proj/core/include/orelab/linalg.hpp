#pragma once

#include <optional>
#include <vector>

#include "orelab/rational.hpp"

namespace orelab {

/// Coordinate vector over the exact rationals. Length is fixed by the
/// ambient algebra dimension wherever a Vec crosses a module boundary.
using Vec = std::vector<Rational>;

bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rational& c);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);

/// Dense exact matrix, row-major. Acts on column vectors: (M v)_r = sum_c M[r][c] v_c.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols_hint = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec apply(const Vec& v) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  Matrix transpose() const;
  Matrix pow(int k) const;
  Rational trace() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// In-place Gauss-Jordan to reduced row-echelon form.
/// Returns pivot column per surviving row; zero rows are moved to the bottom.
std::vector<int> rref_in_place(Matrix& m);

/// Basis (as rows) of the right kernel {x : Mx = 0}.
std::vector<Vec> nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// One exact solution of Mx = b (free variables set to zero), if consistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Canonical subspace of Q^ambient: basis rows in reduced row-echelon form.
/// Two equal subspaces compare equal as values.
class Subspace {
 public:
  Subspace() = default;  // the zero subspace of the zero space

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<Vec>& rows);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the basis rows, if v lies in the span.
  std::optional<std::vector<Rational>> coordinates(const Vec& v) const;
  /// Residue of v after eliminating the pivot coordinates; zero iff contained.
  Vec reduce(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Standard-basis indices spanning a complement (the non-pivot columns).
  std::vector<int> complement_indices() const;

  bool operator==(const Subspace& other) const = default;

 private:
  Subspace(int ambient, std::vector<Vec> basis, std::vector<int> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  int ambient_ = 0;
  std::vector<Vec> basis_;   // RREF rows, no zero rows
  std::vector<int> pivots_;  // pivot column of each basis row
};

/// Canonical reduced row-echelon basis of the span of the given rows.
Subspace rref(int ambient, const std::vector<Vec>& rows);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vec& v);

}  // namespace orelab
