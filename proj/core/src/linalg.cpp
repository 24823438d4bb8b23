#include "orelab/linalg.hpp"

#include <algorithm>
#include <string>

#include "orelab/errors.hpp"

namespace orelab {

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sizes differ in add");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sizes differ in sub");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Vec& v, const Rational& c) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }

Vec unit_vec(int n, int i) {
  Vec r(static_cast<size_t>(n));
  r[static_cast<size_t>(i)] = Rational(1);
  return r;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols_hint) {
  int cols = cols_hint;
  if (cols < 0) {
    if (rows.empty()) throw DimensionError("from_rows needs a column hint for empty input");
    cols = static_cast<int>(rows[0].size());
  }
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw DimensionError("row " + std::to_string(r) + " has mismatched length");
    }
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionError("matrix/vector size mismatch");
  Vec r(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    Rational acc;
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
    }
    r[i] = acc;
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product size mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (!o.at(k, j).is_zero()) r.at(i, j) += x * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum size mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference size mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::pow(int k) const {
  if (rows_ != cols_) throw DimensionError("power of a non-square matrix");
  Matrix acc = Matrix::identity(rows_);
  for (int i = 0; i < k; ++i) acc = acc * (*this);
  return acc;
}

Rational Matrix::trace() const {
  if (rows_ != cols_) throw DimensionError("trace of a non-square matrix");
  Rational t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<int> rref_in_place(Matrix& m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int p = -1;
    for (int r = lead; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) { p = r; break; }
    }
    if (p < 0) continue;
    if (p != lead) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(lead, c));
    }
    Rational inv = Rational(1) / m.at(lead, col);
    for (int c = col; c < m.cols(); ++c) m.at(lead, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::vector<Vec> nullspace(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x = zero_vec(m.cols());
    x[free] = Rational(1);
    for (size_t row = 0; row < pivots.size(); ++row) {
      x[pivots[row]] = -r.at(static_cast<int>(row), free);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw DimensionError("solve: rhs size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  Vec x = zero_vec(m.cols());
  for (size_t row = 0; row < pivots.size(); ++row) {
    x[pivots[row]] = aug.at(static_cast<int>(row), m.cols());
  }
  return x;
}

Subspace Subspace::zero(int ambient) { return Subspace(ambient, {}, {}); }

Subspace Subspace::full(int ambient) {
  std::vector<Vec> rows;
  rows.reserve(ambient);
  for (int i = 0; i < ambient; ++i) rows.push_back(unit_vec(ambient, i));
  std::vector<int> pivots(ambient);
  for (int i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(ambient, std::move(rows), std::move(pivots));
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& rows) {
  for (const Vec& r : rows) {
    if (static_cast<int>(r.size()) != ambient) {
      throw DimensionError("subspace row length differs from ambient dimension");
    }
  }
  if (rows.empty()) return zero(ambient);
  Matrix m = Matrix::from_rows(rows, ambient);
  std::vector<int> pivots = rref_in_place(m);
  std::vector<Vec> basis;
  basis.reserve(pivots.size());
  for (size_t i = 0; i < pivots.size(); ++i) basis.push_back(m.row(static_cast<int>(i)));
  return Subspace(ambient, std::move(basis), std::move(pivots));
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DimensionError("reduce: ambient mismatch");
  Vec r = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    const Rational& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    Rational f = c;  // pivot entries are 1
    for (int j = pivots_[i]; j < ambient_; ++j) {
      if (!basis_[i][j].is_zero()) r[j] -= f * basis_[i][j];
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("containment: ambient mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vec& v) { return contains(v); });
}

std::optional<std::vector<Rational>> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DimensionError("coordinates: ambient mismatch");
  std::vector<Rational> coeff(basis_.size());
  Vec r = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    Rational f = r[pivots_[i]];
    coeff[i] = f;
    if (f.is_zero()) continue;
    for (int j = pivots_[i]; j < ambient_; ++j) {
      if (!basis_[i][j].is_zero()) r[j] -= f * basis_[i][j];
    }
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return coeff;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace sum: ambient mismatch");
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("intersection: ambient mismatch");
  if (is_zero() || other.is_zero()) return zero(ambient_);
  // Solve sum_i u_i a_i = sum_j w_j b_j; kernel rows (u|w) give the intersection.
  int ka = dim(), kb = other.dim();
  Matrix sys(ambient_, ka + kb);
  for (int i = 0; i < ka; ++i)
    for (int c = 0; c < ambient_; ++c) sys.at(c, i) = basis_[i][c];
  for (int j = 0; j < kb; ++j)
    for (int c = 0; c < ambient_; ++c) sys.at(c, ka + j) = -other.basis_[j][c];
  std::vector<Vec> ker = nullspace(sys);
  std::vector<Vec> rows;
  for (const Vec& uw : ker) {
    Vec v = zero_vec(ambient_);
    for (int i = 0; i < ka; ++i) {
      if (!uw[i].is_zero()) v = add(v, scaled(basis_[i], uw[i]));
    }
    rows.push_back(std::move(v));
  }
  return span(ambient_, rows);
}

std::vector<int> Subspace::complement_indices() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<int> out;
  for (int i = 0; i < ambient_; ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

Subspace rref(int ambient, const std::vector<Vec>& rows) { return Subspace::span(ambient, rows); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) { return a.sum(b); }

bool contains(const Subspace& a, const Vec& v) { return a.contains(v); }

}  // namespace orelab
