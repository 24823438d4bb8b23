#include "orelab/algebra.hpp"

#include <algorithm>
#include <string>

#include "orelab/errors.hpp"

namespace orelab {

AlgebraPresentation AlgebraPresentation::from_table(int dim,
                                                    const std::vector<std::vector<Vec>>& table,
                                                    std::optional<Vec> unit) {
  if (static_cast<int>(table.size()) != dim) throw DimensionError("structure table: wrong row count");
  std::unordered_map<int64_t, SparseProduct> sc;
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(table[i].size()) != dim) {
      throw DimensionError("structure table: wrong column count in row " + std::to_string(i));
    }
    for (int j = 0; j < dim; ++j) {
      const Vec& v = table[i][j];
      if (static_cast<int>(v.size()) != dim) {
        throw DimensionError("structure table: product vector has wrong length");
      }
      SparseProduct p;
      for (int k = 0; k < dim; ++k) {
        if (!v[k].is_zero()) p.emplace_back(k, v[k]);
      }
      if (!p.empty()) sc.emplace(key(i, j, dim), std::move(p));
    }
  }
  return from_products(dim, std::move(sc), std::move(unit));
}

AlgebraPresentation AlgebraPresentation::from_products(
    int dim, std::unordered_map<int64_t, SparseProduct> products, std::optional<Vec> unit) {
  AlgebraPresentation a;
  a.dim_ = dim;
  a.sc_ = std::move(products);
  if (unit) {
    if (static_cast<int>(unit->size()) != dim) throw DimensionError("unit vector has wrong length");
    a.unital_ = true;
    a.unit_ = std::move(*unit);
  }
  return a;
}

const AlgebraPresentation::SparseProduct* AlgebraPresentation::product(int i, int j) const {
  auto it = sc_.find(key(i, j, dim_));
  return it == sc_.end() ? nullptr : &it->second;
}

Vec AlgebraPresentation::basis_product(int i, int j) const {
  Vec v = zero_vec(dim_);
  if (const SparseProduct* p = product(i, j)) {
    for (const auto& [k, c] : *p) v[k] = c;
  }
  return v;
}

Vec AlgebraPresentation::multiply(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
    throw DimensionError("multiply: vector dimension mismatch");
  }
  Vec r = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const SparseProduct* p = product(i, j);
      if (!p) continue;
      Rational f = x[i] * y[j];
      for (const auto& [k, c] : *p) r[k] += f * c;
    }
  }
  return r;
}

Matrix AlgebraPresentation::left_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      const SparseProduct* p = product(i, j);
      if (!p) continue;
      for (const auto& [k, c] : *p) m.at(k, j) += x[i] * c;
    }
  }
  return m;
}

Matrix AlgebraPresentation::right_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      const SparseProduct* p = product(j, i);
      if (!p) continue;
      for (const auto& [k, c] : *p) m.at(k, j) += x[i] * c;
    }
  }
  return m;
}

Vec AlgebraPresentation::left_traces() const {
  // trace(L_{e_i}) = sum_m c[i][m][m]
  Vec t = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    Rational acc;
    for (int m = 0; m < dim_; ++m) {
      if (const SparseProduct* p = product(i, m)) {
        for (const auto& [k, c] : *p) {
          if (k == m) acc += c;
        }
      }
    }
    t[i] = acc;
  }
  return t;
}

CheckResult validate_presentation(const AlgebraPresentation& a) {
  int n = a.dim();
  // Cache e_i e_j once; associativity then costs one sparse pass per triple.
  std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[i][j] = a.basis_product(i, j);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vec lhs = a.multiply(prod[i][j], unit_vec(n, k));
        Vec rhs = a.multiply(unit_vec(n, i), prod[j][k]);
        if (lhs != rhs) {
          return CheckResult::fail({i, j, k}, "associativity fails on basis triple");
        }
      }
    }
  }
  if (a.is_unital()) {
    for (int i = 0; i < n; ++i) {
      Vec e = unit_vec(n, i);
      if (a.multiply(a.unit(), e) != e) return CheckResult::fail({i}, "unit fails on the left");
      if (a.multiply(e, a.unit()) != e) return CheckResult::fail({i}, "unit fails on the right");
    }
  }
  return CheckResult::pass();
}

bool is_ideal(const AlgebraPresentation& a, const Subspace& s) {
  int n = a.dim();
  for (const Vec& v : s.basis()) {
    for (int i = 0; i < n; ++i) {
      Vec e = unit_vec(n, i);
      if (!s.contains(a.multiply(e, v))) return false;
      if (!s.contains(a.multiply(v, e))) return false;
    }
  }
  return true;
}

bool is_subalgebra(const AlgebraPresentation& a, const Subspace& s) {
  for (const Vec& u : s.basis())
    for (const Vec& v : s.basis())
      if (!s.contains(a.multiply(u, v))) return false;
  return true;
}

Subspace subspace_product(const AlgebraPresentation& a, const Subspace& u, const Subspace& v) {
  std::vector<Vec> rows;
  rows.reserve(static_cast<size_t>(u.dim()) * v.dim());
  for (const Vec& x : u.basis())
    for (const Vec& y : v.basis()) rows.push_back(a.multiply(x, y));
  return Subspace::span(a.dim(), rows);
}

Subspace power_span(const AlgebraPresentation& a, int n) {
  if (n < 1) throw MathError("power_span needs n >= 1");
  Subspace full = Subspace::full(a.dim());
  Subspace acc = full;
  for (int i = 2; i <= n; ++i) acc = subspace_product(a, acc, full);
  return acc;
}

Ideal ideal_generated_by(const AlgebraPresentation& a, const Subspace& s) {
  int n = a.dim();
  Subspace cur = s;
  for (;;) {
    std::vector<Vec> rows = cur.basis();
    for (const Vec& v : cur.basis()) {
      for (int i = 0; i < n; ++i) {
        Vec e = unit_vec(n, i);
        rows.push_back(a.multiply(e, v));
        rows.push_back(a.multiply(v, e));
      }
    }
    Subspace next = Subspace::span(n, rows);
    if (next == cur) return Ideal{cur};
    cur = next;
  }
}

std::optional<int> nilpotency_index(const AlgebraPresentation& a, const Ideal& i) {
  if (i.space.is_zero()) return 1;
  Subspace power = i.space;
  int s = 1;
  while (s <= a.dim() + 1) {  // powers of an ideal strictly shrink or stabilize
    Subspace next = subspace_product(a, power, i.space);
    ++s;
    if (next.is_zero()) return s;
    if (next == power) return std::nullopt;  // stabilized nonzero
    power = next;
  }
  return std::nullopt;
}

bool element_nilpotent(const AlgebraPresentation& a, const Vec& x) {
  // x nilpotent iff L_x nilpotent: L_x^k = L_{x^k}, and L_x^k = 0 gives x^{k+1} = 0.
  Matrix l = a.left_mult(x);
  return l.pow(a.dim()).is_zero();
}

std::optional<int> element_nil_index(const AlgebraPresentation& a, const Vec& x) {
  if (!element_nilpotent(a, x)) return std::nullopt;
  Vec p = x;
  int s = 1;
  while (!is_zero_vec(p)) {
    p = a.multiply(p, x);
    ++s;
  }
  return s;
}

AlgebraPresentation adjoin_unit(const AlgebraPresentation& a) {
  int n = a.dim();
  int dim = n + 1;  // formal unit is basis index n
  std::unordered_map<int64_t, AlgebraPresentation::SparseProduct> sc;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (const auto* p = a.product(i, j)) {
        sc.emplace(static_cast<int64_t>(i) * dim + j, *p);
      }
    }
  }
  for (int i = 0; i <= n; ++i) {
    sc.emplace(static_cast<int64_t>(n) * dim + i, AlgebraPresentation::SparseProduct{{i, Rational(1)}});
    if (i < n) {
      sc.emplace(static_cast<int64_t>(i) * dim + n, AlgebraPresentation::SparseProduct{{i, Rational(1)}});
    }
  }
  return AlgebraPresentation::from_products(dim, std::move(sc), unit_vec(dim, n));
}

Ideal wedderburn_radical(const AlgebraPresentation& a) {
  int n = a.dim();
  if (n == 0) return Ideal{Subspace::zero(0)};
  // Radical of the trace form Tr(L_{xy}) on the unital hull equals the
  // radical of the hull, which lives inside A and equals W(A).
  AlgebraPresentation hull = adjoin_unit(a);
  int hn = hull.dim();
  Vec t = hull.left_traces();
  Matrix gram(hn, hn);
  for (int i = 0; i < hn; ++i) {
    for (int j = 0; j < hn; ++j) {
      Rational acc;
      if (const auto* p = hull.product(i, j)) {
        for (const auto& [k, c] : *p) acc += c * t[k];
      }
      gram.at(i, j) = acc;
    }
  }
  std::vector<Vec> ker = nullspace(gram);
  std::vector<Vec> rows;
  for (const Vec& v : ker) {
    if (!v[n].is_zero()) {
      throw InternalError("trace-form kernel leaves the base algebra");
    }
    rows.push_back(Vec(v.begin(), v.begin() + n));
  }
  Subspace cand = Subspace::span(n, rows);
  Ideal rad{cand};
  if (!is_ideal(a, cand)) throw InternalError("trace-form radical candidate is not an ideal");
  if (!nilpotency_index(a, rad)) {
    throw InternalError("trace-form radical candidate is not nilpotent");
  }
  return rad;
}

Vec QuotientPresentation::project(const Vec& parent_vec) const {
  Vec reduced = ideal_space.reduce(parent_vec);
  Vec out(complement.size());
  for (size_t i = 0; i < complement.size(); ++i) out[i] = reduced[complement[i]];
  return out;
}

Vec QuotientPresentation::lift(const Vec& quotient_vec) const {
  Vec out = zero_vec(ideal_space.ambient());
  for (size_t i = 0; i < complement.size(); ++i) out[complement[i]] = quotient_vec[i];
  return out;
}

QuotientPresentation quotient_by(const AlgebraPresentation& a, const Subspace& ideal_space) {
  if (!is_ideal(a, ideal_space)) throw MathError("quotient by a subspace that is not an ideal");
  QuotientPresentation q;
  q.ideal_space = ideal_space;
  q.complement = ideal_space.complement_indices();
  int m = static_cast<int>(q.complement.size());

  std::unordered_map<int64_t, AlgebraPresentation::SparseProduct> sc;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Vec prod = a.multiply(unit_vec(a.dim(), q.complement[i]), unit_vec(a.dim(), q.complement[j]));
      Vec reduced = ideal_space.reduce(prod);
      AlgebraPresentation::SparseProduct p;
      for (int k = 0; k < m; ++k) {
        if (!reduced[q.complement[k]].is_zero()) p.emplace_back(k, reduced[q.complement[k]]);
      }
      if (!p.empty()) sc.emplace(static_cast<int64_t>(i) * m + j, std::move(p));
    }
  }
  std::optional<Vec> unit;
  if (a.is_unital() && m > 0) {
    Vec proj = ideal_space.reduce(a.unit());
    Vec u(m);
    for (int k = 0; k < m; ++k) u[k] = proj[q.complement[k]];
    if (!is_zero_vec(u)) unit = std::move(u);
  }
  q.algebra = AlgebraPresentation::from_products(m, std::move(sc), std::move(unit));
  CheckResult rc = validate_presentation(q.algebra);
  if (!rc) throw InternalError("induced quotient presentation fails validation: " + rc.detail);
  return q;
}

Vec SubalgebraPresentation::embed(const Vec& sub_vec) const {
  if (basis.empty()) return {};
  Vec out = zero_vec(static_cast<int>(basis[0].size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!sub_vec[i].is_zero()) out = add(out, scaled(basis[i], sub_vec[i]));
  }
  return out;
}

SubalgebraPresentation subalgebra_on(const AlgebraPresentation& a, const Subspace& s) {
  if (!is_subalgebra(a, s)) throw MathError("subspace is not multiplicatively closed");
  SubalgebraPresentation out;
  out.basis = s.basis();
  int m = s.dim();
  std::unordered_map<int64_t, AlgebraPresentation::SparseProduct> sc;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Vec prod = a.multiply(out.basis[i], out.basis[j]);
      auto coords = s.coordinates(prod);
      if (!coords) throw InternalError("closed subspace product left the subspace");
      AlgebraPresentation::SparseProduct p;
      for (int k = 0; k < m; ++k) {
        if (!(*coords)[k].is_zero()) p.emplace_back(k, (*coords)[k]);
      }
      if (!p.empty()) sc.emplace(static_cast<int64_t>(i) * m + j, std::move(p));
    }
  }
  std::optional<Vec> unit;
  if (a.is_unital()) {
    if (auto coords = s.coordinates(a.unit())) unit = *coords;
  }
  out.algebra = AlgebraPresentation::from_products(m, std::move(sc), std::move(unit));
  CheckResult rc = validate_presentation(out.algebra);
  if (!rc) throw InternalError("induced subalgebra presentation fails validation: " + rc.detail);
  return out;
}

RadicalChain prime_radical_chain(const AlgebraPresentation& a) {
  RadicalChain chain;
  chain.stages.push_back(Ideal{Subspace::zero(a.dim())});
  for (;;) {
    const Subspace& cur = chain.stages.back().space;
    QuotientPresentation q = quotient_by(a, cur);
    Ideal wbar = wedderburn_radical(q.algebra);
    if (wbar.space.is_zero()) break;
    std::vector<Vec> rows = cur.basis();
    for (const Vec& v : wbar.space.basis()) rows.push_back(q.lift(v));
    Subspace next = Subspace::span(a.dim(), rows);
    chain.stages.push_back(Ideal{next});
    if (static_cast<int>(chain.stages.size()) > a.dim() + 1) {
      throw InternalError("prime radical chain failed to stabilize");
    }
  }
  chain.stabilization_index = static_cast<int>(chain.stages.size()) - 1;
  return chain;
}

Ideal jacobson_radical(const AlgebraPresentation& a) {
  // Coincides with the largest nilpotent ideal in finite dimension over Q.
  return wedderburn_radical(a);
}

bool power_in_radical(const AlgebraPresentation& a, int n) {
  if (n < 1) throw MathError("power_in_radical needs n >= 1");
  Subspace w = wedderburn_radical(a).space;
  return w.contains(power_span(a, n));
}

bool is_commutative_on(const AlgebraPresentation& a, const Subspace& s) {
  const auto& basis = s.basis();
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      if (a.multiply(basis[i], basis[j]) != a.multiply(basis[j], basis[i])) return false;
    }
  }
  return true;
}

}  // namespace orelab
