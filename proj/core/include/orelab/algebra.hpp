#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orelab/linalg.hpp"

namespace orelab {

/// Outcome of a validator, with a witness locating the first failure.
struct CheckResult {
  bool ok = true;
  std::vector<int> witness;  // basis indices of the failing identity, if any
  std::string detail;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::vector<int> w, std::string d) {
    return {false, std::move(w), std::move(d)};
  }
};

/// Finite-dimensional associative algebra over Q, presented by structure
/// constants e_i e_j = sum_k c[i][j][k] e_k. Products of basis pairs are
/// stored sparsely; absent pairs multiply to zero. Non-unital algebras are
/// first-class.
class AlgebraPresentation {
 public:
  using SparseProduct = std::vector<std::pair<int, Rational>>;  // (k, c), sorted by k

  AlgebraPresentation() = default;
  /// Dense constructor: table[i][j] is the coordinate vector of e_i e_j.
  static AlgebraPresentation from_table(int dim, const std::vector<std::vector<Vec>>& table,
                                        std::optional<Vec> unit = std::nullopt);
  /// Sparse constructor: products maps packed (i,j) to nonzero product vectors.
  static AlgebraPresentation from_products(int dim,
                                           std::unordered_map<int64_t, SparseProduct> products,
                                           std::optional<Vec> unit = std::nullopt);

  int dim() const { return dim_; }
  bool is_unital() const { return unital_; }
  const Vec& unit() const { return unit_; }

  /// Product of basis elements e_i e_j, sparse; nullptr means zero.
  const SparseProduct* product(int i, int j) const;
  Vec basis_product(int i, int j) const;

  /// Bilinear extension of the structure constants.
  Vec multiply(const Vec& x, const Vec& y) const;

  /// Matrix of left multiplication y -> x y.
  Matrix left_mult(const Vec& x) const;
  /// Matrix of right multiplication y -> y x.
  Matrix right_mult(const Vec& x) const;

  /// trace(L_{e_i}) for all i, used by the radical computation.
  Vec left_traces() const;

 private:
  static int64_t key(int i, int j, int dim) {
    return static_cast<int64_t>(i) * dim + j;
  }

  int dim_ = 0;
  bool unital_ = false;
  Vec unit_;
  std::unordered_map<int64_t, SparseProduct> sc_;
};

/// Associativity on all basis triples, and the unit law when unital.
/// On failure the witness holds the offending triple (i, j, k).
CheckResult validate_presentation(const AlgebraPresentation& a);

/// Two-sided ideal, represented by its underlying subspace.
struct Ideal {
  Subspace space;
};

/// Ascending chain 0 = P_0 < P_1 < ... stabilizing at the prime radical.
struct RadicalChain {
  std::vector<Ideal> stages;  // stages[0] is zero; last stage is P(R)
  int stabilization_index = 0;
};

bool is_ideal(const AlgebraPresentation& a, const Subspace& s);
bool is_subalgebra(const AlgebraPresentation& a, const Subspace& s);

/// span{ u v : u in U, v in V }.
Subspace subspace_product(const AlgebraPresentation& a, const Subspace& u, const Subspace& v);

/// R^n: the span of all n-fold products of basis elements.
Subspace power_span(const AlgebraPresentation& a, int n);

/// Smallest two-sided ideal containing s, by saturation under left/right
/// multiplication by basis elements. Contains s itself in the non-unital case.
Ideal ideal_generated_by(const AlgebraPresentation& a, const Subspace& s);

/// Least s with I^s = 0, or nullopt when subspace powers stabilize nonzero.
std::optional<int> nilpotency_index(const AlgebraPresentation& a, const Ideal& i);

/// True iff x^s = 0 for some s (equivalently, L_x is nilpotent).
bool element_nilpotent(const AlgebraPresentation& a, const Vec& x);
/// Least s with x^s = 0; nullopt when x is not nilpotent.
std::optional<int> element_nil_index(const AlgebraPresentation& a, const Vec& x);

/// Largest nilpotent ideal (the sum of all nilpotent ideals in finite
/// dimension). Computed by the characteristic-zero trace form on the unital
/// hull, then re-checked to be a nilpotent ideal.
Ideal wedderburn_radical(const AlgebraPresentation& a);

/// Quotient algebra on the complement of an ideal, with projection and lift.
struct QuotientPresentation {
  AlgebraPresentation algebra;
  Subspace ideal_space;
  std::vector<int> complement;  // standard-basis indices of the parent

  Vec project(const Vec& parent_vec) const;
  Vec lift(const Vec& quotient_vec) const;
};

QuotientPresentation quotient_by(const AlgebraPresentation& a, const Subspace& ideal_space);

/// Presentation of a multiplicatively closed subspace on its own basis.
struct SubalgebraPresentation {
  AlgebraPresentation algebra;
  std::vector<Vec> basis;  // rows in parent coordinates

  Vec embed(const Vec& sub_vec) const;
};

SubalgebraPresentation subalgebra_on(const AlgebraPresentation& a, const Subspace& s);

/// Quotient-and-lift iteration of the Wedderburn radical until stabilization.
RadicalChain prime_radical_chain(const AlgebraPresentation& a);

/// Equals the Wedderburn radical in finite dimension over Q; the
/// quasi-regularity characterization is exercised by the test suite.
Ideal jacobson_radical(const AlgebraPresentation& a);

/// True iff the span of all n-fold products of basis elements lies in the
/// Wedderburn radical.
bool power_in_radical(const AlgebraPresentation& a, int n);

/// True iff xy = yx for all basis pairs of s.
bool is_commutative_on(const AlgebraPresentation& a, const Subspace& s);

/// Unital hull Q + A, with the formal unit as the last basis vector.
AlgebraPresentation adjoin_unit(const AlgebraPresentation& a);

}  // namespace orelab
