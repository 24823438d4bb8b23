#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orelab/algebra.hpp"
#include "orelab/maps.hpp"

namespace orelab {

/// Ordinary derivation (sigma = identity). Locally nilpotent on a
/// finite-dimensional algebra iff the matrix is nilpotent.
struct Derivation {
  LinearEndomap map;

  int dim() const { return map.dim(); }
};

/// Leibniz law with sigma = identity on all basis pairs.
CheckResult check_derivation(const AlgebraPresentation& a, const Derivation& d);

bool locally_nilpotent(const Derivation& d);
/// Least k with d^k = 0 as a matrix.
std::optional<int> map_nil_index(const Matrix& m);

/// Least n with d^{n+1}(x) = 0. Rejects x = 0.
int degree(const Derivation& d, const Vec& x);

/// Ascending kernels R_n = ker d^{n+1} up to the full space.
struct Filtration {
  std::vector<Subspace> stages;
};

Filtration kernel_filtration(const Derivation& d);

/// Finite exponential sum of a locally nilpotent derivation, with its exact
/// inverse exp(-d).
Automorphism exp_derivation(const Derivation& d);

/// Identity automorphism of a dim-n algebra.
Automorphism identity_automorphism(int n);

/// Exterior monomial: strictly increasing generator indices, 1-based.
using GrassmannMonomial = std::vector<int>;

/// Basis bookkeeping for the g-generator truncation: the nonempty subsets of
/// {1..g} in size-then-lex order, product signs, and the shift derivation.
class GrassmannBasis {
 public:
  explicit GrassmannBasis(int g);

  int g() const { return g_; }
  int dim() const { return static_cast<int>(monomials_.size()); }
  const std::vector<GrassmannMonomial>& monomials() const { return monomials_; }
  int index_of(const GrassmannMonomial& m) const;  // -1 when absent
  std::string name_of(int index) const;            // e.g. "e1e3"

  /// Product of basis monomials: (index, sign) or nullopt when zero.
  std::optional<std::pair<int, int>> product(int i, int j) const;

  /// d(monomial) as (index, +1) terms under the index-lowering derivation.
  std::vector<int> derivative(int index) const;

 private:
  int g_;
  std::vector<GrassmannMonomial> monomials_;
  std::map<GrassmannMonomial, int> index_;
};

struct GrassmannInstance {
  int g = 0;
  AlgebraPresentation algebra;
  Derivation derivation;
};

/// Truncated exterior algebra on g anticommuting generators (non-unital,
/// dim 2^g - 1) with the locally nilpotent derivation e_{i+1} -> e_i.
GrassmannInstance grassmann_algebra(int g);

/// Preimage under the shift derivation, by the lex-descent recursion. The
/// recursion may need generator indices beyond g; the result reports the
/// truncation it actually lives in (ambient_g >= g). Monomials with top
/// index >= g are rejected: their very first candidate already leaves the
/// declared truncation.
struct GrassmannPreimage {
  int ambient_g = 0;
  std::map<GrassmannMonomial, Rational> element;

  Vec as_vector(const GrassmannBasis& basis) const;
};

GrassmannPreimage grassmann_preimage(int g, const GrassmannMonomial& m);

/// Derivative of a monomial combination, as pure index combinatorics.
std::map<GrassmannMonomial, Rational> grassmann_derivative(
    const std::map<GrassmannMonomial, Rational>& x);

/// Full row rank (image = whole space). Never true for a locally nilpotent
/// derivation in finite dimension.
bool check_surjective(const Derivation& d);

/// The desk-scale shadow of surjectivity for the truncation: every basis
/// monomial below the boundary (top index < g) has a verified preimage.
bool grassmann_surjective_below_boundary(int g);

struct Prop22Report {
  bool hypotheses_ok = false;
  std::string hypothesis_failure;
  Subspace s = Subspace::zero(0);    // J(R) meet R^d meet d(R)
  std::vector<int> nil_indices;      // per basis element of s
  bool s_is_ideal_in_invariants = false;
  bool s_in_prime_radical = false;
  bool conclusion_ok = false;
};

/// Nil-ideal test for J(R) meet R^d meet d(R) inside the invariants, with the
/// prime-radical membership computed on the induced presentation of R^d.
/// Hypothesis failures come back in the report; a conclusion failure under
/// valid hypotheses throws InternalError.
Prop22Report check_prop_22(const AlgebraPresentation& a, const Derivation& d);

/// The skew presentation R = R^d<T; id, D> induced by a locally nilpotent
/// derivation with commutative kernel, T spanning a complement of R_0 in R_1.
struct InducedPresentation {
  SubalgebraPresentation base;      // R^d on its own basis
  GeneratorFamily family;           // sigma = id, delta_t = [t, -] on R^d
  std::vector<Vec> t_vectors;       // complement representatives, parent coords
  Subspace r0 = Subspace::zero(0);  // invariants
  Subspace r1 = Subspace::zero(0);  // ker d^2
};

InducedPresentation induced_presentation(const AlgebraPresentation& a, const Derivation& d);

/// How the surjectivity hypothesis is discharged at desk scale.
enum class SurjectivityPolicy {
  exact,     // full row rank of the matrix
  boundary,  // caller vouches via the truncation-boundary check
};

struct TheoremBReport {
  bool hypotheses_ok = false;
  std::string hypothesis_failure;
  SurjectivityPolicy policy = SurjectivityPolicy::exact;
  bool inclusion_ok = false;            // J(R)^2 inside P<T>*
  std::optional<int> j_nil_index;       // direct local nilpotency of J(R)
  int p_extension_dim = 0;              // dim of span{P * words} inside R
  bool ok = false;
};

/// End-to-end pipeline: induced presentation, prime radical P of R^d, the
/// inclusion J(R)^2 inside span{P * T-words}, and direct nilpotency of J(R).
TheoremBReport check_theorem_b(const AlgebraPresentation& a, const Derivation& d,
                               SurjectivityPolicy policy = SurjectivityPolicy::exact);

}  // namespace orelab
