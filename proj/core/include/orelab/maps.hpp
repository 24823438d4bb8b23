#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orelab/algebra.hpp"
#include "orelab/linalg.hpp"

namespace orelab {

/// Enumeration and expansion budgets. The defaults suit desk-scale inputs;
/// the CLI can override them (ORELAB_TERM_CAP for term_cap).
struct Limits {
  int delta_cap = 8;                  // largest n accepted by delta_nk_image
  std::size_t term_cap = 1'000'000;   // total expanded skew-polynomial terms
};

/// K-linear endomorphism of the base algebra, as a matrix on coordinates.
struct LinearEndomap {
  Matrix matrix;

  Vec operator()(const Vec& v) const { return matrix.apply(v); }
  int dim() const { return matrix.rows(); }
};

/// Validated algebra automorphism together with its inverse.
struct Automorphism {
  LinearEndomap map;
  LinearEndomap inverse;
};

/// Pair (sigma, delta) with delta(xy) = delta(x) y + sigma(x) delta(y).
struct SigmaDerivation {
  Automorphism sigma;
  LinearEndomap delta;
};

/// One skew generator t with its commutation data.
struct Generator {
  std::string label;
  SigmaDerivation sd;
};

/// The finite generator set T_0 with G_0 = {sigma_t} and D_0 = {delta_t}.
/// Entries are a sequence: repeated maps are allowed and meaningful.
struct GeneratorFamily {
  std::vector<Generator> gens;

  int size() const { return static_cast<int>(gens.size()); }
  const Generator& operator[](int i) const { return gens[static_cast<size_t>(i)]; }
};

/// Invertible + multiplicative on all basis pairs (+ fixes the unit when
/// unital). The witness names the failing basis pair.
CheckResult check_automorphism(const AlgebraPresentation& a, const Matrix& m);

/// Builds a validated automorphism or throws MathError with the witness.
Automorphism automorphism_from_matrix(const AlgebraPresentation& a, const Matrix& m);

/// Leibniz law on all basis pairs.
CheckResult check_sigma_derivation(const AlgebraPresentation& a, const SigmaDerivation& sd);

/// delta sigma = q sigma delta exactly, with q admissible over Q (q != -1;
/// over Q the partial geometric sums 1 + q + ... + q^n vanish only at q = -1).
/// q = 0 is rejected.
bool check_q_skew(const SigmaDerivation& sd, const Rational& q);

/// Smallest subspace containing v and stable under every automorphism and its
/// inverse (the generated group, not just the monoid).
Subspace stable_saturation(const Subspace& v, const std::vector<Automorphism>& g);

/// Image sum over all n-fold compositions using exactly k derivations and
/// n - k automorphisms from the family.
Subspace delta_nk_image(const Subspace& v, int n, int k, const GeneratorFamily& fam,
                        const Limits& limits = {});

/// The stable tower: V_0 = sat(V), V_k = sat(sum_delta delta(V_{k-1})).
Subspace bold_vk(const Subspace& v, int k, const GeneratorFamily& fam);

/// V_0 .. V_kmax in one pass.
std::vector<Subspace> bold_vk_tower(const Subspace& v, int kmax, const GeneratorFamily& fam);

/// Every delta maps every chain stage into itself. The witness is
/// (stage index, generator index, basis row index).
CheckResult check_strong_invariance(const RadicalChain& chain,
                                    const std::vector<SigmaDerivation>& deltas);

std::vector<Automorphism> family_automorphisms(const GeneratorFamily& fam);
std::vector<SigmaDerivation> family_derivations(const GeneratorFamily& fam);

}  // namespace orelab
