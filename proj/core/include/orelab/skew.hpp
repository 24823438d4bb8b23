#pragma once

#include <map>
#include <string>
#include <vector>

#include "orelab/algebra.hpp"
#include "orelab/maps.hpp"

namespace orelab {

/// Word over the generator set, stored as indices into the family.
/// Ordered by length, then lexicographically; the empty word is smallest.
struct Word {
  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  Word appended(int t) const;
  Word concat(const Word& o) const;

  bool operator==(const Word& o) const = default;
  bool operator<(const Word& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    return letters < o.letters;
  }
};

/// Element of the skew extension in left-coefficient normal form:
/// a finite sum of monomials r * w with r in the base algebra.
/// Zero coefficients are never stored.
class SkewPolynomial {
 public:
  SkewPolynomial() = default;

  static SkewPolynomial monomial(const Word& w, Vec coeff);
  static SkewPolynomial from_vector(Vec coeff);  // coefficient on the empty word

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Vec>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  int max_word_len() const;

  /// Adds c on word w, pruning the term when it cancels to zero.
  void add_term(const Word& w, const Vec& c);
  void add(const SkewPolynomial& o);

  SkewPolynomial scaled(const Rational& c) const;
  SkewPolynomial negated() const;

  bool operator==(const SkewPolynomial& o) const = default;

 private:
  std::map<Word, Vec> terms_;
};

/// The defining rewrite t r = sigma_t(r) t + delta_t(r), as a two-term
/// polynomial.
SkewPolynomial push_left(const AlgebraPresentation& a, const GeneratorFamily& fam, int t,
                         const Vec& r);

/// Product in normal form; exact distributive expansion. Word degrees never
/// exceed the sum of the factors' degrees.
SkewPolynomial multiply_skew(const AlgebraPresentation& a, const GeneratorFamily& fam,
                             const SkewPolynomial& p, const SkewPolynomial& q,
                             const Limits& limits = {});

/// All sequences b with b_1 + ... + b_k <= a_1 + ... + a_k for every k,
/// in lexicographic order.
std::vector<std::vector<int>> enumerate_b(const std::vector<int>& a);

/// Exact span arithmetic for finite sets of skew polynomials, by flattening
/// onto the finitely many words that occur.
std::vector<SkewPolynomial> compress_span(const std::vector<SkewPolynomial>& gens, int coeff_dim);

struct InclusionReport {
  bool holds = false;
  std::vector<int> a;
  int lhs_generators = 0;
  int b_count = 0;
  std::vector<std::pair<int, int>> rhs_block_dims;  // (word length, coefficient-space dim)
  std::string failure;
};

/// Checks T_0^{a_1} V T_0^{a_2} ... V T_0^{a_m} V against the sum over
/// dominated exponent sequences of products of delta_nk images times trailing
/// words, term by term. Entries of a must be positive.
InclusionReport verify_product_inclusion(const AlgebraPresentation& a, const Subspace& v,
                                         const std::vector<int>& exponents,
                                         const GeneratorFamily& fam, const Limits& limits = {});

/// Certificate that a finitely generated piece of the extension is nilpotent:
/// the family F, an ideal I containing its union, the index s, and the bound
/// l = 2 n s, together with the verification transcript.
struct NilpotencyCertificate {
  std::vector<Subspace> family;
  Ideal ideal;
  int n = 1;
  int s = 1;
  int bound_l = 2;
  bool verified = false;
  int stage = 0;                // source chain stage for descent certificates
  std::vector<int> power_dims;  // dim of the compressed span at each exponent
  int max_word_len = 0;         // largest word degree in the final span
};

/// Nilpotency certificate for (sum_{i<=N} V T_0^i) under the hypothesis
/// R^n contained in the Wedderburn radical for some n > 1 (smallest such n).
NilpotencyCertificate certify_theorem_14(const AlgebraPresentation& a, const Subspace& v,
                                         const GeneratorFamily& fam, int big_n,
                                         const Limits& limits = {});

/// Descent through the prime radical chain: one certificate per stage,
/// assuming the chain is strongly invariant under the derivations.
std::vector<NilpotencyCertificate> certify_theorem_16(const AlgebraPresentation& a,
                                                      const GeneratorFamily& fam, int big_n,
                                                      const Limits& limits = {});

}  // namespace orelab
