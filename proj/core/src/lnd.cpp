#include "orelab/lnd.hpp"

#include <algorithm>
#include <string>

#include "orelab/errors.hpp"

namespace orelab {

CheckResult check_derivation(const AlgebraPresentation& a, const Derivation& d) {
  SigmaDerivation sd{identity_automorphism(a.dim()), d.map};
  return check_sigma_derivation(a, sd);
}

bool locally_nilpotent(const Derivation& d) {
  return d.map.matrix.pow(d.dim()).is_zero();
}

std::optional<int> map_nil_index(const Matrix& m) {
  Matrix acc = Matrix::identity(m.rows());
  for (int k = 1; k <= m.rows(); ++k) {
    acc = acc * m;
    if (acc.is_zero()) return k;
  }
  return std::nullopt;
}

int degree(const Derivation& d, const Vec& x) {
  if (is_zero_vec(x)) throw MathError("degree of the zero element is undefined");
  if (!locally_nilpotent(d)) throw HypothesisError("derivation is not locally nilpotent");
  int n = 0;
  Vec cur = d.map(x);
  while (!is_zero_vec(cur)) {
    cur = d.map(cur);
    ++n;
  }
  return n;
}

Filtration kernel_filtration(const Derivation& d) {
  if (!locally_nilpotent(d)) throw HypothesisError("derivation is not locally nilpotent");
  Filtration f;
  int n = d.dim();
  Matrix power = d.map.matrix;  // d^{k+1} while building stage R_k
  for (;;) {
    Subspace stage = Subspace::span(n, nullspace(power));
    f.stages.push_back(stage);
    if (stage.dim() == n) break;
    power = power * d.map.matrix;
  }
  return f;
}

Automorphism exp_derivation(const Derivation& d) {
  if (!locally_nilpotent(d)) throw HypothesisError("derivation is not locally nilpotent");
  int n = d.dim();
  auto exp_of = [n](const Matrix& m) {
    Matrix acc = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (int j = 1; j <= n; ++j) {
      term = term * m;
      if (term.is_zero()) break;
      acc = acc + term.scaled(inverse_factorial(j));
    }
    return acc;
  };
  Matrix neg = d.map.matrix.scaled(Rational(-1));
  return Automorphism{LinearEndomap{exp_of(d.map.matrix)}, LinearEndomap{exp_of(neg)}};
}

Automorphism identity_automorphism(int n) {
  return Automorphism{LinearEndomap{Matrix::identity(n)}, LinearEndomap{Matrix::identity(n)}};
}

GrassmannBasis::GrassmannBasis(int g) : g_(g) {
  if (g < 1) throw MathError("Grassmann truncation needs g >= 1");
  for (int mask = 1; mask < (1 << g); ++mask) {
    GrassmannMonomial m;
    for (int b = 0; b < g; ++b) {
      if (mask & (1 << b)) m.push_back(b + 1);
    }
    monomials_.push_back(std::move(m));
  }
  std::sort(monomials_.begin(), monomials_.end(),
            [](const GrassmannMonomial& x, const GrassmannMonomial& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x < y;
            });
  for (size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = static_cast<int>(i);
}

int GrassmannBasis::index_of(const GrassmannMonomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::string GrassmannBasis::name_of(int index) const {
  std::string s;
  for (int i : monomials_[static_cast<size_t>(index)]) s += "e" + std::to_string(i);
  return s;
}

std::optional<std::pair<int, int>> GrassmannBasis::product(int i, int j) const {
  const GrassmannMonomial& x = monomials_[static_cast<size_t>(i)];
  const GrassmannMonomial& y = monomials_[static_cast<size_t>(j)];
  // Zero on a shared index; otherwise merge and count transpositions.
  GrassmannMonomial merged;
  merged.reserve(x.size() + y.size());
  int inversions = 0;
  for (int b : y) {
    for (int a : x) {
      if (a == b) return std::nullopt;
      if (a > b) ++inversions;
    }
  }
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(merged));
  int k = index_of(merged);
  if (k < 0) return std::nullopt;
  return std::make_pair(k, inversions % 2 == 0 ? 1 : -1);
}

std::vector<int> GrassmannBasis::derivative(int index) const {
  // Ordinary Leibniz: lowering one index keeps the list sorted; terms with a
  // repeated index vanish, so every surviving term has coefficient +1.
  const GrassmannMonomial& m = monomials_[static_cast<size_t>(index)];
  std::vector<int> out;
  for (size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 1) continue;
    if (k > 0 && m[k] - 1 == m[k - 1]) continue;
    GrassmannMonomial t = m;
    --t[k];
    int idx = index_of(t);
    if (idx >= 0) out.push_back(idx);
  }
  return out;
}

GrassmannInstance grassmann_algebra(int g) {
  if (g < 1 || g > 12) throw MathError("Grassmann truncation supports 1 <= g <= 12");
  GrassmannBasis basis(g);
  int dim = basis.dim();

  std::unordered_map<int64_t, AlgebraPresentation::SparseProduct> sc;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (auto p = basis.product(i, j)) {
        sc.emplace(static_cast<int64_t>(i) * dim + j,
                   AlgebraPresentation::SparseProduct{{p->first, Rational(p->second)}});
      }
    }
  }

  Matrix d(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int k : basis.derivative(j)) d.at(k, j) += Rational(1);
  }

  GrassmannInstance inst;
  inst.g = g;
  inst.algebra = AlgebraPresentation::from_products(dim, std::move(sc));
  inst.derivation = Derivation{LinearEndomap{std::move(d)}};
  return inst;
}

namespace {

using MonomialCombo = std::map<GrassmannMonomial, Rational>;

void accumulate(MonomialCombo& acc, const GrassmannMonomial& m, const Rational& c) {
  auto it = acc.find(m);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

// d of a single monomial, as index combinatorics (coefficient +1 terms).
std::vector<GrassmannMonomial> monomial_derivative(const GrassmannMonomial& m) {
  std::vector<GrassmannMonomial> out;
  for (size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 1) continue;
    if (k > 0 && m[k] - 1 == m[k - 1]) continue;
    GrassmannMonomial t = m;
    --t[k];
    out.push_back(std::move(t));
  }
  return out;
}

// Preimage of a single monomial under the lex-descent recursion. Candidates
// raise the top index by one; corrections are lex-smaller with the same
// length and index sum, so the recursion terminates.
const MonomialCombo& monomial_preimage(const GrassmannMonomial& m,
                                       std::map<GrassmannMonomial, MonomialCombo>& memo) {
  auto hit = memo.find(m);
  if (hit != memo.end()) return hit->second;

  MonomialCombo result;
  GrassmannMonomial candidate = m;
  ++candidate.back();
  accumulate(result, candidate, Rational(1));
  for (size_t k = 0; k + 1 < m.size(); ++k) {
    if (m[k] == 1) continue;
    GrassmannMonomial target = candidate;
    --target[k];
    if (k > 0 && target[k] == target[k - 1]) continue;  // vanishing correction
    const MonomialCombo& sub = monomial_preimage(target, memo);
    for (const auto& [mono, c] : sub) accumulate(result, mono, -c);
  }
  return memo.emplace(m, std::move(result)).first->second;
}

}  // namespace

std::map<GrassmannMonomial, Rational> grassmann_derivative(
    const std::map<GrassmannMonomial, Rational>& x) {
  MonomialCombo out;
  for (const auto& [m, c] : x) {
    for (const GrassmannMonomial& t : monomial_derivative(m)) accumulate(out, t, c);
  }
  return out;
}

Vec GrassmannPreimage::as_vector(const GrassmannBasis& basis) const {
  Vec v = zero_vec(basis.dim());
  for (const auto& [m, c] : element) {
    int idx = basis.index_of(m);
    if (idx < 0) throw DimensionError("preimage does not fit in this truncation");
    v[idx] = c;
  }
  return v;
}

GrassmannPreimage grassmann_preimage(int g, const GrassmannMonomial& m) {
  if (m.empty()) throw MathError("preimage of the empty monomial is undefined");
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1 || (i > 0 && m[i] <= m[i - 1])) {
      throw MathError("monomial indices must be strictly increasing and positive");
    }
  }
  if (m.back() >= g) {
    throw MathError("boundary: top index " + std::to_string(m.back()) +
                    " has no preimage within the g = " + std::to_string(g) + " truncation");
  }
  std::map<GrassmannMonomial, MonomialCombo> memo;
  GrassmannPreimage out;
  out.element = monomial_preimage(m, memo);
  int top = g;
  for (const auto& [mono, c] : out.element) top = std::max(top, mono.back());
  out.ambient_g = top;
  return out;
}

bool check_surjective(const Derivation& d) {
  Matrix m = d.map.matrix;
  std::vector<int> pivots = rref_in_place(m);
  return static_cast<int>(pivots.size()) == d.dim();
}

bool grassmann_surjective_below_boundary(int g) {
  GrassmannBasis basis(g);
  for (const GrassmannMonomial& m : basis.monomials()) {
    if (m.back() >= g) continue;
    GrassmannPreimage pre = grassmann_preimage(g, m);
    MonomialCombo back = grassmann_derivative(pre.element);
    if (back.size() != 1) return false;
    auto it = back.begin();
    if (it->first != m || !(it->second == Rational(1))) return false;
  }
  return true;
}

Prop22Report check_prop_22(const AlgebraPresentation& a, const Derivation& d) {
  Prop22Report report;
  if (!locally_nilpotent(d)) {
    report.hypothesis_failure = "derivation is not locally nilpotent";
    return report;
  }
  Subspace r0 = Subspace::span(a.dim(), nullspace(d.map.matrix));
  if (!is_commutative_on(a, r0)) {
    report.hypothesis_failure = "the invariants R^d are not commutative";
    return report;
  }
  report.hypotheses_ok = true;

  std::vector<Vec> cols;
  for (int jcol = 0; jcol < a.dim(); ++jcol) {
    cols.push_back(d.map.matrix.apply(unit_vec(a.dim(), jcol)));
  }
  Subspace image = Subspace::span(a.dim(), cols);
  Subspace j = jacobson_radical(a).space;
  report.s = j.intersect(r0).intersect(image);

  bool ok = true;
  for (const Vec& b : report.s.basis()) {
    auto idx = element_nil_index(a, b);
    if (!idx) {
      ok = false;
      break;
    }
    report.nil_indices.push_back(*idx);
  }

  SubalgebraPresentation sub = subalgebra_on(a, r0);
  RadicalChain chain = prime_radical_chain(sub.algebra);
  const Subspace& p = chain.stages.back().space;
  report.s_in_prime_radical = true;
  for (const Vec& b : report.s.basis()) {
    auto coords = r0.coordinates(b);
    if (!coords || !p.contains(Vec(coords->begin(), coords->end()))) {
      report.s_in_prime_radical = false;
      break;
    }
  }

  report.s_is_ideal_in_invariants = true;
  for (const Vec& b : report.s.basis()) {
    for (const Vec& r : r0.basis()) {
      if (!report.s.contains(a.multiply(b, r)) || !report.s.contains(a.multiply(r, b))) {
        report.s_is_ideal_in_invariants = false;
        break;
      }
    }
    if (!report.s_is_ideal_in_invariants) break;
  }

  report.conclusion_ok = ok && report.s_in_prime_radical && report.s_is_ideal_in_invariants;
  if (!report.conclusion_ok) {
    throw InternalError("nil-ideal conclusion failed although its hypotheses hold");
  }
  return report;
}

InducedPresentation induced_presentation(const AlgebraPresentation& a, const Derivation& d) {
  if (!locally_nilpotent(d)) throw HypothesisError("derivation is not locally nilpotent");
  InducedPresentation out;
  out.r0 = Subspace::span(a.dim(), nullspace(d.map.matrix));
  out.r1 = Subspace::span(a.dim(), nullspace(d.map.matrix * d.map.matrix));
  if (!is_commutative_on(a, out.r0)) {
    throw HypothesisError("the invariants R^d are not commutative");
  }

  // Generation: the subalgebra spanned by R_1 must be all of R.
  Subspace gen = out.r1;
  for (;;) {
    Subspace next = gen.sum(subspace_product(a, gen, gen));
    if (next == gen) break;
    gen = next;
  }
  if (gen.dim() != a.dim()) {
    throw HypothesisError("ker d^2 does not generate the algebra");
  }

  // T: basis rows of R_1 extending a basis of R_0 (deterministic complement).
  Subspace span_so_far = out.r0;
  for (const Vec& row : out.r1.basis()) {
    if (!span_so_far.contains(row)) {
      out.t_vectors.push_back(row);
      span_so_far = span_so_far.sum(Subspace::span(a.dim(), {row}));
    }
  }

  out.base = subalgebra_on(a, out.r0);
  int m = out.r0.dim();
  Automorphism id = identity_automorphism(m);
  for (size_t ti = 0; ti < out.t_vectors.size(); ++ti) {
    const Vec& t = out.t_vectors[ti];
    Matrix delta(m, m);
    for (int col = 0; col < m; ++col) {
      const Vec& r = out.base.basis[static_cast<size_t>(col)];
      Vec comm = sub(a.multiply(t, r), a.multiply(r, t));
      auto coords = out.r0.coordinates(comm);
      if (!coords) {
        throw InternalError("commutator with a complement generator left the invariants");
      }
      for (int row = 0; row < m; ++row) delta.at(row, col) = (*coords)[row];
    }
    SigmaDerivation sd{id, LinearEndomap{std::move(delta)}};
    CheckResult rc = check_sigma_derivation(out.base.algebra, sd);
    if (!rc) {
      throw InternalError("induced commutator map is not a derivation of the invariants");
    }
    out.family.gens.push_back(Generator{"t" + std::to_string(ti + 1), std::move(sd)});
  }
  return out;
}

TheoremBReport check_theorem_b(const AlgebraPresentation& a, const Derivation& d,
                               SurjectivityPolicy policy) {
  TheoremBReport report;
  report.policy = policy;
  if (policy == SurjectivityPolicy::exact && !check_surjective(d)) {
    report.hypothesis_failure = "derivation is not surjective";
    return report;
  }
  InducedPresentation induced;
  try {
    induced = induced_presentation(a, d);
  } catch (const HypothesisError& e) {
    report.hypothesis_failure = e.what();
    return report;
  }
  report.hypotheses_ok = true;

  // P<T>* realized inside R: right-multiplication saturation of the embedded
  // prime radical of R^d by the complement generators.
  RadicalChain chain = prime_radical_chain(induced.base.algebra);
  std::vector<Vec> rows;
  for (const Vec& v : chain.stages.back().space.basis()) {
    rows.push_back(induced.base.embed(v));
  }
  Subspace pext = Subspace::span(a.dim(), rows);
  for (;;) {
    std::vector<Vec> more = pext.basis();
    for (const Vec& b : pext.basis()) {
      for (const Vec& t : induced.t_vectors) more.push_back(a.multiply(b, t));
    }
    Subspace next = Subspace::span(a.dim(), more);
    if (next == pext) break;
    pext = next;
  }
  report.p_extension_dim = pext.dim();

  Subspace j = jacobson_radical(a).space;
  report.inclusion_ok = true;
  for (const Vec& x : j.basis()) {
    for (const Vec& y : j.basis()) {
      if (!pext.contains(a.multiply(x, y))) {
        report.inclusion_ok = false;
        break;
      }
    }
    if (!report.inclusion_ok) break;
  }
  report.j_nil_index = nilpotency_index(a, Ideal{j});
  report.ok = report.inclusion_ok && report.j_nil_index.has_value();
  return report;
}

}  // namespace orelab
