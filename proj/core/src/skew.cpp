#include "orelab/skew.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "orelab/errors.hpp"

namespace orelab {

namespace {

struct ExpansionGuard {
  std::size_t cap;
  std::size_t used = 0;

  void charge(std::size_t n) {
    used += n;
    if (used > cap) {
      throw CapExceededError("skew expansion exceeded the term cap of " + std::to_string(cap));
    }
  }
};

void check_family(const AlgebraPresentation& a, const GeneratorFamily& fam) {
  for (const Generator& g : fam.gens) {
    if (g.sd.sigma.map.dim() != a.dim() || g.sd.delta.dim() != a.dim()) {
      throw DimensionError("generator family does not act on this algebra");
    }
  }
}

void check_letter(const GeneratorFamily& fam, int t) {
  if (t < 0 || t >= fam.size()) throw MathError("unknown generator label index");
}

// u * s in normal form: peel letters off the right of u with the rewrite rule.
SkewPolynomial push_word_through(const GeneratorFamily& fam, const Word& u, const Vec& s,
                                 ExpansionGuard& guard) {
  SkewPolynomial out;
  if (is_zero_vec(s)) return out;
  if (u.empty()) {
    out.add_term(Word{}, s);
    return out;
  }
  int t = u.letters.back();
  Word head{std::vector<int>(u.letters.begin(), u.letters.end() - 1)};
  Vec sig = fam[t].sd.sigma.map(s);
  Vec del = fam[t].sd.delta(s);
  if (!is_zero_vec(sig)) {
    SkewPolynomial left = push_word_through(fam, head, sig, guard);
    guard.charge(left.term_count());
    for (const auto& [w, c] : left.terms()) out.add_term(w.appended(t), c);
  }
  if (!is_zero_vec(del)) {
    SkewPolynomial left = push_word_through(fam, head, del, guard);
    guard.charge(left.term_count());
    for (const auto& [w, c] : left.terms()) out.add_term(w, c);
  }
  return out;
}

// (c * u) * v for a base-algebra element v.
SkewPolynomial times_vector(const AlgebraPresentation& a, const GeneratorFamily& fam,
                            const SkewPolynomial& p, const Vec& v, ExpansionGuard& guard) {
  SkewPolynomial out;
  for (const auto& [u, c] : p.terms()) {
    SkewPolynomial pushed = push_word_through(fam, u, v, guard);
    for (const auto& [w, cw] : pushed.terms()) {
      Vec coeff = a.multiply(c, cw);
      if (!is_zero_vec(coeff)) out.add_term(w, coeff);
    }
  }
  return out;
}

SkewPolynomial times_word(const SkewPolynomial& p, const Word& w) {
  SkewPolynomial out;
  for (const auto& [u, c] : p.terms()) out.add_term(u.concat(w), c);
  return out;
}

std::vector<Word> all_words(int alphabet, int len) {
  std::vector<Word> out{Word{}};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<size_t>(alphabet));
    for (const Word& w : out)
      for (int t = 0; t < alphabet; ++t) next.push_back(w.appended(t));
    out = std::move(next);
  }
  return out;
}

}  // namespace

Word Word::appended(int t) const {
  Word w = *this;
  w.letters.push_back(t);
  return w;
}

Word Word::concat(const Word& o) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

SkewPolynomial SkewPolynomial::monomial(const Word& w, Vec coeff) {
  SkewPolynomial p;
  p.add_term(w, coeff);
  return p;
}

SkewPolynomial SkewPolynomial::from_vector(Vec coeff) { return monomial(Word{}, std::move(coeff)); }

int SkewPolynomial::max_word_len() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

void SkewPolynomial::add_term(const Word& w, const Vec& c) {
  if (is_zero_vec(c)) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second = orelab::add(it->second, c);
  if (is_zero_vec(it->second)) terms_.erase(it);
}

void SkewPolynomial::add(const SkewPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
}

SkewPolynomial SkewPolynomial::scaled(const Rational& c) const {
  SkewPolynomial p;
  if (c.is_zero()) return p;
  for (const auto& [w, v] : terms_) p.terms_.emplace(w, orelab::scaled(v, c));
  return p;
}

SkewPolynomial SkewPolynomial::negated() const { return scaled(Rational(-1)); }

SkewPolynomial push_left(const AlgebraPresentation& a, const GeneratorFamily& fam, int t,
                         const Vec& r) {
  check_family(a, fam);
  check_letter(fam, t);
  if (static_cast<int>(r.size()) != a.dim()) throw DimensionError("push_left: coefficient size");
  SkewPolynomial p;
  p.add_term(Word{{t}}, fam[t].sd.sigma.map(r));
  p.add_term(Word{}, fam[t].sd.delta(r));
  return p;
}

SkewPolynomial multiply_skew(const AlgebraPresentation& a, const GeneratorFamily& fam,
                             const SkewPolynomial& p, const SkewPolynomial& q,
                             const Limits& limits) {
  check_family(a, fam);
  ExpansionGuard guard{limits.term_cap};
  SkewPolynomial out;
  for (const auto& [u, r] : p.terms()) {
    for (const auto& [v, s] : q.terms()) {
      SkewPolynomial pushed = push_word_through(fam, u, s, guard);
      for (const auto& [w, c] : pushed.terms()) {
        Vec coeff = a.multiply(r, c);
        if (!is_zero_vec(coeff)) out.add_term(w.concat(v), coeff);
      }
      guard.charge(out.term_count());
    }
  }
  return out;
}

std::vector<std::vector<int>> enumerate_b(const std::vector<int>& a) {
  for (int x : a) {
    if (x < 0) throw MathError("enumerate_b: entries must be nonnegative");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> b(a.size(), 0);
  // Recursive lexicographic fill: b_k ranges over 0 .. (a_1+..+a_k) - (b_1+..+b_{k-1}).
  auto rec = [&](auto&& self, size_t k, int ahat, int bhat) -> void {
    if (k == a.size()) {
      out.push_back(b);
      return;
    }
    int ahat_k = ahat + a[k];
    for (int bk = 0; bhat + bk <= ahat_k; ++bk) {
      b[k] = bk;
      self(self, k + 1, ahat_k, bhat + bk);
    }
    b[k] = 0;
  };
  rec(rec, 0, 0, 0);
  return out;
}

namespace {

// Flattened view of a list of skew polynomials over the words they touch.
struct FlatSpan {
  std::vector<Word> words;  // sorted
  int coeff_dim = 0;
  Subspace space = Subspace::zero(0);

  static FlatSpan build(const std::vector<SkewPolynomial>& gens, int coeff_dim) {
    FlatSpan fs;
    fs.coeff_dim = coeff_dim;
    std::set<Word> wset;
    for (const SkewPolynomial& p : gens)
      for (const auto& [w, c] : p.terms()) wset.insert(w);
    fs.words.assign(wset.begin(), wset.end());
    int ambient = static_cast<int>(fs.words.size()) * coeff_dim;
    std::vector<Vec> rows;
    rows.reserve(gens.size());
    for (const SkewPolynomial& p : gens) rows.push_back(fs.flatten(p));
    fs.space = Subspace::span(ambient, rows);
    return fs;
  }

  Vec flatten(const SkewPolynomial& p) const {
    Vec row = zero_vec(static_cast<int>(words.size()) * coeff_dim);
    for (const auto& [w, c] : p.terms()) {
      auto it = std::lower_bound(words.begin(), words.end(), w);
      if (it == words.end() || !(*it == w)) throw InternalError("flatten: word outside index");
      size_t base = static_cast<size_t>(it - words.begin()) * coeff_dim;
      for (int k = 0; k < coeff_dim; ++k) row[base + k] = c[k];
    }
    return row;
  }

  SkewPolynomial unflatten(const Vec& row) const {
    SkewPolynomial p;
    for (size_t wi = 0; wi < words.size(); ++wi) {
      Vec c(row.begin() + static_cast<long>(wi) * coeff_dim,
            row.begin() + static_cast<long>(wi + 1) * coeff_dim);
      p.add_term(words[wi], c);
    }
    return p;
  }
};

}  // namespace

std::vector<SkewPolynomial> compress_span(const std::vector<SkewPolynomial>& gens, int coeff_dim) {
  std::vector<SkewPolynomial> nonzero;
  for (const SkewPolynomial& p : gens)
    if (!p.is_zero()) nonzero.push_back(p);
  if (nonzero.empty()) return {};
  FlatSpan fs = FlatSpan::build(nonzero, coeff_dim);
  std::vector<SkewPolynomial> out;
  out.reserve(fs.space.basis().size());
  for (const Vec& row : fs.space.basis()) out.push_back(fs.unflatten(row));
  return out;
}

InclusionReport verify_product_inclusion(const AlgebraPresentation& a, const Subspace& v,
                                         const std::vector<int>& exponents,
                                         const GeneratorFamily& fam, const Limits& limits) {
  check_family(a, fam);
  if (v.ambient() != a.dim()) throw DimensionError("verify_product_inclusion: ambient mismatch");
  if (exponents.empty()) throw MathError("verify_product_inclusion: empty exponent sequence");
  for (int x : exponents) {
    if (x <= 0) throw MathError("verify_product_inclusion: exponents must be positive");
  }
  int total = 0;
  for (int x : exponents) total += x;
  if (total > limits.delta_cap) {
    throw CapExceededError("verify_product_inclusion: sum of exponents " + std::to_string(total) +
                           " exceeds the delta cap " + std::to_string(limits.delta_cap));
  }

  InclusionReport report;
  report.a = exponents;
  int m = static_cast<int>(exponents.size());

  // Right side, grouped by trailing word length: the coefficient space of any
  // word of length j is the same sum of delta_nk-image products.
  std::vector<std::vector<int>> bs = enumerate_b(exponents);
  report.b_count = static_cast<int>(bs.size());
  std::map<int, Subspace> rhs_by_len;
  std::vector<int> ahat(m);
  ahat[0] = exponents[0];
  for (int i = 1; i < m; ++i) ahat[i] = ahat[i - 1] + exponents[i];
  for (const std::vector<int>& b : bs) {
    int sb = 0;
    for (int x : b) sb += x;
    int bhat = 0;
    Subspace prod = Subspace::zero(a.dim());
    for (int i = 0; i < m; ++i) {
      int n_i = ahat[i] - bhat;
      bhat += b[i];
      Subspace img = delta_nk_image(v, n_i, b[i], fam, limits);
      prod = i == 0 ? img : subspace_product(a, prod, img);
      if (prod.is_zero()) break;
    }
    int j = total - sb;
    auto it = rhs_by_len.find(j);
    if (it == rhs_by_len.end()) {
      rhs_by_len.emplace(j, prod);
    } else {
      it->second = it->second.sum(prod);
    }
  }
  for (const auto& [j, space] : rhs_by_len) report.rhs_block_dims.emplace_back(j, space.dim());

  // Left side generators: one skew polynomial per choice of words and basis
  // vectors; every term's coefficient must lie in the block of its word length.
  ExpansionGuard guard{limits.term_cap};
  std::vector<std::vector<Word>> word_choices;
  word_choices.reserve(m);
  for (int i = 0; i < m; ++i) word_choices.push_back(all_words(fam.size(), exponents[i]));

  std::vector<int> word_idx(m, 0), basis_idx(m, 0);
  const auto& vb = v.basis();
  if (vb.empty()) {  // V = 0: both sides vanish
    report.holds = true;
    return report;
  }

  auto rec = [&](auto&& self, int depth, SkewPolynomial acc) -> bool {
    if (depth == m) {
      ++report.lhs_generators;
      for (const auto& [w, c] : acc.terms()) {
        auto it = rhs_by_len.find(w.size());
        const Subspace* block = it == rhs_by_len.end() ? nullptr : &it->second;
        if (!block || !block->contains(c)) {
          report.failure = "coefficient of a word of length " + std::to_string(w.size()) +
                           " escapes the right side";
          return false;
        }
      }
      return true;
    }
    for (const Word& w : word_choices[depth]) {
      for (const Vec& vec : vb) {
        SkewPolynomial next;
        if (depth == 0) {
          next = push_word_through(fam, w, vec, guard);
        } else {
          next = times_vector(a, fam, times_word(acc, w), vec, guard);
        }
        guard.charge(next.term_count());
        if (!self(self, depth + 1, std::move(next))) return false;
      }
    }
    return true;
  };
  report.holds = rec(rec, 0, SkewPolynomial{});
  return report;
}

namespace {

// Spanning set of sum_{i<=N} V T_0^i: monomials v * w, already in normal form.
std::vector<SkewPolynomial> vt_generators(const Subspace& v, const GeneratorFamily& fam,
                                          int big_n) {
  std::vector<SkewPolynomial> gens;
  for (int len = 0; len <= big_n; ++len) {
    for (const Word& w : all_words(fam.size(), len)) {
      for (const Vec& b : v.basis()) gens.push_back(SkewPolynomial::monomial(w, b));
    }
  }
  return gens;
}

// Compressed span of l-fold products of the generators; dims records the
// span dimension at each exponent. Stops early once the span hits zero.
std::vector<SkewPolynomial> span_power(const AlgebraPresentation& a, const GeneratorFamily& fam,
                                       const std::vector<SkewPolynomial>& gens, int l,
                                       const Limits& limits, std::vector<int>& dims) {
  std::vector<SkewPolynomial> cur = compress_span(gens, a.dim());
  dims.push_back(static_cast<int>(cur.size()));
  for (int step = 2; step <= l && !cur.empty(); ++step) {
    std::vector<SkewPolynomial> products;
    products.reserve(cur.size() * gens.size());
    for (const SkewPolynomial& p : cur)
      for (const SkewPolynomial& g : gens) products.push_back(multiply_skew(a, fam, p, g, limits));
    cur = compress_span(products, a.dim());
    dims.push_back(static_cast<int>(cur.size()));
  }
  return cur;
}

}  // namespace

NilpotencyCertificate certify_theorem_14(const AlgebraPresentation& a, const Subspace& v,
                                         const GeneratorFamily& fam, int big_n,
                                         const Limits& limits) {
  check_family(a, fam);
  if (v.ambient() != a.dim()) throw DimensionError("certify_theorem_14: ambient mismatch");
  if (big_n < 0) throw MathError("certify_theorem_14: N must be nonnegative");

  // Hypothesis: R^n inside the Wedderburn radical for some n > 1; use the
  // smallest. Powers of R strictly shrink or stabilize, so dim+1 bounds the search.
  Subspace w = wedderburn_radical(a).space;
  int n = 0;
  Subspace power = Subspace::full(a.dim());
  for (int k = 2; k <= a.dim() + 1; ++k) {
    Subspace next = subspace_product(a, power, Subspace::full(a.dim()));
    if (w.contains(next)) {
      n = k;
      break;
    }
    if (next == power) break;  // stabilized outside the radical
    power = next;
  }
  if (n == 0) {
    throw HypothesisError("no n > 1 with R^n inside the Wedderburn radical");
  }

  NilpotencyCertificate cert;
  cert.n = n;

  int ksum = 2 * n * big_n;
  std::vector<Subspace> tower = bold_vk_tower(v, ksum, fam);

  // F = all products of n tower members with index sum <= 2nN.
  std::vector<int> idx(n, 0);
  Subspace span_f = Subspace::zero(a.dim());
  auto enumerate = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n) {
      Subspace prod = tower[idx[0]];
      for (int i = 1; i < n && !prod.is_zero(); ++i) {
        prod = subspace_product(a, prod, tower[idx[i]]);
      }
      cert.family.push_back(prod);
      span_f = span_f.sum(prod);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      idx[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  enumerate(enumerate, 0, ksum);

  if (!w.contains(span_f)) {
    throw InternalError("family union escapes the Wedderburn radical");
  }
  cert.ideal = ideal_generated_by(a, span_f);
  std::optional<int> s = nilpotency_index(a, cert.ideal);
  if (!s) throw InternalError("ideal generated inside the radical is not nilpotent");
  cert.s = *s;
  cert.bound_l = 2 * n * cert.s;

  std::vector<SkewPolynomial> gens = vt_generators(v, fam, big_n);
  std::vector<SkewPolynomial> top = span_power(a, fam, gens, cert.bound_l, limits, cert.power_dims);
  cert.verified = top.empty();
  for (const SkewPolynomial& p : top) cert.max_word_len = std::max(cert.max_word_len, p.max_word_len());
  return cert;
}

std::vector<NilpotencyCertificate> certify_theorem_16(const AlgebraPresentation& a,
                                                      const GeneratorFamily& fam, int big_n,
                                                      const Limits& limits) {
  check_family(a, fam);
  if (big_n < 0) throw MathError("certify_theorem_16: N must be nonnegative");
  RadicalChain chain = prime_radical_chain(a);
  CheckResult inv = check_strong_invariance(chain, family_derivations(fam));
  if (!inv) {
    throw HypothesisError("prime radical chain is not strongly invariant under the derivations");
  }

  std::vector<NilpotencyCertificate> certs;
  int gamma = chain.stabilization_index;
  Subspace v = chain.stages[gamma].space;
  int n_cur = big_n;

  for (int beta = gamma - 1; beta >= 0; --beta) {
    const Subspace& p_beta = chain.stages[beta].space;
    NilpotencyCertificate cert;
    cert.stage = beta + 1;
    cert.n = 1;

    cert.family = bold_vk_tower(v, 2 * n_cur, fam);
    Subspace span_f = Subspace::zero(a.dim());
    for (const Subspace& s : cert.family) span_f = span_f.sum(s);
    cert.ideal = ideal_generated_by(a, span_f);

    // Least s >= 2 with I^s inside the next stage down.
    int s = 1;
    Subspace power = cert.ideal.space;
    while (!p_beta.contains(power)) {
      power = subspace_product(a, power, cert.ideal.space);
      ++s;
      if (s > a.dim() + 2) {
        throw InternalError("descent ideal power never enters the lower chain stage");
      }
    }
    cert.s = std::max(s, 2);
    cert.bound_l = 2 * cert.s;

    std::vector<SkewPolynomial> gens = vt_generators(v, fam, n_cur);
    std::vector<SkewPolynomial> top =
        span_power(a, fam, gens, cert.bound_l, limits, cert.power_dims);

    // Every coefficient of the expanded power must land in P_beta; at the
    // last stage that is an exact zero check.
    bool ok = true;
    std::vector<Vec> coeff_rows;
    for (const SkewPolynomial& p : top) {
      cert.max_word_len = std::max(cert.max_word_len, p.max_word_len());
      for (const auto& [word, c] : p.terms()) {
        coeff_rows.push_back(c);
        if (!p_beta.contains(c)) ok = false;
      }
    }
    cert.verified = ok;
    certs.push_back(cert);
    if (!ok) break;  // descent premise failed; report what we have

    v = Subspace::span(a.dim(), coeff_rows);
    n_cur = certs.back().max_word_len;
  }
  return certs;
}

}  // namespace orelab
