#include "orelab/maps.hpp"

#include <string>

#include "orelab/errors.hpp"

namespace orelab {

CheckResult check_automorphism(const AlgebraPresentation& a, const Matrix& m) {
  int n = a.dim();
  if (m.rows() != n || m.cols() != n) {
    throw DimensionError("automorphism matrix size differs from algebra dimension");
  }
  if (!inverse(m)) return CheckResult::fail({}, "matrix is singular");
  std::vector<Vec> images(n);
  for (int i = 0; i < n; ++i) images[i] = m.apply(unit_vec(n, i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec lhs = m.apply(a.basis_product(i, j));
      Vec rhs = a.multiply(images[i], images[j]);
      if (lhs != rhs) {
        return CheckResult::fail({i, j}, "multiplicativity fails on basis pair");
      }
    }
  }
  if (a.is_unital() && m.apply(a.unit()) != a.unit()) {
    return CheckResult::fail({}, "unit is not fixed");
  }
  return CheckResult::pass();
}

Automorphism automorphism_from_matrix(const AlgebraPresentation& a, const Matrix& m) {
  CheckResult rc = check_automorphism(a, m);
  if (!rc) throw MathError("not an automorphism: " + rc.detail);
  return Automorphism{LinearEndomap{m}, LinearEndomap{*inverse(m)}};
}

CheckResult check_sigma_derivation(const AlgebraPresentation& a, const SigmaDerivation& sd) {
  int n = a.dim();
  const Matrix& s = sd.sigma.map.matrix;
  const Matrix& d = sd.delta.matrix;
  if (s.rows() != n || d.rows() != n || s.cols() != n || d.cols() != n) {
    throw DimensionError("map matrix size differs from algebra dimension");
  }
  for (int i = 0; i < n; ++i) {
    Vec di = d.apply(unit_vec(n, i));
    Vec si = s.apply(unit_vec(n, i));
    for (int j = 0; j < n; ++j) {
      Vec lhs = d.apply(a.basis_product(i, j));
      Vec rhs = add(a.multiply(di, unit_vec(n, j)), a.multiply(si, d.apply(unit_vec(n, j))));
      if (lhs != rhs) {
        return CheckResult::fail({i, j}, "Leibniz law fails on basis pair");
      }
    }
  }
  return CheckResult::pass();
}

bool check_q_skew(const SigmaDerivation& sd, const Rational& q) {
  if (q.is_zero()) throw MathError("q-skew check requires q != 0");
  Matrix ds = sd.delta.matrix * sd.sigma.map.matrix;
  Matrix sd_ = sd.sigma.map.matrix * sd.delta.matrix;
  if (ds != sd_.scaled(q)) return false;
  return q != Rational(-1);
}

Subspace stable_saturation(const Subspace& v, const std::vector<Automorphism>& g) {
  Subspace cur = v;
  for (;;) {
    std::vector<Vec> rows = cur.basis();
    for (const Automorphism& s : g) {
      for (const Vec& b : cur.basis()) {
        rows.push_back(s.map(b));
        rows.push_back(s.inverse(b));
      }
    }
    Subspace next = Subspace::span(v.ambient(), rows);
    if (next == cur) return cur;
    cur = next;
  }
}

namespace {

// DFS over all placements of k deltas among n slots, each slot ranging over
// the whole family. Images of v's basis are carried along the composition.
void delta_compositions(const GeneratorFamily& fam, int slots_left, int deltas_left,
                        const std::vector<Vec>& images, std::vector<Vec>& out) {
  if (slots_left == 0) {
    out.insert(out.end(), images.begin(), images.end());
    return;
  }
  if (deltas_left > slots_left) return;
  for (int t = 0; t < fam.size(); ++t) {
    if (deltas_left < slots_left) {  // spend a sigma slot
      std::vector<Vec> next;
      next.reserve(images.size());
      for (const Vec& b : images) next.push_back(fam[t].sd.sigma.map(b));
      delta_compositions(fam, slots_left - 1, deltas_left, next, out);
    }
    if (deltas_left > 0) {  // spend a delta slot
      std::vector<Vec> next;
      next.reserve(images.size());
      for (const Vec& b : images) next.push_back(fam[t].sd.delta(b));
      delta_compositions(fam, slots_left - 1, deltas_left - 1, next, out);
    }
  }
}

}  // namespace

Subspace delta_nk_image(const Subspace& v, int n, int k, const GeneratorFamily& fam,
                        const Limits& limits) {
  if (k > n || k < 0 || n < 0) throw MathError("delta_nk_image requires 0 <= k <= n");
  if (n > limits.delta_cap) {
    throw CapExceededError("delta_nk_image: n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(limits.delta_cap));
  }
  if (n == 0 || v.is_zero()) return v;
  if (fam.size() == 0) return Subspace::zero(v.ambient());  // no compositions exist
  std::vector<Vec> out;
  delta_compositions(fam, n, k, v.basis(), out);
  return Subspace::span(v.ambient(), out);
}

std::vector<Automorphism> family_automorphisms(const GeneratorFamily& fam) {
  std::vector<Automorphism> g;
  g.reserve(fam.gens.size());
  for (const Generator& t : fam.gens) g.push_back(t.sd.sigma);
  return g;
}

std::vector<SigmaDerivation> family_derivations(const GeneratorFamily& fam) {
  std::vector<SigmaDerivation> d;
  d.reserve(fam.gens.size());
  for (const Generator& t : fam.gens) d.push_back(t.sd);
  return d;
}

Subspace bold_vk(const Subspace& v, int k, const GeneratorFamily& fam) {
  return bold_vk_tower(v, k, fam).back();
}

std::vector<Subspace> bold_vk_tower(const Subspace& v, int kmax, const GeneratorFamily& fam) {
  std::vector<Automorphism> g = family_automorphisms(fam);
  std::vector<Subspace> tower;
  tower.reserve(static_cast<size_t>(kmax) + 1);
  tower.push_back(stable_saturation(v, g));
  for (int k = 1; k <= kmax; ++k) {
    std::vector<Vec> rows;
    for (const Generator& t : fam.gens) {
      for (const Vec& b : tower.back().basis()) rows.push_back(t.sd.delta(b));
    }
    Subspace w = Subspace::span(v.ambient(), rows);
    tower.push_back(stable_saturation(w, g));
  }
  return tower;
}

CheckResult check_strong_invariance(const RadicalChain& chain,
                                    const std::vector<SigmaDerivation>& deltas) {
  for (size_t stage = 0; stage < chain.stages.size(); ++stage) {
    const Subspace& s = chain.stages[stage].space;
    for (size_t d = 0; d < deltas.size(); ++d) {
      const auto& basis = s.basis();
      for (size_t row = 0; row < basis.size(); ++row) {
        if (!s.contains(deltas[d].delta(basis[row]))) {
          return CheckResult::fail(
              {static_cast<int>(stage), static_cast<int>(d), static_cast<int>(row)},
              "derivation leaves a chain stage");
        }
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace orelab
