#include "orelab/json_io.hpp"

#include <fstream>

#include "orelab/errors.hpp"

namespace orelab::io {

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vec& v) {
  json arr = json::array();
  for (const Rational& x : v) arr.push_back(x.str());
  return arr;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return json{{"matrix", rows}};
}

json to_json(const Subspace& s) {
  json rows = json::array();
  for (const Vec& b : s.basis()) rows.push_back(to_json(b));
  return json{{"ambient_dim", s.ambient()}, {"dim", s.dim()}, {"basis", rows}};
}

json to_json(const CheckResult& r, const std::string& name) {
  json j{{"check", name}, {"ok", r.ok}};
  if (!r.ok) {
    j["witness"] = r.witness;
    j["detail"] = r.detail;
  }
  return j;
}

json to_json(const RadicalChain& chain) {
  json stages = json::array();
  for (const Ideal& st : chain.stages) stages.push_back(to_json(st.space));
  return json{{"stages", stages}, {"stabilization_index", chain.stabilization_index}};
}

json to_json(const NilpotencyCertificate& cert) {
  json fam = json::array();
  for (const Subspace& s : cert.family) fam.push_back(s.dim());
  return json{
      {"n", cert.n},
      {"s", cert.s},
      {"bound_l", cert.bound_l},
      {"verified", cert.verified},
      {"stage", cert.stage},
      {"family_size", cert.family.size()},
      {"family_dims", fam},
      {"ideal_dim", cert.ideal.space.dim()},
      {"ideal_basis", to_json(cert.ideal.space)["basis"]},
      {"power_dims", cert.power_dims},
      {"max_word_len", cert.max_word_len},
  };
}

json to_json(const InclusionReport& report) {
  json blocks = json::array();
  for (const auto& [len, dim] : report.rhs_block_dims) {
    blocks.push_back(json{{"word_len", len}, {"dim", dim}});
  }
  json j{{"holds", report.holds},
         {"a", report.a},
         {"lhs_generators", report.lhs_generators},
         {"b_count", report.b_count},
         {"rhs_blocks", blocks}};
  if (!report.holds) j["failure"] = report.failure;
  return j;
}

json to_json(const Prop22Report& report) {
  json j{{"hypotheses_ok", report.hypotheses_ok}};
  if (!report.hypotheses_ok) {
    j["hypothesis_failure"] = report.hypothesis_failure;
    return j;
  }
  j["s"] = to_json(report.s);
  j["nil_indices"] = report.nil_indices;
  j["s_is_ideal_in_invariants"] = report.s_is_ideal_in_invariants;
  j["s_in_prime_radical"] = report.s_in_prime_radical;
  j["conclusion_ok"] = report.conclusion_ok;
  return j;
}

json to_json(const TheoremBReport& report) {
  json j{{"hypotheses_ok", report.hypotheses_ok},
         {"surjectivity_policy",
          report.policy == SurjectivityPolicy::exact ? "exact" : "boundary"}};
  if (!report.hypotheses_ok) {
    j["hypothesis_failure"] = report.hypothesis_failure;
    return j;
  }
  j["inclusion_ok"] = report.inclusion_ok;
  if (report.j_nil_index) j["jacobson_nilpotency_index"] = *report.j_nil_index;
  j["p_extension_dim"] = report.p_extension_dim;
  j["ok"] = report.ok;
  return j;
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": rationals must be \"p/q\" strings");
  return Rational::parse(j.get<std::string>());
}

Vec vec_from_json(const json& j, int expect_len, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rationals");
  if (expect_len >= 0 && static_cast<int>(j.size()) != expect_len) {
    throw ParseError(where + ": expected length " + std::to_string(expect_len) + ", got " +
                     std::to_string(j.size()));
  }
  Vec v;
  v.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

Matrix matrix_from_json(const json& j, const std::string& where) {
  const json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("matrix")) throw ParseError(where + ": missing \"matrix\" field");
    rows = &j["matrix"];
  }
  if (!rows->is_array() || rows->empty()) {
    throw ParseError(where + ": expected a nonempty array of rows");
  }
  int cols = static_cast<int>((*rows)[0].size());
  std::vector<Vec> data;
  for (size_t r = 0; r < rows->size(); ++r) {
    data.push_back(vec_from_json((*rows)[r], cols, where + ".row" + std::to_string(r)));
  }
  return Matrix::from_rows(data, cols);
}

AlgebraPresentation algebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("algebra.dim: expected an integer");
  }
  int dim = j["dim"].get<int>();
  if (dim < 0) throw ParseError("algebra.dim: must be nonnegative");
  if (!j.contains("sc")) throw ParseError("algebra.sc: missing structure constants");
  const json& sc = j["sc"];
  if (!sc.is_array() || static_cast<int>(sc.size()) != dim) {
    throw ParseError("algebra.sc: expected " + std::to_string(dim) + " rows");
  }
  std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim));
  for (int i = 0; i < dim; ++i) {
    if (!sc[i].is_array() || static_cast<int>(sc[i].size()) != dim) {
      throw ParseError("algebra.sc[" + std::to_string(i) + "]: expected " + std::to_string(dim) +
                       " entries");
    }
    for (int k = 0; k < dim; ++k) {
      table[i][k] = vec_from_json(sc[i][k], dim,
                                  "algebra.sc[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
  }
  std::optional<Vec> unit;
  bool unital = j.value("unital", false);
  if (unital) {
    if (!j.contains("unit")) throw ParseError("algebra.unit: required when unital");
    unit = vec_from_json(j["unit"], dim, "algebra.unit");
  }
  return AlgebraPresentation::from_table(dim, table, std::move(unit));
}

json algebra_to_json(const AlgebraPresentation& a) {
  json sc = json::array();
  for (int i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < a.dim(); ++j2) row.push_back(to_json(a.basis_product(i, j2)));
    sc.push_back(row);
  }
  json j{{"dim", a.dim()}, {"unital", a.is_unital()}, {"sc", sc}};
  if (a.is_unital()) j["unit"] = to_json(a.unit());
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance: expected an object");
  if (!j.contains("algebra")) throw ParseError("instance.algebra: missing");
  Instance inst;
  inst.algebra = algebra_from_json(j["algebra"]);
  int dim = inst.algebra.dim();

  if (j.contains("generators")) {
    const json& gens = j["generators"];
    if (!gens.is_array()) throw ParseError("instance.generators: expected an array");
    for (size_t i = 0; i < gens.size(); ++i) {
      const json& g = gens[i];
      std::string where = "instance.generators[" + std::to_string(i) + "]";
      if (!g.is_object() || !g.contains("sigma") || !g.contains("delta")) {
        throw ParseError(where + ": expected {label, sigma, delta}");
      }
      Matrix sigma = matrix_from_json(g["sigma"], where + ".sigma");
      Matrix delta = matrix_from_json(g["delta"], where + ".delta");
      if (sigma.rows() != dim || sigma.cols() != dim || delta.rows() != dim ||
          delta.cols() != dim) {
        throw ParseError(where + ": map size differs from algebra dimension");
      }
      auto inv = inverse(sigma);
      if (!inv) throw ParseError(where + ".sigma: matrix is singular");
      Generator gen;
      gen.label = g.value("label", "t" + std::to_string(i + 1));
      gen.sd.sigma = Automorphism{LinearEndomap{sigma}, LinearEndomap{*inv}};
      gen.sd.delta = LinearEndomap{delta};
      inst.generators.gens.push_back(std::move(gen));
    }
  }

  if (j.contains("V")) {
    const json& v = j["V"];
    if (!v.is_array()) throw ParseError("instance.V: expected an array of rows");
    std::vector<Vec> rows;
    for (size_t r = 0; r < v.size(); ++r) {
      rows.push_back(vec_from_json(v[r], dim, "instance.V[" + std::to_string(r) + "]"));
    }
    inst.v = Subspace::span(dim, rows);
  }
  inst.big_n = j.value("N", 0);
  if (inst.big_n < 0) throw ParseError("instance.N: must be nonnegative");

  if (j.contains("derivation")) {
    Matrix m = matrix_from_json(j["derivation"], "instance.derivation");
    if (m.rows() != dim || m.cols() != dim) {
      throw ParseError("instance.derivation: size differs from algebra dimension");
    }
    inst.derivation = Derivation{LinearEndomap{m}};
  }
  return inst;
}

json instance_to_json(const Instance& inst) {
  json j{{"algebra", algebra_to_json(inst.algebra)}, {"N", inst.big_n}};
  json gens = json::array();
  for (const Generator& g : inst.generators.gens) {
    gens.push_back(json{{"label", g.label},
                        {"sigma", to_json(g.sd.sigma.map.matrix)},
                        {"delta", to_json(g.sd.delta.matrix)}});
  }
  j["generators"] = gens;
  if (inst.v) {
    json rows = json::array();
    for (const Vec& b : inst.v->basis()) rows.push_back(to_json(b));
    j["V"] = rows;
  }
  if (inst.derivation) j["derivation"] = to_json(inst.derivation->map.matrix);
  return j;
}

std::vector<NamedCheck> validate_instance(const Instance& inst) {
  std::vector<NamedCheck> checks;
  checks.push_back({"presentation", validate_presentation(inst.algebra)});
  for (size_t i = 0; i < inst.generators.gens.size(); ++i) {
    const Generator& g = inst.generators.gens[i];
    checks.push_back({"automorphism(" + g.label + ")",
                      check_automorphism(inst.algebra, g.sd.sigma.map.matrix)});
    checks.push_back(
        {"sigma_derivation(" + g.label + ")", check_sigma_derivation(inst.algebra, g.sd)});
  }
  if (inst.derivation) {
    checks.push_back({"derivation", check_derivation(inst.algebra, *inst.derivation)});
  }
  return checks;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("JSON parse error in " + path + ": " + e.what());
  }
  return instance_from_json(j);
}

}  // namespace orelab::io
