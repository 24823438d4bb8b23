#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "orelab/algebra.hpp"
#include "orelab/lnd.hpp"
#include "orelab/maps.hpp"
#include "orelab/skew.hpp"

namespace orelab::io {

using nlohmann::json;

// Rationals travel as "p/q" strings (or "p" for integers), never as floats.
json to_json(const Rational& r);
json to_json(const Vec& v);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const CheckResult& r, const std::string& name);
json to_json(const RadicalChain& chain);
json to_json(const NilpotencyCertificate& cert);
json to_json(const InclusionReport& report);
json to_json(const Prop22Report& report);
json to_json(const TheoremBReport& report);

Rational rational_from_json(const json& j, const std::string& where);
Vec vec_from_json(const json& j, int expect_len, const std::string& where);
Matrix matrix_from_json(const json& j, const std::string& where);

/// {"dim": n, "unital": bool, "unit": [..]?, "sc": [[[q-strings]]]}
AlgebraPresentation algebra_from_json(const json& j);
json algebra_to_json(const AlgebraPresentation& a);

/// Instance file: algebra + generators (+ optional V, N, derivation).
struct Instance {
  AlgebraPresentation algebra;
  GeneratorFamily generators;
  std::optional<Subspace> v;
  int big_n = 0;
  std::optional<Derivation> derivation;
};

/// Parses without validating; run validate_instance before computing.
Instance instance_from_json(const json& j);
json instance_to_json(const Instance& inst);

struct NamedCheck {
  std::string name;
  CheckResult result;
};

/// Presentation validity, automorphism and Leibniz laws for every generator,
/// and the derivation's laws when present.
std::vector<NamedCheck> validate_instance(const Instance& inst);

Instance load_instance_file(const std::string& path);

}  // namespace orelab::io
