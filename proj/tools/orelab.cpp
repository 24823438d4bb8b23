// orelab: exact-arithmetic toolkit for skew extensions of finite-dimensional
// algebras. Machine-readable JSON goes to stdout, human summaries to stderr.
//
// Exit codes: 0 success, 1 mathematical failure (witness printed),
// 2 I/O or parse error, 3 hypothesis not met, 4 cap exceeded.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orelab/errors.hpp"
#include "orelab/json_io.hpp"

namespace {

using orelab::io::json;

orelab::Limits limits_from_env() {
  orelab::Limits lim;
  if (const char* cap = std::getenv("ORELAB_TERM_CAP")) {
    lim.term_cap = static_cast<std::size_t>(std::stoull(cap));
  }
  return lim;
}

int exit_code_for(const orelab::Error& e) {
  switch (e.kind()) {
    case orelab::ErrorKind::io: return 2;
    case orelab::ErrorKind::hypothesis: return 3;
    case orelab::ErrorKind::cap: return 4;
    default: return 1;
  }
}

int cmd_validate(const std::string& path) {
  orelab::io::Instance inst = orelab::io::load_instance_file(path);
  auto checks = orelab::io::validate_instance(inst);
  json out = json::array();
  bool ok = true;
  for (const auto& [name, result] : checks) {
    out.push_back(orelab::io::to_json(result, name));
    if (!result.ok) {
      ok = false;
      std::cerr << "FAIL " << name << ": " << result.detail << " witness=[";
      for (size_t i = 0; i < result.witness.size(); ++i) {
        std::cerr << (i ? "," : "") << result.witness[i];
      }
      std::cerr << "]\n";
    }
  }
  std::cout << json{{"ok", ok}, {"checks", out}}.dump(2) << "\n";
  std::cerr << (ok ? "all checks passed" : "validation failed") << "\n";
  return ok ? 0 : 1;
}

void require_valid(const orelab::io::Instance& inst) {
  for (const auto& [name, result] : orelab::io::validate_instance(inst)) {
    if (!result.ok) {
      throw orelab::MathError("instance fails " + name + ": " + result.detail);
    }
  }
}

int cmd_radicals(const std::string& path) {
  orelab::io::Instance inst = orelab::io::load_instance_file(path);
  require_valid(inst);
  orelab::Ideal w = orelab::wedderburn_radical(inst.algebra);
  orelab::RadicalChain chain = orelab::prime_radical_chain(inst.algebra);
  orelab::Ideal j = orelab::jacobson_radical(inst.algebra);
  json out{{"wedderburn", orelab::io::to_json(w.space)},
           {"chain", orelab::io::to_json(chain)},
           {"jacobson", orelab::io::to_json(j.space)}};
  std::cout << out.dump(2) << "\n";
  std::cerr << "wedderburn dim " << w.space.dim() << ", chain stabilizes at index "
            << chain.stabilization_index << "\n";
  return 0;
}

int cmd_certify(const std::string& path, int theorem, int big_n) {
  orelab::io::Instance inst = orelab::io::load_instance_file(path);
  require_valid(inst);
  orelab::Limits lim = limits_from_env();
  json out;
  bool verified = false;
  if (theorem == 14) {
    orelab::Subspace v = inst.v ? *inst.v : orelab::Subspace::full(inst.algebra.dim());
    int n = big_n >= 0 ? big_n : inst.big_n;
    orelab::NilpotencyCertificate cert =
        orelab::certify_theorem_14(inst.algebra, v, inst.generators, n, lim);
    verified = cert.verified;
    out = json{{"theorem", "14"}, {"N", n}, {"certificate", orelab::io::to_json(cert)}};
  } else if (theorem == 16) {
    int n = big_n >= 0 ? big_n : inst.big_n;
    auto certs = orelab::certify_theorem_16(inst.algebra, inst.generators, n, lim);
    verified = true;
    json arr = json::array();
    long total_exponent = 1;
    for (const auto& cert : certs) {
      verified = verified && cert.verified;
      total_exponent *= cert.bound_l;
      arr.push_back(orelab::io::to_json(cert));
    }
    out = json{{"theorem", "16"},
               {"N", n},
               {"levels", arr},
               {"total_exponent", certs.empty() ? 1 : total_exponent},
               {"verified", verified}};
  } else {
    throw orelab::ParseError("--theorem must be 14 or 16");
  }
  std::cout << out.dump(2) << "\n";
  std::cerr << (verified ? "certificate verified" : "certificate NOT verified") << "\n";
  return verified ? 0 : 1;
}

int cmd_grassmann(int g, const std::string& preimage, bool want_exp, bool want_filtration) {
  orelab::GrassmannInstance inst = orelab::grassmann_algebra(g);
  orelab::GrassmannBasis basis(g);
  json out{{"g", g}, {"dim", inst.algebra.dim()}};

  if (want_filtration) {
    orelab::Filtration f = orelab::kernel_filtration(inst.derivation);
    json stages = json::array();
    for (const orelab::Subspace& s : f.stages) stages.push_back(orelab::io::to_json(s));
    out["filtration"] = stages;
  }
  if (want_exp) {
    orelab::Automorphism e = orelab::exp_derivation(inst.derivation);
    out["exp"] = orelab::io::to_json(e.map.matrix);
  }
  if (!preimage.empty()) {
    orelab::GrassmannMonomial m;
    size_t pos = 0;
    while (pos < preimage.size()) {
      size_t comma = preimage.find(',', pos);
      if (comma == std::string::npos) comma = preimage.size();
      try {
        m.push_back(std::stoi(preimage.substr(pos, comma - pos)));
      } catch (const std::exception&) {
        throw orelab::ParseError("--preimage expects comma-separated indices");
      }
      pos = comma + 1;
    }
    orelab::GrassmannPreimage pre = orelab::grassmann_preimage(g, m);
    // Re-check d(x) = m before printing.
    auto back = orelab::grassmann_derivative(pre.element);
    bool ok = back.size() == 1 && back.begin()->first == m &&
              back.begin()->second == orelab::Rational(1);
    if (!ok) throw orelab::InternalError("preimage re-check failed");
    json terms = json::array();
    for (const auto& [mono, c] : pre.element) {
      terms.push_back(json{{"indices", mono}, {"coeff", c.str()}});
    }
    out["preimage"] = json{{"monomial", m},
                           {"ambient_g", pre.ambient_g},
                           {"terms", terms},
                           {"checked", true}};
  }
  std::cout << out.dump(2) << "\n";
  std::cerr << "grassmann g=" << g << " done\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact skew-extension calculator"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "run all validators on an instance file");
  validate->add_option("path", path, "instance JSON file")->required();

  auto* radicals = app.add_subcommand("radicals", "Wedderburn / prime chain / Jacobson radicals");
  radicals->add_option("path", path, "instance JSON file")->required();

  int theorem = 14;
  int big_n = -1;
  auto* certify = app.add_subcommand("certify", "emit a nilpotency certificate");
  certify->add_option("path", path, "instance JSON file")->required();
  certify->add_option("--theorem", theorem, "certificate flavor: 14 or 16")->required();
  certify->add_option("--N", big_n, "word-length bound N (defaults to the instance's N)");

  int g = 2;
  std::string preimage;
  bool want_exp = false, want_filtration = false;
  auto* grassmann = app.add_subcommand("grassmann", "computations on the truncated Grassmann algebra");
  grassmann->add_option("--g", g, "number of generators")->required();
  grassmann->add_option("--preimage", preimage, "monomial indices, e.g. \"2,3\"");
  grassmann->add_flag("--exp", want_exp, "matrix of exp(d)");
  grassmann->add_flag("--filtration", want_filtration, "kernel filtration stages");

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(path);
    if (radicals->parsed()) return cmd_radicals(path);
    if (certify->parsed()) return cmd_certify(path, theorem, big_n);
    if (grassmann->parsed()) return cmd_grassmann(g, preimage, want_exp, want_filtration);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const orelab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
