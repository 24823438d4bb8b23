#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "orelab/errors.hpp"
#include "orelab/json_io.hpp"

using namespace orelab;
using orelab::io::json;

namespace {

std::string data_path(const std::string& name) {
  const char* dir = std::getenv("ORELAB_DATA");
  REQUIRE_MESSAGE(dir != nullptr, "ORELAB_DATA must point at tests/data");
  return std::string(dir) + "/" + name;
}

struct CliResult {
  int exit_code = -1;
  std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
  const char* cli = std::getenv("ORELAB_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "ORELAB_CLI must point at the orelab binary");
  std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/orelab_cli_out.json";
  std::string cmd = std::string(cli) + " " + args + " > " + out_file + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  return r;
}

}  // namespace

TEST_CASE("json round trips") {
  SUBCASE("rationals as p/q strings") {
    CHECK(io::to_json(Rational(-7, 3)) == "-7/3");
    CHECK(io::rational_from_json(json("5/10"), "t") == Rational(1, 2));
    CHECK_THROWS_AS(io::rational_from_json(json(0.5), "t"), ParseError);
  }
  SUBCASE("algebra round trip preserves products") {
    auto g3 = grassmann_algebra(3);
    json j = io::algebra_to_json(g3.algebra);
    AlgebraPresentation back = io::algebra_from_json(j);
    CHECK(back.dim() == 7);
    corpus::Rng rng(131);
    for (int t = 0; t < 10; ++t) {
      Vec x = rng.vector(7), y = rng.vector(7);
      CHECK(back.multiply(x, y) == g3.algebra.multiply(x, y));
    }
  }
  SUBCASE("instance round trip") {
    io::Instance inst = io::load_instance_file(data_path("e2_instance.json"));
    CHECK(inst.algebra.dim() == 3);
    CHECK(inst.generators.size() == 1);
    CHECK(inst.big_n == 1);
    REQUIRE(inst.v.has_value());
    CHECK(inst.v->dim() == 3);
    REQUIRE(inst.derivation.has_value());
    json j = io::instance_to_json(inst);
    io::Instance back = io::instance_from_json(j);
    CHECK(back.algebra.dim() == 3);
    CHECK(back.generators.size() == 1);
    for (const auto& [name, rc] : io::validate_instance(back)) CHECK(rc.ok);
  }
  SUBCASE("parse errors carry field context") {
    try {
      io::algebra_from_json(json{{"dim", 2}});
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("sc") != std::string::npos);
    }
    CHECK_THROWS_AS(io::load_instance_file("/nonexistent/file.json"), ParseError);
  }
  SUBCASE("validators catch the broken instance") {
    io::Instance inst = io::load_instance_file(data_path("broken_leibniz.json"));
    bool any_fail = false;
    for (const auto& [name, rc] : io::validate_instance(inst)) {
      if (!rc.ok) {
        any_fail = true;
        CHECK(name.find("sigma_derivation") != std::string::npos);
      }
    }
    CHECK(any_fail);
  }
}

TEST_CASE("cli validate") {
  CHECK(run_cli("validate " + data_path("e2_instance.json")).exit_code == 0);
  SUBCASE("broken Leibniz exits 1 and reports a witness") {
    CliResult r = run_cli("validate " + data_path("broken_leibniz.json"));
    CHECK(r.exit_code == 1);
    json j = json::parse(r.stdout_text);
    CHECK(j["ok"] == false);
  }
  SUBCASE("missing file exits 2") {
    CHECK(run_cli("validate /no/such/file.json").exit_code == 2);
  }
}

TEST_CASE("cli radicals") {
  CliResult r = run_cli("radicals " + data_path("ut2_instance.json"));
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j["wedderburn"]["dim"] == 1);
  CHECK(j["chain"]["stabilization_index"] == 1);
  CHECK(j["jacobson"]["dim"] == 1);
  CliResult qq = run_cli("radicals " + data_path("qq_instance.json"));
  REQUIRE(qq.exit_code == 0);
  json jq = json::parse(qq.stdout_text);
  CHECK(jq["wedderburn"]["dim"] == 0);
  CHECK(jq["chain"]["stabilization_index"] == 0);
}

TEST_CASE("cli certify") {
  SUBCASE("theorem 14 on E_2 verifies") {
    CliResult r = run_cli("certify " + data_path("e2_instance.json") + " --theorem 14 --N 1");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(j["certificate"]["verified"] == true);
    CHECK(j["certificate"]["bound_l"] == 8);
  }
  SUBCASE("theorem 14 on UT2 is a hypothesis failure (exit 3)") {
    CHECK(run_cli("certify " + data_path("ut2_instance.json") + " --theorem 14").exit_code == 3);
  }
  SUBCASE("theorem 16 on UT2 verifies") {
    CliResult r = run_cli("certify " + data_path("ut2_instance.json") + " --theorem 16 --N 1");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(j["verified"] == true);
    CHECK(j["levels"].size() == 1);
  }
  SUBCASE("theorem 16 on a semiprime base is a trivial verified descent") {
    CliResult r = run_cli("certify " + data_path("qq_instance.json") + " --theorem 16 --N 1");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(j["verified"] == true);
    CHECK(j["levels"].empty());
  }
  SUBCASE("a starved term cap exits 4") {
    const char* cli = std::getenv("ORELAB_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string("ORELAB_TERM_CAP=2 ") + cli + " certify " +
                      data_path("e2_instance.json") + " --theorem 14 --N 1 >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 4);
  }
  SUBCASE("certificates the CLI verifies re-verify through the library") {
    CliResult r = run_cli("certify " + data_path("e2_instance.json") + " --theorem 14 --N 1");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    io::Instance inst = io::load_instance_file(data_path("e2_instance.json"));
    NilpotencyCertificate again =
        certify_theorem_14(inst.algebra, *inst.v, inst.generators, j["N"].get<int>());
    CHECK(again.verified == j["certificate"]["verified"].get<bool>());
    CHECK(again.bound_l == j["certificate"]["bound_l"].get<int>());
    CHECK(again.s == j["certificate"]["s"].get<int>());
  }
}

TEST_CASE("cli grassmann") {
  SUBCASE("filtration of E_2") {
    CliResult r = run_cli("grassmann --g 2 --filtration");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    REQUIRE(j["filtration"].size() == 2);
    CHECK(j["filtration"][0]["dim"] == 2);
    CHECK(j["filtration"][1]["dim"] == 3);
  }
  SUBCASE("preimage of e2e3 at g = 5") {
    CliResult r = run_cli("grassmann --g 5 --preimage 2,3");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(j["preimage"]["checked"] == true);
    CHECK(j["preimage"]["ambient_g"] == 5);
    REQUIRE(j["preimage"]["terms"].size() == 2);
    CHECK(j["preimage"]["terms"][0]["indices"] == json::array({1, 5}));
    CHECK(j["preimage"]["terms"][0]["coeff"] == "-1");
    CHECK(j["preimage"]["terms"][1]["indices"] == json::array({2, 4}));
    CHECK(j["preimage"]["terms"][1]["coeff"] == "1");
  }
  SUBCASE("boundary error exits 1") {
    CHECK(run_cli("grassmann --g 3 --preimage 2,3").exit_code == 1);
  }
  SUBCASE("exp matrix for g = 3") {
    CliResult r = run_cli("grassmann --g 3 --exp");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(j["exp"]["matrix"].size() == 7);
  }
}
