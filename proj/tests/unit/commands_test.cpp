#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pcross/commands.hpp"
#include "pcross/fixtures.hpp"

using namespace pcross;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(PCROSS_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_fixture(const std::string& command, const std::string& file, RunOptions options = {}) {
  return run_text(command, read_fixture(file), std::nullopt, options);
}

}  // namespace

TEST_SUITE("commands") {
  TEST_CASE("verify on F_C3 passes") {
    const RunResult r = run_fixture("verify", "f_c3.json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["passed"] == true);
    CHECK(j["command"] == "verify");
  }

  TEST_CASE("build-crossed reports the dimension") {
    const auto j = nlohmann::json::parse(run_fixture("build-crossed", "f_c3.json").output);
    CHECK(j["derived"]["crossed_product"]["dim"] == 4);
  }

  TEST_CASE("gauge") {
    const RunResult r = run_fixture("gauge", "f_coc2_gauge.json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["derived"]["gauged_cocycle"][1][1][0] == "18");

    const RunResult missing = run_fixture("gauge", "f_c3.json");
    CHECK(missing.exit_code == 2);
    CHECK(missing.output.find("missing-object") != std::string::npos);
  }

  TEST_CASE("separability prints e") {
    const RunResult r = run_fixture("separability", "f_coc1.json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["derived"]["e_lift"] == nlohmann::json::array({"1/2", "0", "0", "1/2"}));
  }

  TEST_CASE("globalize emits a spec file") {
    const RunResult r = run_fixture("globalize", "f_c3.json");
    CHECK(r.exit_code == 0);
    REQUIRE(r.spec_out.has_value());
    const SpecFile env = parse_spec(*r.spec_out);
    CHECK(env.global.has_value());
    CHECK(verify_enveloping(env.enveloping()).passed());

    CHECK(run_fixture("globalize", "f_coc2_gauge.json").exit_code == 1);
  }

  TEST_CASE("morita on the degenerate fixture") {
    const RunResult r = run_fixture("morita", "degenerate_swap.json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["derived"]["sigma_rank"] == 4);
  }

  TEST_CASE("input errors exit with 2") {
    CHECK(run_fixture("frobnicate", "f_c3.json").exit_code == 2);
    CHECK(run_text("verify", "{", std::nullopt).exit_code == 2);
    CHECK(run_text("verify", "{}", std::nullopt).exit_code == 2);
    CHECK(run_text("verify", read_fixture("f_c3.json"), Field::prime(2)).exit_code == 0);
    // c = 1/2 has no meaning over F_2.
    CHECK(run_text("verify", read_fixture("f_coc1.json"), Field::prime(2)).exit_code == 2);
  }

  TEST_CASE("failing checks exit with 1") {
    std::string text = read_fixture("f_c3.json");
    const auto pos = text.find(R"([["0", "1"], ["0", "0"]])");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 24, R"([["0", "2"], ["0", "0"]])");
    const RunResult r = run_text("verify", text, std::nullopt);
    CHECK(r.exit_code == 1);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["passed"] == false);
  }

  TEST_CASE("reports are deterministic") {
    RunOptions par;
    par.parallel = 4;
    for (const std::string& c : command_names()) {
      const RunResult a = run_fixture(c, "f_c3.json");
      const RunResult b = run_fixture(c, "f_c3.json");
      const RunResult p = run_fixture(c, "f_c3.json", par);
      CHECK_MESSAGE(a.output == b.output, c);
      CHECK_MESSAGE(a.output == p.output, c);
    }
    RunOptions timed;
    timed.timing = true;
    CHECK(nlohmann::json::parse(run_fixture("verify", "f_c3.json", timed).output).contains("wall_time_s"));
  }

  TEST_CASE("text output") {
    RunOptions text;
    text.format = OutputFormat::Text;
    const RunResult r = run_fixture("verify", "f_c3.json", text);
    CHECK(r.output.rfind("verify: PASS", 0) == 0);
  }
}
