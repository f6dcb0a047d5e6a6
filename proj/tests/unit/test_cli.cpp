#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "bohrkit/errors.hpp"
#include "commands.hpp"

using namespace bohr;
using namespace bohr::cli;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::size_t fields(const std::string& csv_line) {
  std::size_t n = 1;
  bool quoted = false;
  for (char c : csv_line) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++n;
  }
  return n;
}

#ifdef BOHRKIT_CLI_PATH
int run(const std::string& args) {
  const std::string cmd = std::string(BOHRKIT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
#endif

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("number parsing") {
    CHECK(parse_real("0.25") == 0.25);
    CHECK(parse_real("1/3") == 1.0 / 3.0);
    CHECK(parse_real("1e-3") == 1e-3);
    CHECK_THROWS_AS(parse_real("abc"), InvalidInput);
    CHECK_THROWS_AS(parse_real("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_real(""), InvalidInput);
    CHECK(parse_real_list("0.5,0.9,1/2") == std::vector<double>{0.5, 0.9, 0.5});
    CHECK(format_real(0.1) == "0.1");
    CHECK(parse_real(format_real(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS_AS(parse_format("xml"), InvalidInput);
  }

  TEST_CASE("radii table") {
    RunConfig cfg;
    cfg.format = Format::csv;
    std::ostringstream out;
    CHECK(cmd_radii(cfg, out) == kOk);
    const auto ls = lines(out.str());
    CHECK(ls.front() == "spec,params,radius,residual");
    bool rn1 = false, th1 = false, third = false;
    for (const auto& l : ls) {
      CHECK(fields(l) == 4);
      rn1 |= l.rfind("RN,1,0.2360679", 0) == 0;
      th1 |= l.rfind("ThresholdN1,,0.402964", 0) == 0;
      third |= l == "Const,0.3333333333333333,0.3333333333333333,0";
    }
    CHECK(rn1);
    CHECK(th1);
    CHECK(third);

    cfg.format = Format::json;
    std::ostringstream js;
    cmd_radii(cfg, js);
    const auto j = nlohmann::json::parse(js.str());
    CHECK(j.size() == ls.size() - 1);
    CHECK(j[0]["spec"] == "RN");
  }

  TEST_CASE("verify exit codes and reports") {
    RunConfig cfg;
    cfg.samples = 16;
    std::ostringstream out;
    VerifyArgs ok{"m2", 1.0 / 3.0, 0.0, 1.0, 2};
    CHECK(cmd_verify(cfg, ok, out) == kOk);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["pass"].get<int>() + j["inconclusive"].get<int>() == 16);
    CHECK(j["fail"] == 0);

    std::ostringstream bad;
    VerifyArgs hot{"bohr", 0.34, 0.999, 0.9999, 2};
    CHECK(cmd_verify(cfg, hot, bad) == kContradicts);

    std::ostringstream zero;
    cfg.format = Format::csv;
    VerifyArgs r0{"bohr", 0.0, 0.0, 1.0, 2};
    CHECK(cmd_verify(cfg, r0, zero) == kOk);
    const auto ls = lines(zero.str());
    CHECK(ls.size() == 17);
    for (std::size_t i = 1; i < ls.size(); ++i) {
      CHECK(fields(ls[i]) == 5);
      CHECK(ls[i].ends_with(",PASS"));
    }
    CHECK_THROWS_AS(cmd_verify(cfg, VerifyArgs{"nope", 0.3}, zero), InvalidInput);
    CHECK_THROWS_AS(cmd_verify(cfg, VerifyArgs{"bohr", 1.0}, zero), InvalidInput);
  }

  TEST_CASE("adjudicate exit codes") {
    RunConfig cfg;
    cfg.samples = 4;
    AdjudicateArgs a;
    a.kinds = {"bohr"};
    std::ostringstream out;
    CHECK(cmd_adjudicate(cfg, a, out) == kOk);
    CHECK(nlohmann::json::parse(out.str())["verdict"] == "CONFIRMS");
    a.kinds = {"c1", "m1"};
    std::ostringstream two;
    cfg.format = Format::csv;
    CHECK(cmd_adjudicate(cfg, a, two) == kContradicts);
    const auto ls = lines(two.str());
    REQUIRE(ls.size() == 3);
    CHECK(fields(ls[1]) == fields(ls[0]));
    CHECK(ls[2].find("CONTRADICTS") != std::string::npos);
  }

  TEST_CASE("sharpness curve") {
    RunConfig cfg;
    cfg.format = Format::csv;
    SharpnessArgs s;
    s.kind = "bohr";
    s.b_grid = {0.8};
    s.r_min = 0.4;
    s.r_max = 0.4;
    s.r_steps = 1;
    std::ostringstream out;
    CHECK(cmd_sharpness(cfg, s, out) == kOk);
    const auto ls = lines(out.str());
    REQUIRE(ls.size() == 2);
    const auto cells = parse_real_list(ls[1]);
    CHECK(cells[2] == doctest::Approx(0.0118).epsilon(1e-2));
  }

  TEST_CASE("multidim exit codes") {
    RunConfig cfg;
    cfg.samples = 500;
    MultidimArgs m;
    m.kind = "m2";
    m.rho = 1.0 / 3.0;
    m.inner_b = 0.7;
    std::ostringstream out;
    CHECK(cmd_multidim(cfg, m, out) == kOk);
    CHECK(nlohmann::json::parse(out.str())["verdict"] == "PASS");
    m.kind = "bohr";
    m.rho = 0.4;
    m.inner_b = 0.9999;
    std::ostringstream hot;
    CHECK(cmd_multidim(cfg, m, hot) == kContradicts);
    m.w = {0.7, 0.7};
    CHECK_THROWS_AS(cmd_multidim(cfg, m, hot), PreconditionError);
  }

  TEST_CASE("gpoly exit codes") {
    RunConfig cfg;
    std::ostringstream out;
    CHECK(cmd_gpoly(cfg, GpolyArgs{{2.472}, "sqrt5_minus2"}, out) == kOk);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["margin"].get<double>() == doctest::Approx(0.1459).epsilon(1e-3));
    CHECK(cmd_gpoly(cfg, GpolyArgs{{4.0}, "sqrt5_minus2"}, out) == kNotAdmissible);
    CHECK(cmd_gpoly(cfg, GpolyArgs{{0.888}, "one_third"}, out) == kOk);
    CHECK_THROWS_AS(cmd_gpoly(cfg, GpolyArgs{{-1.0}, "one_third"}, out), InvalidInput);
    CHECK_THROWS_AS(cmd_gpoly(cfg, GpolyArgs{{1.0}, "other"}, out), InvalidInput);
  }

  TEST_CASE("fixed seed gives identical output") {
    RunConfig cfg;
    cfg.samples = 24;
    cfg.seed = 77;
    VerifyArgs v{"bp:0.5", 1.0 / 3.0, 0.0, 1.0, 3};
    std::ostringstream a, b, c;
    cmd_verify(cfg, v, a);
    cmd_verify(cfg, v, b);
    CHECK(a.str() == b.str());
    cfg.seed = 78;
    cmd_verify(cfg, v, c);
    CHECK(a.str() != c.str());
  }

#ifdef BOHRKIT_CLI_PATH
  TEST_CASE("process exit codes") {
    CHECK(run("radii --format csv") == 0);
    CHECK(run("gpoly --coeffs 4") == 1);
    CHECK(run("gpoly --coeffs -1") == 2);
    CHECK(run("verify --kind nope -r 0.3") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("verify --kind bohr -r 0.34 --a0-min 0.999 --a0-max 0.9999 --samples 8") == 3);
    CHECK(run("adjudicate --kind m1 --samples 4") == 3);
    CHECK(run("radii --out /nonexistent-dir/table.csv") == 5);
  }
#endif
}
