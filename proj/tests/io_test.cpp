#include "vbs/io.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "common.hpp"
#include "doctest.h"
#include "generate.hpp"
#include "json.hpp"
#include "vbs/errors.hpp"

using namespace vbs;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(VBS_FIXTURE_DIR) + "/" + name;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("the bundled fixtures parse") {
  DecisionProblem p = load_fixture("diabetes.vbs");
  CHECK(p.variables().size() == 4);
  CHECK(p.valuations().size() == 4);
  CHECK(p.variable(2).kind == VarKind::Decision);
  CHECK(p.variable(2).frame == std::vector<std::string>{"t", "~t"});
  CHECK(p.precedence().arcs.size() == 3);
  CHECK(p.valuations()[0].values ==
        std::vector<double>{10, 5, 0, 10});

  DecisionProblem m = load_fixture("medical.vbs");
  CHECK(m.variables().size() == 4);
  CHECK(m.valuations().size() == 4);
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_line = [](const std::string& text, std::size_t line) {
    try {
      parse_model(text);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };

  expect_line("variable A random y n\nutility u over B values 1", 2);
  expect_line("wat A", 1);
  expect_line("variable A random", 1);
  expect_line("variable A maybe y n", 1);
  expect_line("variable A random y n\nvariable A random y n", 2);
  expect_line("variable A random y n\nprecede A", 2);
  expect_line("variable A random y n\nutility u over A values 1 2 3", 2);
  expect_line("variable A random y n\nutility u over A values 1 x", 2);
  expect_line("variable A random y n\nutility u over A A values 1 2 3 4", 2);
  expect_line("variable A random y n\nutility u A values 1 2", 2);
  expect_line("variable A random y n\nutility u over A 1 2", 2);
  expect_line("variable A random y n\npotential q over A values 0.5 1.5", 2);
  expect_line(
      "variable A random y n\nvariable B random y n\n"
      "utility u over B A values 1 2 3 4",
      3);
}

TEST_CASE("comments, blank lines and whitespace are ignored") {
  DecisionProblem p = parse_model(
      "# leading comment\n"
      "\n"
      "variable A decision act wait   # trailing comment\n"
      "   variable B random y n\n"
      "precede B A\n"
      "utility u over A values 3 4\n"
      "potential q over B values 0.5 0.5\n");
  CHECK(p.variables().size() == 2);
  CHECK(p.variable(0).frame == std::vector<std::string>{"act", "wait"});
}

TEST_CASE("structural validation failures surface from parse_model") {
  CHECK_THROWS_AS(parse_model("variable A decision y n\n"
                              "variable B random y n\n"
                              "precede B A\n"
                              "potential q over B values 0.5 0.5\n"),
                  ModelError);  // no utility
  CHECK_THROWS_AS(parse_model("variable A decision y n\n"
                              "variable B random y n\n"
                              "utility u over A values 1 2\n"
                              "potential q over B values 0.5 0.5\n"),
                  PerfectRecallViolation);
  CHECK_THROWS_AS(
      parse_model("variable A random y n\n"
                  "variable B random y n\n"
                  "precede A B\nprecede B A\n"
                  "utility u over A values 1 2\n"
                  "potential q over A values 0.5 0.5\n"
                  "potential r over B values 0.5 0.5\n"),
      CyclicPrecedence);
}

TEST_CASE("well-definedness is a flag on parsing") {
  std::string text =
      "variable A random y n\n"
      "utility u over A values 1 2\n"
      "potential q over A values 0.5 0.8\n";
  CHECK_NOTHROW(parse_model(text));
  CHECK_THROWS_AS(parse_model(text, {.check_well_defined = true}),
                  NotWellDefined);
}

TEST_CASE("serialization round-trips the fixtures") {
  for (const char* name : {"diabetes.vbs", "medical.vbs"}) {
    DecisionProblem p = load_fixture(name);
    DecisionProblem again = parse_model(serialize_model(p));
    CHECK(p == again);
    CHECK(serialize_model(p) == serialize_model(again));
  }
}

TEST_CASE("serialization round-trips random problems") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    DecisionProblem p = testgen::random_problem(rng);
    DecisionProblem again = parse_model(serialize_model(p));
    CAPTURE(serialize_model(p));
    CHECK(p == again);
  }
}

TEST_CASE("cli solve prints the report") {
  CliRun r = cli({"solve", fixture_path("diabetes.vbs")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("MEU 9.855000 / add 11 mul 28 cmp 4 div 0\n") == 0);
  CHECK(r.out.find("order D T B G\n") != std::string::npos);
  CHECK(r.out.find("strategy T over B G\n") != std::string::npos);
  CHECK(r.out.find("b ~g -> ~t") != std::string::npos);
  CHECK(r.out.find("~b g -> t") != std::string::npos);
}

TEST_CASE("cli solve honors --order and rejects bad ones") {
  CliRun ok = cli({"solve", fixture_path("diabetes.vbs"), "--order",
                   "D,T,G,B"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("MEU 9.855000") == 0);

  CliRun bad = cli({"solve", fixture_path("diabetes.vbs"), "--order",
                    "B,G,T,D"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("must be deleted first") != std::string::npos);

  CliRun unknown = cli({"solve", fixture_path("diabetes.vbs"), "--order",
                        "D,T,G,Z"});
  CHECK(unknown.code == 1);
}

TEST_CASE("cli json output matches the human numbers") {
  CliRun r = cli({"solve", fixture_path("diabetes.vbs"), "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(near(j["meu"].get<double>(), 9.855, 1e-12));
  CHECK(j["counter"]["add"] == 11);
  CHECK(j["counter"]["mul"] == 28);
  CHECK(j["counter"]["cmp"] == 4);
  CHECK(j["counter"]["div"] == 0);
  CHECK(j["order"] == nlohmann::json({"D", "T", "B", "G"}));
  REQUIRE(j["strategy"].size() == 1);
  CHECK(j["strategy"][0]["decision"] == "T");
  CHECK(j["strategy"][0]["over"] == nlohmann::json({"B", "G"}));
  CHECK(j["strategy"][0]["choices"] ==
        nlohmann::json({"t", "~t", "t", "~t"}));
}

TEST_CASE("cli check") {
  CHECK(cli({"check", fixture_path("diabetes.vbs")}).code == 0);
  CHECK(cli({"check", fixture_path("diabetes.vbs")}).out == "ok\n");
  CHECK(cli({"check", fixture_path("medical.vbs")}).code == 0);
  auto j = nlohmann::json::parse(
      cli({"check", fixture_path("medical.vbs"), "--json"}).out);
  CHECK(j["ok"] == true);
}

TEST_CASE("cli count prints one line") {
  CliRun r = cli({"count", fixture_path("medical.vbs"), "--order", "D,P,T,S"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "add 9 mul 20 cmp 2 div 0\n");
  CHECK(line_count(r.out) == 1);
}

TEST_CASE("cli order prints the heuristic sequence and first candidates") {
  CliRun r = cli({"order", fixture_path("medical.vbs")});
  REQUIRE(r.code == 0);
  CHECK(r.out == "D P T S\nfirst D P\n");

  auto j = nlohmann::json::parse(
      cli({"order", fixture_path("medical.vbs"), "--json"}).out);
  CHECK(j["order"] == nlohmann::json({"D", "P", "T", "S"}));
  CHECK(j["first_candidates"] == nlohmann::json({"D", "P"}));
}

TEST_CASE("cli oracle reports deltas against fusion") {
  CliRun r = cli({"oracle", fixture_path("diabetes.vbs")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("fusion 9.855000\n") == 0);
  CHECK(r.out.find("global 9.855000 delta 0.000000") != std::string::npos);
  CHECK(r.out.find("brute 9.855000 delta 0.000000") != std::string::npos);
  CHECK(r.out.find("strategy 9.855000 delta 0.000000") != std::string::npos);

  auto j = nlohmann::json::parse(
      cli({"oracle", fixture_path("diabetes.vbs"), "--json"}).out);
  CHECK(near(j["fusion"].get<double>(), 9.855, 1e-12));
  CHECK(near(j["delta_brute"].get<double>(), 0.0, 1e-12));
}

TEST_CASE("cli exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"solve"}).code == 2);
  CHECK(cli({"solve", "--order"}).code == 2);
  CHECK(cli({"solve", fixture_path("nope.vbs")}).code == 1);
  CHECK(cli({"--help"}).code == 0);

  // validation failure: a file that parses but is not well defined
  std::string bad = "/tmp/vbs_bad_tmp.vbs";
  {
    std::ofstream f(bad);
    f << "variable A random y n\n"
      << "utility u over A values 1 2\n"
      << "potential q over A values 0.2 0.2\n";
  }
  CliRun r = cli({"check", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("0.4") != std::string::npos);
  std::remove(bad.c_str());

  // syntax failure
  std::string broken = "/tmp/vbs_broken_tmp.vbs";
  {
    std::ofstream f(broken);
    f << "variable A random y n\nnope\n";
  }
  CHECK(cli({"check", broken}).code == 2);
  std::remove(broken.c_str());
}

TEST_CASE("mutated probabilities fail check") {
  // +0.5 on one entry of mu: still inside [0,1], caught by well-definedness
  DecisionProblem p = load_fixture("diabetes.vbs", false);
  auto vals = p.valuations();
  for (Valuation& v : vals)
    if (v.name == "mu") v.values[0] += 0.5;
  DecisionProblem mutated(p.variables(), vals, p.precedence());
  std::string path = "/tmp/vbs_mutated_tmp.vbs";
  {
    std::ofstream f(path);
    f << serialize_model(mutated);
  }
  CliRun r = cli({"check", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("not 1") != std::string::npos);
  std::remove(path.c_str());
}
