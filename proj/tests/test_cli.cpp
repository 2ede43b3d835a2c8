#include "s1s/cli.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

namespace {

struct outcome {
  int code;
  std::string out, err;
};

outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "s1s");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = s1s::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("decide and witness", "[cli]") {
  auto r = run({"decide", "ex1 x. s(x) = x"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");
  CHECK(run({"decide", "ex1 x. first(x)", "--format", "json"}).out == "{\"result\":true}\n");

  auto w = run({"witness", "ex1 x. (x in X and s(x) in Y)"});
  CHECK(w.code == 0);
  CHECK(w.out == "X = up(1;0)\nY = up(01;0)\n");
  CHECK(run({"witness", "x in X and not x in X"}).out == "unsatisfiable\n");
  CHECK(run({"witness", "x in X", "--format", "json"}).out == "{\"X\":\"up(1;0)\",\"x\":0}\n");
}

TEST_CASE("classify", "[cli]") {
  auto r = run({"classify", "--formula", "all1 x. ex1 y. (x<y and y in X)", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["label"] == "gdelta_proper");

  auto t = run({"classify", "--hoa", S1S_SAMPLES_DIR "/parity3.hoa"});
  CHECK(t.code == 0);
  CHECK(t.out.rfind("label: gdelta_proper\n", 0) == 0);
  CHECK(run({"classify", "--hoa", S1S_SAMPLES_DIR "/inf_ones.hoa"}).out.rfind("label: gdelta_proper\n", 0) == 0);

  auto bad = run({"classify", "--hoa", S1S_SAMPLES_DIR "/no_acceptance.hoa"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("error: ParseError: ", 0) == 0);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "--formula", "x in X", "--hoa", "-"}).code == 2);
}

TEST_CASE("compile emits HOA that parses back", "[cli]") {
  auto r = run({"compile", "all1 x. ex1 y. (x<y and y in X)", "--dpa"});
  REQUIRE(r.code == 0);
  auto a = s1s::omega::hoa_parse(r.out);
  CHECK(std::holds_alternative<s1s::omega::dpa>(a));
  auto n = run({"compile", "ex1 x. x in X"});
  REQUIRE(n.code == 0);
  CHECK(std::holds_alternative<s1s::omega::nba>(s1s::omega::hoa_parse(n.out)));
}

TEST_CASE("eval", "[cli]") {
  auto r = run({"eval", "1/2*pt(1;0)", "--nu", "--profile", "geometric:4", "--depth", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "nu = inv(1) ≈ 0.25 ± 0\n");
  CHECK(run({"eval", "1/2*pt(1;0)", "--nu"}).out == "nu = inv(1)\n");
  CHECK(run({"eval", "pt(1;0) - pt(01;0)", "--sign"}).out == "sign = 1\n");
  CHECK(run({"eval", "pt(001;0)", "--mu"}).out == "mu = 3\n");
  CHECK(run({"eval", "inv(3)", "--lambda", "--profile", "geometric:4"}).out == "lambda = 3\n");
  CHECK(run({"eval", "pt(101;0)", "--e", "2"}).out == "e = pt(1;0)\n");
  CHECK(run({"eval", "pt(;0)", "--interval", "inner", "--at", "1"}).out ==
        "interval_lo = inv(1)\ninterval_hi = pt(1;0)\n");
  auto j = run({"eval", "inv(1)", "--format", "json", "--profile", "geometric:4"});
  CHECK(j.out == "{\"x\":\"inv(1)\",\"x_approx\":\"0.25 ± 0\"}\n");

  auto sign_fail = run({"eval", "pt(1;0) - 3*pt(01;0)", "--sign", "--profile", "geometric:4"});
  CHECK(sign_fail.code == 1);
  CHECK(sign_fail.err.rfind("error: GrowthInsufficient: ", 0) == 0);
  CHECK(run({"eval", "pt(1;"}).code == 1);
  CHECK(run({"eval", "inv(1)", "--profile", "geometric:3"}).code == 1);
  CHECK(run({"eval", "inv(1)", "--profile", "banana"}).code == 1);
  CHECK(run({"eval", "inv(1)", "--interval", "sideways", "--at", "1"}).code == 2);
}

TEST_CASE("kn", "[cli]") {
  CHECK(run({"kn", "2", "--profile", "geometric:4"}).out == "0 1/16 3/16 1/4 3/4 13/16 15/16 1\n");
  CHECK(run({"kn", "1", "--profile", "geometric:4", "--format", "json"}).out == "[\"0\",\"1/4\",\"3/4\",\"1\"]\n");
  auto vw = run({"kn", "1", "--vw", "--profile", "geometric:4"});
  CHECK(vw.code == 0);
  CHECK(vw.out == "3/4 1/2 1\n");
  CHECK(run({"kn", "1"}).code == 1);
  CHECK(run({"kn", "40", "--profile", "geometric:4"}).code == 1);
}

TEST_CASE("usage and configuration", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"decide"}).code == 2);
  CHECK(run({"decide", "x in", "--format", "xml"}).code == 2);
  auto bad = run({"decide", "ex1 X. x in X"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("error: SortError: ", 0) == 0);
  CHECK(run({"--help"}).code == 0);

  std::string path = "s1s_cli_test.ini";
  {
    std::ofstream f(path);
    f << "profile=geometric:4\ndepth=3\n";
  }
  CHECK(run({"--config", path, "eval", "inv(1)"}).out == "x = inv(1) ≈ 0.25 ± 0\n");
  CHECK(run({"--config", path, "eval", "inv(1)", "--profile", "formal"}).out == "x = inv(1)\n");
  std::remove(path.c_str());
}
