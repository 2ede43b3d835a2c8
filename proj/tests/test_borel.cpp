#include "s1s/borel/classify.hpp"
#include "s1s/mso/compile.hpp"
#include "s1s/mso/parser.hpp"
#include "s1s/omega/hoa.hpp"
#include "s1s/testing/suites.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace s1s;
using namespace s1s::borel;

namespace {

omega::dpa of_formula(const char* text) { return testing::determinized(mso::compile(*mso::parse_formula(text))); }

omega::dpa constant_dpa(unsigned priority) {
  omega::dpa d(omega::track_alphabet({"X"}));
  auto s = d.add_state(priority);
  d.set_succ(s, 0, s);
  d.set_succ(s, 1, s);
  d.set_initial(s);
  return d;
}

// safety: X never holds a 1, built by hand
omega::dpa never_one() {
  omega::dpa d(omega::track_alphabet({"X"}));
  auto ok = d.add_state(0), bad = d.add_state(1);
  d.set_succ(ok, 0, ok);
  d.set_succ(ok, 1, bad);
  d.set_succ(bad, 0, bad);
  d.set_succ(bad, 1, bad);
  d.set_initial(ok);
  return d;
}

} // namespace

TEST_CASE("designated examples", "[borel]") {
  auto r = classify(of_formula("all1 x. ex1 y. (x < y and y in X)"));
  CHECK(r.is_gdelta);
  CHECK(!r.is_fsigma);
  CHECK(r.label == "gdelta_proper");

  auto o = classify(of_formula("ex1 x. x in X"));
  CHECK(o.is_open);
  CHECK(!o.is_closed);
  CHECK(o.label == "open_proper");

  auto c = classify(of_formula("all1 x. x in X"));
  CHECK(c.is_closed);
  CHECK(!c.is_open);
  CHECK(c.label == "closed_proper");

  for (const auto& f : testing::borel_formulas()) {
    if (!*f.label) continue;
    INFO(f.text);
    CHECK(classify(of_formula(f.text)).label == f.label);
  }
}

TEST_CASE("hand-built automata", "[borel]") {
  auto safety = classify(never_one());
  CHECK(safety.is_gdelta);
  CHECK(safety.is_closed);
  CHECK(!safety.is_open);

  // finitely many ones: rejecting state on 1, accepting on 0
  omega::dpa fin(omega::track_alphabet({"X"}));
  auto a = fin.add_state(2), b = fin.add_state(1);
  for (auto s : {a, b}) {
    fin.set_succ(s, 0, a);
    fin.set_succ(s, 1, b);
  }
  fin.set_initial(a);
  auto f = classify(fin);
  CHECK(!f.is_gdelta);
  CHECK(f.is_fsigma);
  CHECK(f.label == "fsigma_proper");
  CHECK(!f.is_closed);
  CHECK_THROWS_AS(enumerate_loops(fin, 2), capacity_exceeded);

  for (unsigned p : {0u, 1u}) {
    auto r = classify(constant_dpa(p));
    CHECK(r.is_closed);
    CHECK(r.is_open);
    CHECK(r.label == "clopen");
  }
  CHECK(!classify(of_formula("all1 x. ex1 y. (x < y and y in X)")).is_closed);
}

TEST_CASE("duality and consistency", "[borel]") {
  testing::rng g(61);
  for (int i = 0; i < 60; ++i) {
    auto d = testing::random_dpa(g, 5, 1, 4);
    auto r = classify(d);
    CHECK(report_inconsistency(r).empty());
    CHECK(classify(omega::dpa_complement(d)) == dual(r));
    CHECK(dual(dual(r)) == r);
  }
  borel_report bad{true, false, false, true, "open_proper"};
  CHECK(!report_inconsistency(bad).empty());
  borel_report wrong{false, false, true, false, "clopen"};
  CHECK(!report_inconsistency(wrong).empty());
}

TEST_CASE("polynomial tests agree with loop enumeration", "[borel]") {
  testing::rng g(67);
  for (int i = 0; i < 80; ++i) {
    auto d = testing::random_dpa(g, 6, 1, 4);
    auto ls = enumerate_loops(d);
    for (std::size_t k = 0; k < ls.loops.size(); ++k) CHECK(!ls.loops[k].empty());
    CHECK(landweber_gdelta(d) == gdelta_by_loops(ls));
    CHECK(landweber_fsigma(d) == fsigma_by_loops(ls));
  }
}

TEST_CASE("closure automaton", "[borel]") {
  testing::rng g(71);
  for (int i = 0; i < 30; ++i) {
    auto d = testing::random_dpa(g, 4, 1, 3);
    auto cl = omega::dpa_to_nba(closure_dpa(d)), l = omega::dpa_to_nba(d);
    CHECK(omega::nba_included(l, cl));
    CHECK(is_closed(closure_dpa(d)));
  }
}

TEST_CASE("json report", "[borel]") {
  auto j = to_json(classify(never_one()));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"is_open", "is_closed", "is_gdelta", "is_fsigma", "label"});
  CHECK(j.dump() == R"({"is_open":false,"is_closed":true,"is_gdelta":true,"is_fsigma":true,"label":"closed_proper"})");
}

TEST_CASE("three-state parity sample", "[borel]") {
  std::ifstream in(S1S_SAMPLES_DIR "/parity3.hoa");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  auto a = omega::hoa_parse(ss.str());
  REQUIRE(std::holds_alternative<omega::dpa>(a));
  auto r = classify(std::get<omega::dpa>(a));
  CHECK(r.label == "gdelta_proper");
  CHECK(r == classify(testing::determinized(omega::dpa_to_nba(std::get<omega::dpa>(a)))));
}
