#include "s1s/mso/compile.hpp"
#include "s1s/mso/model_check.hpp"
#include "s1s/mso/parser.hpp"
#include "s1s/mso/templates.hpp"
#include "s1s/omega/complement.hpp"
#include "s1s/testing/suites.hpp"

#include <catch_amalgamated.hpp>

using namespace s1s;
using namespace s1s::mso;

namespace {

bool decides(const char* text) { return decide(*parse_formula(text)); }

up_bits bits(std::vector<bool> pre, std::vector<bool> per) { return up_bits(std::move(pre), std::move(per)); }

} // namespace

TEST_CASE("parser precedence and printing", "[mso]") {
  auto f = parse_formula("not x in X and y in X or z in X -> x in Y -> y in Y <-> true");
  REQUIRE(f->op == kind::equivalence);
  const auto& imp = *f->kids[0];
  REQUIRE(imp.op == kind::implication);
  CHECK(imp.kids[1]->op == kind::implication);  // right associative
  REQUIRE(imp.kids[0]->op == kind::disjunction);
  const auto& conj = *imp.kids[0]->kids[0];
  REQUIRE(conj.op == kind::conjunction);
  CHECK(conj.kids[0]->op == kind::negation);

  auto q = parse_formula("ex1 x. x in X and s(x) in X");
  REQUIRE(q->op == kind::ex1);
  CHECK(q->kids[0]->op == kind::conjunction);  // the body extends right

  for (const char* text : {"ex1 x. (x in X and s(x) in up(01;1))", "all2 X. X sub Y or not X = Y",
                           "ex1 y. dsum(1/2,-1;X1,X2 at s(y)) > 0", "first_in(X) and s_in(X at x)",
                           "(x < y -> y < x) <-> false"}) {
    auto g = parse_formula(text);
    CHECK(to_string(*parse_formula(to_string(*g))) == to_string(*g));
  }
}

TEST_CASE("parser errors", "[mso]") {
  CHECK_THROWS_AS(parse_formula("ex1 X. x in X"), sort_error);
  CHECK_THROWS_AS(parse_formula("ex2 x. x in X"), sort_error);
  CHECK_THROWS_AS(parse_formula("X in Y"), sort_error);
  CHECK_THROWS_AS(parse_formula("x sub Y"), sort_error);
  CHECK_THROWS_AS(parse_formula("x = X"), sort_error);
  CHECK_THROWS_AS(parse_formula("dsum(1,2;X at x) = 0"), parse_error);
  try {
    parse_formula("ex1 x.\n  (x in X and )");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 15);
  }
  CHECK_THROWS_AS(parse_formula("x in X)"), parse_error);
  CHECK_THROWS_AS(parse_formula("0 in X"), parse_error);
}

TEST_CASE("decision examples", "[mso]") {
  CHECK(!decides("ex1 x. s(x) = x"));
  CHECK(decides("all2 X. ((ex1 z. (first(z) and z in X)) and (all1 x. (x in X -> s(x) in X)) -> all1 x. x in X)"));
  CHECK(decides("ex2 X. all1 x. (x in X <-> not s(x) in X)"));
  CHECK(decides("all2 X. (ex1 x. x in X) -> ex1 x. (x in X and all1 y. (y < x -> not y in X))"));
  CHECK(decides("true"));
  CHECK(!decides("false"));
  CHECK(decides("all2 X. (first_in(X) <-> ex1 x. (first(x) and x in X))"));
  CHECK(decides("all2 X. all1 x. (s_in(X at s(x)) <-> s(x) in X)"));
  CHECK(decides("all2 X. all2 Y. ((all1 x. dsum(1,1;X,Y at x) = 2) -> X = Y)"));
  CHECK(!decides("ex2 X. all1 x. dsum(2;X at x) = 1"));
  CHECK_THROWS_AS(decide(*parse_formula("x in X")), precondition_violation);
}

TEST_CASE("regression sentences", "[mso]") {
  for (const auto& c : testing::regression_sentences()) {
    INFO(c.text);
    CHECK(decides(c.text) == c.expected);
  }
}

TEST_CASE("canonical witnesses", "[mso]") {
  auto w = witness(*parse_formula("ex1 x. (x in X and s(x) in Y)"));
  REQUIRE(w);
  CHECK(to_string(w->sets.at("X")) == "up(1;0)");
  CHECK(to_string(w->sets.at("Y")) == "up(01;0)");

  auto free = witness(*parse_formula("x in X and s(x) in Y"));
  REQUIRE(free);
  CHECK(free->positions.at("x") == 0);
  CHECK(model_check_qf(*parse_formula("x in X and s(x) in Y"), *free));

  CHECK(!witness(*parse_formula("x in X and not x in X")));

  auto two = parse_formula("x < y and y in X");
  auto v = witness(*two);
  REQUIRE(v);
  CHECK(v->positions.at("x") < v->positions.at("y"));
  CHECK(v->sets.at("X").at(v->positions.at("y")));
  CHECK(verify_witness(two, *v));
}

TEST_CASE("less-than agrees with its second-order definition", "[mso]") {
  auto prim = parse_formula("x < y");
  auto sugar = parse_formula("not x = y and all2 Z. ((s(x) in Z and all1 z. (z in Z -> s(z) in Z)) -> y in Z)");
  std::vector<std::string> env{"x", "y"};
  CHECK(omega::language_equivalent(compile(*prim, env), compile(*sugar, env)));
  CHECK(decides("all1 x. all1 y. (x < y <-> ex1 z. (s(x) = z and (z = y or z < y)))"));
}

TEST_CASE("model checking routes agree", "[mso]") {
  const char* formulas[] = {"x in X and not s(x) in Y", "X sub Y or y < x", "dsum(1,-1;X,Y at s(x)) = 0",
                            "dsum(1/2,1/2;X,Y at y) > 0 <-> (y in X or y in Y)", "first_in(X) -> x = y",
                            "s(s(x)) = y and X = Y"};
  testing::rng g(11);
  for (const char* text : formulas) {
    auto f = parse_formula(text);
    for (int i = 0; i < 15; ++i) {
      witness_assignment s;
      s.sets["X"] = testing::random_up_set(g);
      s.sets["Y"] = testing::random_up_set(g);
      s.positions["x"] = g.below(5);
      s.positions["y"] = g.below(5);
      auto fv = free_variables(*f);
      witness_assignment used;
      for (const auto& v : fv) {
        if (s.sets.count(v)) used.sets[v] = s.sets[v];
        else used.positions[v] = s.positions[v];
      }
      INFO(text);
      CHECK(model_check_qf(*f, used) == holds_by_automaton(*f, used));
    }
  }
  CHECK_THROWS_AS(model_check_qf(*parse_formula("ex1 x. x in X"), {}), precondition_violation);
}

TEST_CASE("encode and decode are inverse", "[mso]") {
  auto al = omega::track_alphabet({"X", "Y", "x"});
  witness_assignment s;
  s.sets["X"] = bits({1, 0}, {0, 1});
  s.sets["Y"] = bits({}, {1});
  s.positions["x"] = 3;
  auto back = decode(al, encode(al, s));
  CHECK(back.positions == s.positions);
  CHECK(back.sets.at("X") == s.sets.at("X").canonical());
  CHECK(back.sets.at("Y") == s.sets.at("Y").canonical());
}

TEST_CASE("digit-sum templates", "[mso]") {
  std::vector<rational> q{1, -1};
  auto theta = make_template(template_kind::theta, q);
  CHECK(decide(*apply_template(theta, {bits({1}, {0}), bits({1}, {0})})));
  CHECK(!decide(*apply_template(theta, {bits({1}, {0}), bits({0}, {0})})));

  auto omega_t = make_template(template_kind::omega, {rational(1), rational(1)});
  CHECK(!decide(*apply_template(omega_t, {bits({}, {1}), bits({}, {1})})));
  CHECK(decide(*apply_template(omega_t, {bits({}, {1, 0}), bits({}, {0, 1})})));

  auto psi = make_template(template_kind::psi, q);
  auto at2 = quantify(kind::ex1, "y",
                      binary(kind::conjunction, member(pos_var("y"), set_const(bits({0, 0, 1}, {0}))), psi));
  CHECK(decide(*apply_template(at2, {bits({1, 0, 1}, {0}), bits({1, 0, 0}, {0})})));
  CHECK(!decide(*apply_template(at2, {bits({1, 1, 1}, {0}), bits({1, 0, 0}, {0})})));

  auto chi2 = make_template(template_kind::chi2, q);
  CHECK(free_variables(*chi2) == std::set<std::string>{"X1", "X2", "y"});
  CHECK_THROWS_AS(make_template(template_kind::phi, {}), precondition_violation);
  CHECK(template_kind_of("psi") == template_kind::psi);
  CHECK(!template_kind_of("rho"));
}
