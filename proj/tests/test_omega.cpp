#include "s1s/omega/complement.hpp"
#include "s1s/omega/hoa.hpp"
#include "s1s/testing/random.hpp"

#include <catch_amalgamated.hpp>

using namespace s1s;
using namespace s1s::omega;

namespace {

track_alphabet one_track() { return track_alphabet({"a"}); }

// "infinitely many a": accepting state entered on a
nba inf_a() {
  nba n(one_track());
  auto s0 = n.add_state(false), s1 = n.add_state(true);
  n.add_initial(s0);
  for (auto s : {s0, s1}) {
    n.add_transition(s, guard::literal(0, false), s0);
    n.add_transition(s, guard::literal(0, true), s1);
  }
  return n;
}

// "eventually always !a", guessing the switch point
nba eventually_never_a_guess() {
  nba n(one_track());
  auto s0 = n.add_state(false), s1 = n.add_state(true);
  n.add_initial(s0);
  n.add_transition(s0, guard::top(), s0);
  n.add_transition(s0, guard::literal(0, false), s1);
  n.add_transition(s1, guard::literal(0, false), s1);
  return n;
}

// the same language with a dead end copy and a redundant initial state
nba eventually_never_a_other() {
  nba n(one_track());
  auto s0 = n.add_state(false), s1 = n.add_state(false), s2 = n.add_state(true), s3 = n.add_state(true);
  n.add_initial(s0);
  n.add_initial(s1);
  n.add_transition(s0, guard::literal(0, true), s0);
  n.add_transition(s0, guard::literal(0, false), s1);
  n.add_transition(s1, guard::top(), s0);
  n.add_transition(s1, guard::literal(0, false), s2);
  n.add_transition(s2, guard::literal(0, false), s2);
  n.add_transition(s2, guard::literal(0, true), s3);
  return n;
}

up_word word(std::vector<letter_t> pre, std::vector<letter_t> per) { return up_word(std::move(pre), std::move(per)); }

} // namespace

TEST_CASE("alphabet letters and guards", "[omega]") {
  track_alphabet al({"X", "Y", "z"});
  CHECK(al.width() == 3);
  CHECK(al.index_of("Y") == 1u);
  CHECK(!al.index_of("W"));
  CHECK_THROWS_AS(track_alphabet({"X", "X"}), error);
  CHECK(letter_from_key(letter_key(5, 3), 3) == 5);
  CHECK(letter_key(1, 3) == 4);  // track 0 is the most significant

  guard g = guard::literal(0, true) | guard::literal(1, true);
  CHECK(g.matches(1));
  CHECK(g.matches(2));
  CHECK(!g.matches(4));
  CHECK((g & g.negate(3)).is_false());
  guard cover = g | g.negate(3);
  for (letter_t l = 0; l < 8; ++l) CHECK(cover.matches(l));
  guard p = (guard::literal(0, true) & guard::literal(2, false)).project(0);
  CHECK(p.matches(0));
  CHECK(p.matches(1));
  CHECK(!p.matches(2));  // old track 2 is now track 1

  std::vector<letter_t> some{0, 3, 5};
  guard h = guard_of_letters(some, 3);
  for (letter_t l = 0; l < 8; ++l) CHECK(h.matches(l) == (l == 0 || l == 3 || l == 5));
}

TEST_CASE("membership of ultimately periodic words", "[omega]") {
  nba a = inf_a();
  CHECK(nba_member_up(a, word({}, {1})));
  CHECK(nba_member_up(a, word({0, 0}, {0, 1})));
  CHECK(!nba_member_up(a, word({1, 1, 1}, {0})));
  CHECK_THROWS_AS(nba_member_up(a, word({}, {2})), alphabet_mismatch);
  CHECK(!nba_member_up(empty_nba(one_track()), word({}, {0})));
  CHECK(nba_member_up(universal_nba(one_track()), word({1}, {0})));
}

TEST_CASE("emptiness returns the canonical lasso", "[omega]") {
  auto l = nba_emptiness(inf_a());
  REQUIRE(l);
  CHECK(validate_lasso(inf_a(), *l));
  CHECK(l->stem_letters.empty());
  CHECK(l->loop_letters == std::vector<letter_t>{1, 0});  // (10)^ω is below 1^ω
  CHECK(nba_is_empty(empty_nba(one_track())));

  // stem is forced through a: the least word is a then 0^ω
  nba b(one_track());
  auto s0 = b.add_state(false), s1 = b.add_state(true);
  b.add_initial(s0);
  b.add_transition(s0, guard::literal(0, true), s1);
  b.add_transition(s1, guard::top(), s1);
  auto m = nba_emptiness(b);
  REQUIRE(m);
  CHECK(m->stem_letters == std::vector<letter_t>{1});
  CHECK(m->loop_letters == std::vector<letter_t>{0});

  testing::rng g(3);
  for (int i = 0; i < 100; ++i) {
    nba r = testing::random_nba(g, 4, 2);
    auto w = nba_emptiness(r);
    CHECK(w.has_value() != nba_is_empty(r));
    if (w) {
      CHECK(validate_lasso(r, *w));
      CHECK(nba_member_up(r, w->word()));
    }
  }
}

TEST_CASE("product, union and projection", "[omega]") {
  nba a = inf_a(), b = eventually_never_a_guess();
  nba both = nba_product(a, b), either = nba_union(a, b);
  CHECK(nba_is_empty(both));
  CHECK(nba_is_universal(either));

  testing::rng g(5);
  for (int i = 0; i < 40; ++i) {
    nba x = testing::random_nba(g, 3, 1), y = testing::random_nba(g, 3, 1), z = testing::random_nba(g, 3, 1);
    up_word w({static_cast<letter_t>(g.below(2))},
              {static_cast<letter_t>(g.below(2)), static_cast<letter_t>(g.below(2))});
    bool mx = nba_member_up(x, w), my = nba_member_up(y, w), mz = nba_member_up(z, w);
    CHECK(nba_member_up(nba_product(x, y), w) == (mx && my));
    CHECK(nba_member_up(nba_product(y, x), w) == (mx && my));
    CHECK(nba_member_up(nba_union(x, nba_union(y, z)), w) == (mx || my || mz));
    CHECK(nba_member_up(nba_union(nba_union(x, y), z), w) == (mx || my || mz));
    CHECK(nba_member_up(nba_union(x, nba_product(x, y)), w) == mx);
  }

  track_alphabet two({"X", "Y"});
  nba c(two);
  auto s = c.add_state(true);
  c.add_initial(s);
  c.add_transition(s, guard::literal(0, true) & guard::literal(1, false), s);
  nba p = nba_project(c, "Y");
  CHECK(p.alphabet() == track_alphabet({"X"}));
  CHECK(nba_member_up(p, word({}, {1})));
  CHECK(!nba_member_up(p, word({}, {0})));
  CHECK_THROWS_AS(nba_project(c, "Z"), unknown_track);

  nba wide = nba_cylindrify(inf_a(), track_alphabet({"a", "b"}));
  CHECK(nba_member_up(wide, word({}, {3})));
  CHECK(nba_member_up(wide, word({}, {1})));
  CHECK(!nba_member_up(wide, word({}, {2})));
}

TEST_CASE("determinization preserves the language", "[omega]") {
  testing::rng g(17);
  for (int i = 0; i < 20; ++i) {
    nba a = testing::random_nba(g, 4, 1);
    dpa d = determinize(a);
    CHECK(language_equivalent(a, d));
    CHECK(language_equivalent(a, dpa_to_nba(d)));
  }
  // a deterministic input is completed by at most one sink
  nba det = inf_a();
  REQUIRE(is_deterministic(det));
  CHECK(dpa_reachable(determinize(det)).size() <= det.size() + 1);
  CHECK(determinize(empty_nba(one_track())).size() == 1);
}

TEST_CASE("complementation", "[omega]") {
  for (auto m : {complement_method::via_determinization, complement_method::rank_based}) {
    CHECK(nba_is_universal(nba_complement(empty_nba(one_track()), m)));
    nba c = nba_complement(inf_a(), m);
    CHECK(nba_member_up(c, word({1, 0}, {0})));
    CHECK(!nba_member_up(c, word({}, {1, 0})));
  }
  testing::rng g(23);
  for (int i = 0; i < 30; ++i) {
    nba a = testing::random_nba(g, 3, 1);
    for (auto m : {complement_method::via_determinization, complement_method::rank_based}) {
      nba c = nba_complement(a, m);
      for (int k = 0; k < 4; ++k) {
        up_word w({static_cast<letter_t>(g.below(2))},
                  {static_cast<letter_t>(g.below(2)), static_cast<letter_t>(g.below(2))});
        CHECK(nba_member_up(c, w) != nba_member_up(a, w));
      }
    }
  }
  nba big(one_track());
  for (int i = 0; i < 7; ++i) big.add_state(i % 2 == 0);
  big.add_initial(0);
  CHECK_THROWS_AS(nba_complement(big, complement_method::rank_based), capacity_exceeded);
}

TEST_CASE("language equivalence", "[omega]") {
  CHECK(language_equivalent(inf_a(), inf_a()));
  CHECK(!language_equivalent(empty_nba(one_track()), universal_nba(one_track())));
  CHECK(language_equivalent(eventually_never_a_guess(), eventually_never_a_other()));
  CHECK(!language_equivalent(inf_a(), eventually_never_a_guess()));
}

TEST_CASE("dpa complement and compaction", "[omega]") {
  testing::rng g(29);
  for (int i = 0; i < 20; ++i) {
    dpa d = testing::random_dpa(g, 4, 1, 5);
    nba n = dpa_to_nba(d), c = dpa_to_nba(dpa_complement(d));
    CHECK(nba_is_empty(nba_product(n, c)));
    CHECK(nba_is_universal(nba_union(n, c)));
    dpa k = dpa_compact_priorities(d);
    CHECK(k.max_priority() <= d.max_priority());
    CHECK(language_equivalent(n, k));
  }
}

TEST_CASE("HOA round trip", "[omega]") {
  nba a = inf_a();
  std::string text = hoa_emit(a);
  auto back = hoa_parse(text);
  REQUIRE(std::holds_alternative<nba>(back));
  CHECK(hoa_emit(std::get<nba>(back)) == text);
  CHECK(language_equivalent(a, std::get<nba>(back)));

  dpa d = determinize(eventually_never_a_guess());
  std::string dt = hoa_emit(d);
  auto dback = hoa_parse(dt);
  REQUIRE(std::holds_alternative<dpa>(dback));
  const dpa& e = std::get<dpa>(dback);
  CHECK(hoa_emit(e) == dt);
  REQUIRE(e.size() == d.size());
  for (state_t s = 0; s < d.size(); ++s) {
    CHECK(e.priority(s) == d.priority(s));
    for (letter_t l = 0; l < 2; ++l) CHECK(e.succ(s, l) == d.succ(s, l));
  }

  testing::rng g(31);
  for (int i = 0; i < 20; ++i) {
    nba r = testing::random_nba(g, 4, 2);
    std::string t = hoa_emit(r);
    CHECK(hoa_emit(hoa_parse(t)) == t);
  }
}

TEST_CASE("HOA errors", "[omega]") {
  const char* missing = "HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"a\"\n--BODY--\nState: 0\n[t] 0\n--END--\n";
  CHECK_THROWS_AS(hoa_parse(missing), parse_error);
  const char* rabin =
      "HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"a\"\nAcceptance: 2 Fin(0) & Inf(1)\n--BODY--\nState: 0 {1}\n[t] 0\n--END--\n";
  CHECK_THROWS_AS(hoa_parse(rabin), unsupported_acceptance);
  const char* trans_acc =
      "HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"a\"\nAcceptance: 1 Inf(0)\n--BODY--\nState: 0\n[t] 0 {0}\n--END--\n";
  CHECK_THROWS_AS(hoa_parse(trans_acc), unsupported_acceptance);
  try {
    hoa_parse("HOA: v1\nStates: x\n");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).rfind("2:", 0) == 0);
  }

  const char* parity =
      "HOA: v1\nStates: 3\nStart: 0\nAP: 1 \"a\"\nacc-name: parity min even 3\n"
      "Acceptance: 3 Inf(0) | (Fin(1) & Inf(2))\n--BODY--\n"
      "State: 0 {2}\n[!0] 0\n[0] 1\nState: 1 {1}\n[0] 1\n[!0] 2\nState: 2 {0}\n[!0] 0\n[0] 1\n--END--\n";
  auto p = hoa_parse(parity);
  REQUIRE(std::holds_alternative<dpa>(p));
  CHECK(std::get<dpa>(p).priority(2) == 0);
}
