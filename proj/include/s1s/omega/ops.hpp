#ifndef S1S_OMEGA_OPS_HPP
#define S1S_OMEGA_OPS_HPP

#include "s1s/omega/graph.hpp"
#include "s1s/omega/nba.hpp"

#include <map>
#include <tuple>

namespace s1s::omega {

inline adjacency nba_graph(const nba& a) {
  adjacency g(a.size());
  for (state_t s = 0; s < a.size(); ++s)
    for (const auto& t : a.out(s)) g[s].push_back(t.dst);
  return g;
}

/// States lying in a nontrivial SCC that contains an accepting state.
inline std::vector<bool> accepting_cores(const nba& a, const adjacency& g) {
  auto scc = strongly_connected(g);
  std::vector<bool> good_comp(scc.count, false);
  for (state_t s = 0; s < a.size(); ++s)
    if (a.accepting(s) && scc.nontrivial[scc.component[s]]) good_comp[scc.component[s]] = true;
  std::vector<bool> core(a.size(), false);
  for (state_t s = 0; s < a.size(); ++s) core[s] = good_comp[scc.component[s]];
  return core;
}

/// Drop states that are unreachable or cannot reach an accepting cycle.
inline nba nba_trim(const nba& a) {
  auto g = nba_graph(a);
  auto reach = reachable_from(g, a.initial());
  auto live = coreachable(g, accepting_cores(a, g));
  std::vector<bool> keep(a.size());
  for (state_t s = 0; s < a.size(); ++s) keep[s] = reach[s] && live[s];
  return restrict_to(a, keep);
}

/// Two-phase product: phase 0 waits for an accepting state of `a`, phase 1
/// for one of `b`. Only reachable pairs are built.
inline nba nba_product(const nba& a, const nba& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  nba r(a.alphabet());
  std::map<std::tuple<state_t, state_t, int>, state_t> index;
  std::vector<std::tuple<state_t, state_t, int>> order;
  auto get = [&](state_t p, state_t q, int phase) {
    auto key = std::make_tuple(p, q, phase);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    state_t id = r.add_state(phase == 0 && a.accepting(p));
    index.emplace(key, id);
    order.push_back(key);
    return id;
  };
  for (state_t p : a.initial())
    for (state_t q : b.initial()) r.add_initial(get(p, q, 0));
  for (std::size_t h = 0; h < order.size(); ++h) {
    auto [p, q, phase] = order[h];
    int next = phase;
    if (phase == 0 && a.accepting(p)) next = 1;
    else if (phase == 1 && b.accepting(q)) next = 0;
    for (const auto& ta : a.out(p))
      for (const auto& tb : b.out(q)) {
        guard g = ta.label & tb.label;
        if (g.is_false()) continue;
        state_t dst = get(ta.dst, tb.dst, next);
        r.add_transition(static_cast<state_t>(h), g, dst);
      }
  }
  return r;
}

/// Disjoint union: states of `a` first, then those of `b`.
inline nba nba_union(const nba& a, const nba& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  nba r(a.alphabet());
  for (state_t s = 0; s < a.size(); ++s) r.add_state(a.accepting(s));
  for (state_t s = 0; s < b.size(); ++s) r.add_state(b.accepting(s));
  const auto off = static_cast<state_t>(a.size());
  for (state_t s = 0; s < a.size(); ++s)
    for (const auto& t : a.out(s)) r.add_transition(s, t.label, t.dst);
  for (state_t s = 0; s < b.size(); ++s)
    for (const auto& t : b.out(s)) r.add_transition(s + off, t.label, t.dst + off);
  for (state_t i : a.initial()) r.add_initial(i);
  for (state_t i : b.initial()) r.add_initial(i + off);
  return r;
}

inline nba nba_project(const nba& a, const std::string& track) {
  auto idx = a.alphabet().index_of(track);
  if (!idx) throw unknown_track("no track named '" + track + "'");
  std::vector<std::string> rest = a.alphabet().tracks();
  rest.erase(rest.begin() + *idx);
  nba r{track_alphabet(std::move(rest))};
  for (state_t s = 0; s < a.size(); ++s) r.add_state(a.accepting(s));
  for (state_t s = 0; s < a.size(); ++s)
    for (const auto& t : a.out(s)) r.add_transition(s, t.label.project(*idx), t.dst);
  for (state_t i : a.initial()) r.add_initial(i);
  return r;
}

/// Re-express `a` over a wider alphabet; tracks absent from `a` are free.
inline nba nba_cylindrify(const nba& a, const track_alphabet& wider) {
  std::vector<unsigned> map;
  for (const auto& name : a.alphabet().tracks()) {
    auto idx = wider.index_of(name);
    if (!idx) throw unknown_track("track '" + name + "' missing from target alphabet");
    map.push_back(*idx);
  }
  nba r(wider);
  for (state_t s = 0; s < a.size(); ++s) r.add_state(a.accepting(s));
  for (state_t s = 0; s < a.size(); ++s)
    for (const auto& t : a.out(s)) r.add_transition(s, t.label.remap(map), t.dst);
  for (state_t i : a.initial()) r.add_initial(i);
  return r;
}

/// Membership of an ultimately periodic word: the product with the
/// single-word automaton, then an accepting-cycle check on the product graph.
inline bool nba_member_up(const nba& a, const up_word& w) {
  if (w.period.empty()) throw precondition_violation("word with empty period");
  const letter_t limit = a.width() >= 64 ? ~letter_t{0} : (letter_t{1} << a.width()) - 1;
  auto check = [&](letter_t l) {
    if (l & ~limit) throw alphabet_mismatch("word letter wider than the automaton alphabet");
  };
  for (auto l : w.prefix) check(l);
  for (auto l : w.period) check(l);

  const std::size_t len = w.prefix.size() + w.period.size();
  auto id = [&](state_t q, std::size_t i) { return static_cast<std::uint32_t>(q * len + i); };
  adjacency g(a.size() * len);
  for (state_t q = 0; q < a.size(); ++q)
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t next = i + 1 < len ? i + 1 : w.prefix.size();
      for (const auto& t : a.out(q))
        if (t.label.matches(w.at(i))) g[id(q, i)].push_back(id(t.dst, next));
    }
  std::vector<std::uint32_t> start;
  for (state_t q : a.initial()) start.push_back(id(q, 0));
  auto reach = reachable_from(g, start);
  auto scc = strongly_connected(g, reach);
  for (state_t q = 0; q < a.size(); ++q)
    for (std::size_t i = 0; i < len; ++i) {
      auto v = id(q, i);
      if (reach[v] && a.accepting(q) && scc.nontrivial[scc.component[v]]) return true;
    }
  return false;
}

} // namespace s1s::omega

#endif
