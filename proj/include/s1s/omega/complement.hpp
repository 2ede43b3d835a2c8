#ifndef S1S_OMEGA_COMPLEMENT_HPP
#define S1S_OMEGA_COMPLEMENT_HPP

#include "s1s/omega/determinize.hpp"
#include "s1s/omega/emptiness.hpp"
#include "s1s/omega/ops.hpp"

#include <map>
#include <set>

namespace s1s::omega {

/// Parity to Büchi: a copy that tracks the run, plus one copy per even
/// priority e restricted to states of priority ≥ e and accepting on e.
/// The run jumps nondeterministically into the copy of its eventual
/// least priority.
inline nba dpa_to_nba(const dpa& d) {
  nba r(d.alphabet());
  const std::size_t n = d.size();
  std::vector<unsigned> evens;
  for (unsigned p : d.priorities())
    if (p % 2 == 0) evens.push_back(p);
  std::sort(evens.begin(), evens.end());
  evens.erase(std::unique(evens.begin(), evens.end()), evens.end());

  for (std::size_t s = 0; s < n; ++s) r.add_state(false);
  std::vector<std::vector<state_t>> copy(evens.size(), std::vector<state_t>(n, 0));
  for (std::size_t k = 0; k < evens.size(); ++k)
    for (state_t s = 0; s < n; ++s)
      if (d.priority(s) >= evens[k]) copy[k][s] = r.add_state(d.priority(s) == evens[k]);

  for (state_t s = 0; s < n; ++s) {
    std::map<state_t, std::vector<letter_t>> by_target;
    for (letter_t l = 0; l < d.letter_count(); ++l) by_target[d.succ(s, l)].push_back(l);
    for (const auto& [t, ls] : by_target) {
      guard g = guard_of_letters(ls, d.width());
      r.add_transition(s, g, t);
      for (std::size_t k = 0; k < evens.size(); ++k) {
        if (d.priority(t) < evens[k]) continue;
        r.add_transition(s, g, copy[k][t]);
        if (d.priority(s) >= evens[k]) r.add_transition(copy[k][s], g, copy[k][t]);
      }
    }
  }
  if (n > 0) r.add_initial(d.initial());
  return r;
}

enum class complement_method { via_determinization, rank_based };

/// Inputs with more states than this are refused by the rank-based method.
inline constexpr std::size_t rank_based_state_cap = 6;

namespace detail {

// Rank-based complement over level rankings f: Q → {⊥, 0..2n} with odd
// ranks barred on accepting states, and a breakpoint set O of even-ranked
// states that still owe a visit to an odd rank.
inline nba rank_complement(const nba& a, std::size_t max_states) {
  const std::size_t n = a.size();
  if (n > rank_based_state_cap)
    throw capacity_exceeded("rank-based complement limited to " +
                            std::to_string(rank_based_state_cap) + " input states");
  const int top = static_cast<int>(2 * n);
  using ranking = std::vector<int>;  // -1 is ⊥
  using node = std::pair<ranking, std::uint32_t>;

  nba r(a.alphabet());
  std::map<node, state_t> index;
  std::vector<node> order;
  auto get = [&](const node& v) {
    auto [it, fresh] = index.emplace(v, static_cast<state_t>(order.size()));
    if (fresh) {
      order.push_back(v);
      r.add_state(v.second == 0);
      if (order.size() > max_states)
        throw capacity_exceeded("rank-based complement exceeded " + std::to_string(max_states) +
                                " states");
    }
    return it->second;
  };

  ranking f0(n, -1);
  for (state_t i : a.initial()) f0[i] = top;
  r.add_initial(get({f0, 0}));

  const std::uint64_t letters = a.alphabet().letter_count();
  for (std::size_t h = 0; h < order.size(); ++h) {
    const ranking f = order[h].first;
    const std::uint32_t o = order[h].second;
    for (letter_t l = 0; l < letters; ++l) {
      std::vector<int> bound(n, -1);
      std::uint32_t from_o = 0;
      for (state_t q = 0; q < n; ++q) {
        if (f[q] < 0) continue;
        for (const auto& t : a.out(q)) {
          if (!t.label.matches(l)) continue;
          if (bound[t.dst] < 0 || f[q] < bound[t.dst]) bound[t.dst] = f[q];
          if (o >> q & 1) from_o |= 1u << t.dst;
        }
      }
      std::vector<state_t> live;
      for (state_t q = 0; q < n; ++q)
        if (bound[q] >= 0) live.push_back(q);
      // Odometer over all rankings below the bounds.
      ranking g(n, -1);
      for (state_t q : live) g[q] = 0;
      while (true) {
        std::uint32_t even = 0;
        for (state_t q : live)
          if (g[q] % 2 == 0) even |= 1u << q;
        std::uint32_t o2 = o == 0 ? even : (from_o & even);
        r.add_transition(static_cast<state_t>(h), guard::exactly(l, a.width()), get({g, o2}));
        std::size_t k = 0;
        for (; k < live.size(); ++k) {
          state_t q = live[k];
          int step = a.accepting(q) ? 2 : 1;
          if (g[q] + step <= bound[q]) {
            g[q] += step;
            break;
          }
          g[q] = 0;
        }
        if (k == live.size()) break;
      }
    }
  }
  return r;
}

} // namespace detail

inline nba nba_complement(const nba& a, complement_method method = complement_method::via_determinization,
                          std::size_t max_states = default_max_states) {
  if (method == complement_method::rank_based) return nba_trim(detail::rank_complement(a, max_states));
  return nba_trim(dpa_to_nba(dpa_complement(determinize(a, max_states))));
}

/// L(a) ⊆ L(b), by emptiness of a ∩ ¬b.
inline bool nba_included(const nba& a, const nba& b, std::size_t max_states = default_max_states) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  return nba_is_empty(nba_product(a, nba_complement(b, complement_method::via_determinization, max_states)));
}

inline bool language_equivalent(const nba& a, const nba& b, std::size_t max_states = default_max_states) {
  return nba_included(a, b, max_states) && nba_included(b, a, max_states);
}

/// L(a) = L(d). The complement of the deterministic side is a priority shift.
inline bool language_equivalent(const nba& a, const dpa& d, std::size_t max_states = default_max_states) {
  require_same_alphabet(a.alphabet(), d.alphabet());
  if (!nba_is_empty(nba_product(a, dpa_to_nba(dpa_complement(d))))) return false;
  return nba_is_empty(nba_product(dpa_to_nba(d), nba_complement(a, complement_method::via_determinization,
                                                                max_states)));
}

inline bool nba_is_universal(const nba& a, std::size_t max_states = default_max_states) {
  return nba_is_empty(nba_complement(a, complement_method::via_determinization, max_states));
}

} // namespace s1s::omega

#endif
