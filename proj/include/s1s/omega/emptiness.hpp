#ifndef S1S_OMEGA_EMPTINESS_HPP
#define S1S_OMEGA_EMPTINESS_HPP

#include "s1s/omega/ops.hpp"

#include <optional>

namespace s1s::omega {

/// Accepting lasso. `stem_states` has one more entry than `stem_letters`
/// and ends where `loop_states` starts and ends.
struct lasso {
  std::vector<state_t> stem_states;
  std::vector<letter_t> stem_letters;
  std::vector<state_t> loop_states;
  std::vector<letter_t> loop_letters;

  up_word word() const { return up_word(stem_letters, loop_letters); }
  bool operator==(const lasso&) const = default;
};

inline bool nba_is_empty(const nba& a) {
  auto g = nba_graph(a);
  auto reach = reachable_from(g, a.initial());
  auto core = accepting_cores(a, g);
  for (state_t s = 0; s < a.size(); ++s)
    if (reach[s] && core[s]) return false;
  return true;
}

/// Checks that the lasso is a run of `a` whose loop visits an accepting state.
inline bool validate_lasso(const nba& a, const lasso& l) {
  if (l.stem_states.size() != l.stem_letters.size() + 1) return false;
  if (l.loop_states.size() != l.loop_letters.size() + 1 || l.loop_letters.empty()) return false;
  if (l.stem_states.back() != l.loop_states.front()) return false;
  if (l.loop_states.front() != l.loop_states.back()) return false;
  auto has_initial = std::find(a.initial().begin(), a.initial().end(), l.stem_states.front());
  if (has_initial == a.initial().end()) return false;
  auto step_ok = [&](state_t s, letter_t x, state_t t) {
    if (s >= a.size() || t >= a.size()) return false;
    for (const auto& tr : a.out(s))
      if (tr.dst == t && tr.label.matches(x)) return true;
    return false;
  };
  for (std::size_t i = 0; i < l.stem_letters.size(); ++i)
    if (!step_ok(l.stem_states[i], l.stem_letters[i], l.stem_states[i + 1])) return false;
  bool visited = false;
  for (std::size_t i = 0; i < l.loop_letters.size(); ++i) {
    if (!step_ok(l.loop_states[i], l.loop_letters[i], l.loop_states[i + 1])) return false;
    visited = visited || a.accepting(l.loop_states[i]);
  }
  return visited;
}

namespace detail {

// Least letter available on some edge from `from` into `into`, in track order.
inline std::optional<letter_t> least_step(const nba& a, const std::vector<bool>& from,
                                          const std::vector<bool>& into) {
  std::optional<letter_t> best;
  for (state_t s = 0; s < a.size(); ++s) {
    if (!from[s]) continue;
    for (const auto& t : a.out(s)) {
      if (!into[t.dst]) continue;
      auto l = t.label.least_letter(a.width());
      if (l && (!best || letter_key(*l, a.width()) < letter_key(*best, a.width()))) best = l;
    }
  }
  return best;
}

inline bool steps(const nba& a, state_t s, letter_t x, state_t t) {
  for (const auto& tr : a.out(s))
    if (tr.dst == t && tr.label.matches(x)) return true;
  return false;
}

// Lex-least lasso with the given stem length that loops at `c` in exactly
// `m` steps. The loop part is tracked on (state, seen-accepting) pairs.
inline lasso least_lasso_at(const nba& a, state_t c, std::size_t k, std::size_t m) {
  const std::size_t n = a.size();
  // Backward feasibility for the stem: F[i] can reach c in exactly k - i steps.
  std::vector<std::vector<bool>> F(k + 1, std::vector<bool>(n, false));
  F[k][c] = true;
  for (std::size_t i = k; i-- > 0;)
    for (state_t s = 0; s < n; ++s)
      for (const auto& t : a.out(s))
        if (F[i + 1][t.dst]) {
          F[i][s] = true;
          break;
        }
  // Loop part on pairs (s, flag), index s * 2 + flag.
  auto pid = [](state_t s, bool f) { return static_cast<std::size_t>(s) * 2 + (f ? 1 : 0); };
  std::vector<std::vector<bool>> G(m + 1, std::vector<bool>(2 * n, false));
  G[m][pid(c, true)] = true;
  for (std::size_t j = m; j-- > 0;)
    for (state_t s = 0; s < n; ++s)
      for (int f = 0; f < 2; ++f)
        for (const auto& t : a.out(s)) {
          bool nf = f || a.accepting(t.dst);
          if (G[j + 1][pid(t.dst, nf)]) {
            G[j][pid(s, f)] = true;
            break;
          }
        }

  lasso out;
  // Forward greedy over the stem.
  std::vector<std::vector<bool>> S(k + 1, std::vector<bool>(n, false));
  for (state_t i : a.initial())
    if (F[0][i]) S[0][i] = true;
  for (std::size_t i = 0; i < k; ++i) {
    letter_t l = *least_step(a, S[i], F[i + 1]);
    out.stem_letters.push_back(l);
    for (state_t s = 0; s < n; ++s) {
      if (!S[i][s]) continue;
      for (const auto& t : a.out(s))
        if (F[i + 1][t.dst] && t.label.matches(l)) S[i + 1][t.dst] = true;
    }
  }
  // Forward greedy over the loop, starting from (c, acc(c)).
  std::vector<std::vector<bool>> P(m + 1, std::vector<bool>(2 * n, false));
  P[0][pid(c, a.accepting(c))] = true;
  for (std::size_t j = 0; j < m; ++j) {
    std::optional<letter_t> best;
    for (state_t s = 0; s < n; ++s)
      for (int f = 0; f < 2; ++f) {
        if (!P[j][pid(s, f)]) continue;
        for (const auto& t : a.out(s)) {
          bool nf = f || a.accepting(t.dst);
          if (!G[j + 1][pid(t.dst, nf)]) continue;
          auto l = t.label.least_letter(a.width());
          if (!best || letter_key(*l, a.width()) < letter_key(*best, a.width())) best = l;
        }
      }
    out.loop_letters.push_back(*best);
    for (state_t s = 0; s < n; ++s)
      for (int f = 0; f < 2; ++f) {
        if (!P[j][pid(s, f)]) continue;
        for (const auto& t : a.out(s)) {
          bool nf = f || a.accepting(t.dst);
          if (G[j + 1][pid(t.dst, nf)] && t.label.matches(*best)) P[j + 1][pid(t.dst, nf)] = true;
        }
      }
  }

  // Backward reconstruction, smallest state index at each step.
  out.loop_states.assign(m + 1, c);
  std::size_t cur = pid(c, true);
  for (std::size_t j = m; j-- > 0;) {
    state_t next = static_cast<state_t>(cur / 2);
    bool next_flag = cur % 2;
    std::optional<std::size_t> pick;
    for (state_t s = 0; s < n && !pick; ++s)
      for (int f = 0; f < 2 && !pick; ++f) {
        if (!P[j][pid(s, f)]) continue;
        bool nf = f || a.accepting(next);
        if (nf == next_flag && steps(a, s, out.loop_letters[j], next)) pick = pid(s, f);
      }
    cur = *pick;
    out.loop_states[j] = static_cast<state_t>(cur / 2);
  }
  out.stem_states.assign(k + 1, c);
  for (std::size_t i = k; i-- > 0;) {
    for (state_t s = 0; s < n; ++s)
      if (S[i][s] && steps(a, s, out.stem_letters[i], out.stem_states[i + 1])) {
        out.stem_states[i] = s;
        break;
      }
  }
  return out;
}

inline bool word_less(const lasso& x, const lasso& y, unsigned width) {
  auto key = [width](const lasso& l) {
    std::vector<std::uint64_t> k;
    for (auto v : l.stem_letters) k.push_back(letter_key(v, width));
    for (auto v : l.loop_letters) k.push_back(letter_key(v, width));
    return k;
  };
  return key(x) < key(y);
}

} // namespace detail

/// Accepting lasso if the language is nonempty. Among all accepting lassos
/// the stem is shortest, then the loop, then the letter word is least in
/// track order; states are the smallest indices consistent with that word.
inline std::optional<lasso> nba_emptiness(const nba& a) {
  const std::size_t n = a.size();
  auto g = nba_graph(a);
  auto core = accepting_cores(a, g);
  // Stem length: BFS distance from the initial states to a core state.
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n, inf);
  std::vector<state_t> queue;
  for (state_t i : a.initial())
    if (dist[i] == inf) {
      dist[i] = 0;
      queue.push_back(i);
    }
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto w : g[queue[h]])
      if (dist[w] == inf) {
        dist[w] = dist[queue[h]] + 1;
        queue.push_back(w);
      }
  std::size_t k = inf;
  for (state_t s = 0; s < n; ++s)
    if (core[s] && dist[s] < k) k = dist[s];
  if (k == inf) return std::nullopt;

  // Shortest accepting loop through each candidate, via BFS on (state, flag).
  auto loop_length = [&](state_t c) {
    std::vector<std::size_t> d(2 * n, inf);
    std::vector<std::size_t> q;
    auto start = static_cast<std::size_t>(c) * 2 + (a.accepting(c) ? 1 : 0);
    d[start] = 0;
    q.push_back(start);
    for (std::size_t h = 0; h < q.size(); ++h) {
      auto v = q[h];
      state_t s = static_cast<state_t>(v / 2);
      bool f = v % 2;
      for (auto w : g[s]) {
        bool nf = f || a.accepting(w);
        if (w == c && nf) return d[v] + 1;
        auto u = static_cast<std::size_t>(w) * 2 + (nf ? 1 : 0);
        if (d[u] == inf) {
          d[u] = d[v] + 1;
          q.push_back(u);
        }
      }
    }
    return inf;
  };
  std::vector<state_t> cands;
  std::size_t m = inf;
  for (state_t s = 0; s < n; ++s) {
    if (!core[s] || dist[s] != k) continue;
    auto len = loop_length(s);
    if (len < m) {
      m = len;
      cands.clear();
    }
    if (len == m) cands.push_back(s);
  }

  std::optional<lasso> best;
  for (state_t c : cands) {
    lasso l = detail::least_lasso_at(a, c, k, m);
    if (!best || detail::word_less(l, *best, a.width())) best = std::move(l);
  }
  return best;
}

} // namespace s1s::omega

#endif
