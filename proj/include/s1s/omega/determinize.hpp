#ifndef S1S_OMEGA_DETERMINIZE_HPP
#define S1S_OMEGA_DETERMINIZE_HPP

#include "s1s/omega/dpa.hpp"
#include "s1s/omega/nba.hpp"

#include <climits>
#include <map>

namespace s1s::omega {

inline constexpr std::size_t default_max_states = std::size_t{1} << 20;

/// True when there is one initial state and the labels leaving each state
/// are pairwise disjoint.
inline bool is_deterministic(const nba& a) {
  if (a.initial().size() != 1) return false;
  for (state_t s = 0; s < a.size(); ++s) {
    const auto& o = a.out(s);
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = i + 1; j < o.size(); ++j)
        if (!(o[i].label & o[j].label).is_false()) return false;
  }
  return true;
}

namespace detail {

// Safra tree in brace form: every node is an automaton state tagged with
// its innermost brace; `braces[b]` is the enclosing brace of b (or -1).
// Parents always have smaller indices than their children.
struct safra_tree {
  std::vector<std::pair<state_t, int>> nodes;  // sorted by state
  std::vector<int> braces;

  auto operator<=>(const safra_tree&) const = default;
};

class safra_builder {
public:
  explicit safra_builder(const nba& a) : a_(a) {}

  // Successor tree and the emitted colour (UINT_MAX for none): red 2b marks
  // brace b as deleted, green 2b+1 marks brace b as completed.
  std::pair<safra_tree, unsigned> succ(const safra_tree& t, letter_t l) {
    braces_ = t.braces;
    nodes_.clear();
    for (const auto& [q, b] : t.nodes)
      for (const auto& tr : a_.out(q))
        if (tr.label.matches(l)) update(b, tr.dst, a_.accepting(tr.dst));
    safra_tree r;
    r.nodes.assign(nodes_.begin(), nodes_.end());
    unsigned colour = finalize(r);
    return {std::move(r), colour};
  }

private:
  // True if the brace path of `a` is preferred over that of `b`: compared
  // from the root, the first differing brace is older, or `a` runs deeper.
  bool prefer(int a, int b) const {
    std::vector<int> pa, pb;
    while (a != b) {
      if (a > b) {
        pa.push_back(a);
        a = braces_[a];
      } else {
        pb.push_back(b);
        b = braces_[b];
      }
    }
    auto ia = pa.rbegin();
    auto ib = pb.rbegin();
    for (; ia != pa.rend() && ib != pb.rend(); ++ia, ++ib)
      if (*ia != *ib) return *ia < *ib;
    return pa.size() > pb.size();
  }

  void update(int brace, state_t dst, bool acc) {
    int nb = brace;
    if (acc) {
      nb = static_cast<int>(braces_.size());
      braces_.push_back(brace);
    }
    auto [it, fresh] = nodes_.emplace(dst, nb);
    if (fresh) return;
    if (prefer(nb, it->second)) {
      it->second = nb;
    } else if (nb != brace) {
      braces_.pop_back();
    }
  }

  unsigned finalize(safra_tree& r) {
    constexpr char is_empty = 1;
    constexpr char is_green = 2;
    const std::size_t nb = braces_.size();
    std::vector<char> flags(nb, is_empty | is_green);
    for (const auto& n : r.nodes) {
      int b = n.second;
      if (b < 0) continue;
      flags[b] &= ~is_green;  // holds a state directly
      while (b >= 0 && (flags[b] & is_empty)) {
        flags[b] &= ~is_empty;
        b = braces_[b];
      }
    }
    unsigned red = UINT_MAX, green = UINT_MAX;
    std::vector<unsigned> top(nb), decr_by(nb);
    unsigned decr = 0;
    for (unsigned b = 0; b < nb; ++b) {
      top[b] = b;
      int up = braces_[b];
      if (up >= 0 && (top[up] != static_cast<unsigned>(up) || (flags[up] & is_green))) {
        top[b] = top[up];
        flags[b] |= is_empty;  // swallowed by a green ancestor
      }
      if (flags[b] & is_empty) {
        ++decr;
        red = std::min(red, 2 * b);
      } else if (flags[b] & is_green) {
        green = std::min(green, 2 * b + 1);
      }
      decr_by[b] = decr;
    }
    r.braces.assign(nb - decr, -1);
    for (auto& n : r.nodes) {
      if (n.second < 0) continue;
      unsigned i = top[n.second];
      int parent = braces_[i];
      int j = parent >= 0 ? parent - static_cast<int>(decr_by[parent]) : -1;
      n.second = static_cast<int>(i - decr_by[i]);
      r.braces[n.second] = j;
    }
    return std::min(red, green);
  }

  const nba& a_;
  std::vector<int> braces_;
  std::map<state_t, int> nodes_;
};

// Deterministic Büchi input: same states plus a rejecting sink.
inline dpa determinize_deterministic(const nba& a) {
  dpa d(a.alphabet());
  for (state_t s = 0; s < a.size(); ++s) d.add_state(a.accepting(s) ? 0 : 1);
  state_t sink = d.add_state(1);
  for (state_t s = 0; s <= a.size(); ++s)
    for (letter_t l = 0; l < d.letter_count(); ++l) {
      state_t t = sink;
      if (s < a.size())
        for (const auto& tr : a.out(s))
          if (tr.label.matches(l)) t = tr.dst;
      d.set_succ(s, l, t);
    }
  d.set_initial(a.initial().front());
  return dpa_compact_priorities(dpa_reachable(d));
}

} // namespace detail

/// Safra determinization producing a min-even parity automaton.
///
/// A transition of the tree construction that completes brace b (green)
/// gets priority 2b+2; one that deletes brace b (red) gets 2b+1; silent
/// transitions get a large odd priority. Priorities move to states by
/// pairing each tree with the priority of the transition that entered it.
/// The result has 2^O(n log n) states in the worst case; exceeding
/// `max_states` raises capacity_exceeded.
inline dpa determinize(const nba& a, std::size_t max_states = default_max_states) {
  if (a.size() == 0) {
    dpa d(a.alphabet());
    state_t s = d.add_state(1);
    for (letter_t l = 0; l < d.letter_count(); ++l) d.set_succ(s, l, s);
    d.set_initial(s);
    return d;
  }
  if (is_deterministic(a)) return detail::determinize_deterministic(a);

  constexpr unsigned silent = (UINT_MAX >> 1) | 1u;
  const std::uint64_t letters = a.alphabet().letter_count();
  detail::safra_builder builder(a);

  std::map<detail::safra_tree, state_t> tree_id;
  std::vector<detail::safra_tree> trees;
  std::vector<std::vector<std::pair<state_t, unsigned>>> tree_succ;
  auto intern = [&](detail::safra_tree t) {
    auto [it, fresh] = tree_id.emplace(t, static_cast<state_t>(trees.size()));
    if (fresh) trees.push_back(std::move(t));
    return it->second;
  };

  detail::safra_tree init;
  for (state_t i : a.initial()) init.nodes.emplace_back(i, -1);
  std::sort(init.nodes.begin(), init.nodes.end());
  intern(init);

  // Expand trees breadth-first; the product with incoming priorities below.
  for (std::size_t h = 0; h < trees.size(); ++h) {
    std::vector<std::pair<state_t, unsigned>> row;
    row.reserve(letters);
    for (letter_t l = 0; l < letters; ++l) {
      auto [t, colour] = builder.succ(trees[h], l);
      unsigned p = colour == UINT_MAX ? silent : colour + 1;
      row.emplace_back(intern(std::move(t)), p);
      if (trees.size() > max_states)
        throw capacity_exceeded("determinization exceeded " + std::to_string(max_states) +
                                " states");
    }
    tree_succ.push_back(std::move(row));
  }

  dpa d(a.alphabet());
  std::map<std::pair<state_t, unsigned>, state_t> index;
  std::vector<std::pair<state_t, unsigned>> order;
  auto get = [&](state_t tree, unsigned p) {
    auto [it, fresh] = index.emplace(std::make_pair(tree, p), static_cast<state_t>(order.size()));
    if (fresh) {
      order.emplace_back(tree, p);
      d.add_state(p);
      if (order.size() > max_states)
        throw capacity_exceeded("determinization exceeded " + std::to_string(max_states) +
                                " states");
    }
    return it->second;
  };
  d.set_initial(get(0, silent));
  for (std::size_t h = 0; h < order.size(); ++h) {
    state_t tree = order[h].first;
    for (letter_t l = 0; l < letters; ++l) {
      auto [t, p] = tree_succ[tree][l];
      d.set_succ(static_cast<state_t>(h), l, get(t, p));
    }
  }
  return dpa_compact_priorities(d);
}

} // namespace s1s::omega

#endif
