#ifndef S1S_OMEGA_DPA_HPP
#define S1S_OMEGA_DPA_HPP

#include "s1s/omega/alphabet.hpp"
#include "s1s/omega/graph.hpp"

#include <algorithm>
#include <vector>

namespace s1s::omega {

/// Deterministic parity automaton with state-based priorities. A run is
/// accepting when the least priority seen infinitely often is even.
/// Transitions are stored as a full table over the letter space.
class dpa {
public:
  dpa() = default;
  explicit dpa(track_alphabet alphabet)
      : alphabet_(std::move(alphabet)), letters_(alphabet_.letter_count()) {}

  const track_alphabet& alphabet() const { return alphabet_; }
  unsigned width() const { return alphabet_.width(); }
  std::uint64_t letter_count() const { return letters_; }
  std::size_t size() const { return priority_.size(); }

  state_t add_state(unsigned priority) {
    priority_.push_back(priority);
    table_.resize(table_.size() + letters_, 0);
    return static_cast<state_t>(priority_.size() - 1);
  }
  void set_succ(state_t s, letter_t l, state_t t) { table_[s * letters_ + l] = t; }
  void set_initial(state_t s) { initial_ = s; }
  void set_priority(state_t s, unsigned p) { priority_[s] = p; }

  state_t succ(state_t s, letter_t l) const { return table_[s * letters_ + l]; }
  state_t initial() const { return initial_; }
  unsigned priority(state_t s) const { return priority_[s]; }
  const std::vector<unsigned>& priorities() const { return priority_; }

  unsigned max_priority() const {
    return priority_.empty() ? 0 : *std::max_element(priority_.begin(), priority_.end());
  }

  /// Successor sets with duplicate targets removed.
  adjacency graph() const {
    adjacency g(size());
    for (state_t s = 0; s < size(); ++s) {
      for (letter_t l = 0; l < letters_; ++l) g[s].push_back(succ(s, l));
      std::sort(g[s].begin(), g[s].end());
      g[s].erase(std::unique(g[s].begin(), g[s].end()), g[s].end());
    }
    return g;
  }

private:
  track_alphabet alphabet_;
  std::uint64_t letters_ = 1;
  std::vector<state_t> table_;
  std::vector<unsigned> priority_;
  state_t initial_ = 0;
};

/// Complement by shifting every priority up by one.
inline dpa dpa_complement(const dpa& d) {
  dpa r = d;
  for (state_t s = 0; s < r.size(); ++s) r.set_priority(s, d.priority(s) + 1);
  return r;
}

/// Restrict to reachable states, renumbered in BFS order from the initial
/// state with letters explored in increasing index order.
inline dpa dpa_reachable(const dpa& d) {
  std::vector<state_t> index(d.size(), static_cast<state_t>(-1));
  std::vector<state_t> order{d.initial()};
  index[d.initial()] = 0;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (letter_t l = 0; l < d.letter_count(); ++l) {
      state_t t = d.succ(order[h], l);
      if (index[t] == static_cast<state_t>(-1)) {
        index[t] = static_cast<state_t>(order.size());
        order.push_back(t);
      }
    }
  dpa r(d.alphabet());
  for (state_t s : order) r.add_state(d.priority(s));
  for (std::size_t k = 0; k < order.size(); ++k)
    for (letter_t l = 0; l < d.letter_count(); ++l)
      r.set_succ(static_cast<state_t>(k), l, index[d.succ(order[k], l)]);
  r.set_initial(0);
  return r;
}

/// Dense renumbering of priorities that preserves order and parity.
inline dpa dpa_compact_priorities(const dpa& d) {
  std::vector<unsigned> used = d.priorities();
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<std::pair<unsigned, unsigned>> map;
  unsigned next = 0;
  for (unsigned p : used) {
    if ((next & 1u) != (p & 1u)) ++next;
    map.emplace_back(p, next);
  }
  dpa r = d;
  for (state_t s = 0; s < r.size(); ++s) {
    auto it = std::lower_bound(map.begin(), map.end(), std::make_pair(d.priority(s), 0u));
    r.set_priority(s, it->second);
  }
  return r;
}

} // namespace s1s::omega

#endif
