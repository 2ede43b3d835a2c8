#ifndef S1S_OMEGA_NBA_HPP
#define S1S_OMEGA_NBA_HPP

#include "s1s/omega/alphabet.hpp"
#include "s1s/up_sequence.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace s1s::omega {

using up_word = up_sequence<letter_t>;

struct transition {
  state_t dst;
  guard label;
};

/// Nondeterministic Büchi automaton with state-based acceptance.
class nba {
public:
  nba() = default;
  explicit nba(track_alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const track_alphabet& alphabet() const { return alphabet_; }
  unsigned width() const { return alphabet_.width(); }
  std::size_t size() const { return out_.size(); }

  state_t add_state(bool accepting = false) {
    out_.emplace_back();
    accepting_.push_back(accepting);
    return static_cast<state_t>(out_.size() - 1);
  }

  /// Adds `src -[g]-> dst`; an existing edge between the same pair is widened.
  void add_transition(state_t src, const guard& g, state_t dst) {
    check(src);
    check(dst);
    if (g.is_false()) return;
    for (auto& t : out_[src])
      if (t.dst == dst) {
        t.label = t.label | g;
        return;
      }
    out_[src].push_back(transition{dst, g});
  }

  void add_initial(state_t s) {
    check(s);
    for (state_t i : initial_)
      if (i == s) return;
    initial_.push_back(s);
  }
  void set_accepting(state_t s, bool v) {
    check(s);
    accepting_[s] = v;
  }

  const std::vector<transition>& out(state_t s) const { return out_[s]; }
  const std::vector<state_t>& initial() const { return initial_; }
  bool accepting(state_t s) const { return accepting_[s]; }

  std::size_t transition_count() const {
    std::size_t n = 0;
    for (const auto& o : out_) n += o.size();
    return n;
  }

  /// Edges ordered by destination; gives emitters a stable order.
  void sort_edges() {
    for (auto& o : out_)
      std::sort(o.begin(), o.end(),
                [](const transition& a, const transition& b) { return a.dst < b.dst; });
    std::sort(initial_.begin(), initial_.end());
  }

private:
  void check(state_t s) const {
    if (s >= out_.size()) throw precondition_violation("state index out of range");
  }

  track_alphabet alphabet_;
  std::vector<std::vector<transition>> out_;
  std::vector<state_t> initial_;
  std::vector<bool> accepting_;
};

/// Automaton with no states: the empty language.
inline nba empty_nba(const track_alphabet& alphabet) {
  return nba(alphabet);
}

inline nba universal_nba(const track_alphabet& alphabet) {
  nba a(alphabet);
  state_t s = a.add_state(true);
  a.add_initial(s);
  a.add_transition(s, guard::top(), s);
  return a;
}

/// Keep only states that are reachable from an initial state and from which
/// some edge continues; productive pruning is done by the caller via SCCs
/// where needed. Indices are renumbered in BFS order from the initial states.
inline nba restrict_to(const nba& a, const std::vector<bool>& keep) {
  std::vector<state_t> index(a.size(), static_cast<state_t>(-1));
  std::vector<state_t> order;
  std::vector<state_t> queue;
  for (state_t i : a.initial())
    if (keep[i] && index[i] == static_cast<state_t>(-1)) {
      index[i] = static_cast<state_t>(order.size());
      order.push_back(i);
    }
  for (std::size_t h = 0; h < order.size(); ++h)
    for (const auto& t : a.out(order[h]))
      if (keep[t.dst] && index[t.dst] == static_cast<state_t>(-1)) {
        index[t.dst] = static_cast<state_t>(order.size());
        order.push_back(t.dst);
      }
  nba r(a.alphabet());
  for (state_t s : order) r.add_state(a.accepting(s));
  for (state_t i : a.initial())
    if (keep[i]) r.add_initial(index[i]);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const auto& t : a.out(order[k]))
      if (keep[t.dst]) r.add_transition(static_cast<state_t>(k), t.label, index[t.dst]);
  return r;
}

/// Single-word automaton: accepts exactly `w`.
inline nba word_nba(const track_alphabet& alphabet, const up_word& w) {
  nba a(alphabet);
  std::size_t n = w.prefix.size() + w.period.size();
  for (std::size_t i = 0; i < n; ++i) a.add_state(true);
  a.add_initial(0);
  for (std::size_t i = 0; i < n; ++i) {
    state_t next = static_cast<state_t>(i + 1 < n ? i + 1 : w.prefix.size());
    a.add_transition(static_cast<state_t>(i), guard::exactly(w.at(i), alphabet.width()), next);
  }
  return a;
}

} // namespace s1s::omega

#endif
