#ifndef S1S_BOREL_CLASSIFY_HPP
#define S1S_BOREL_CLASSIFY_HPP

#include "s1s/omega/complement.hpp"

#include "json.hpp"

#include <string>

namespace s1s::borel {

using omega::adjacency;
using omega::dpa;
using omega::state_t;

struct borel_report {
  bool is_open = false;
  bool is_closed = false;
  bool is_gdelta = false;
  bool is_fsigma = false;
  std::string label;

  friend bool operator==(const borel_report&, const borel_report&) = default;
};

namespace detail {

inline std::vector<bool> reachable_states(const dpa& d) {
  if (d.size() == 0) return {};
  return omega::reachable_from(d.graph(), {d.initial()});
}

inline std::vector<bool> at_least(const dpa& d, const std::vector<bool>& within, unsigned p) {
  std::vector<bool> r(d.size(), false);
  for (state_t s = 0; s < d.size(); ++s) r[s] = within[s] && d.priority(s) >= p;
  return r;
}

/// Some cycle inside `within` has least priority of the given parity.
inline bool has_loop_of_parity(const dpa& d, const adjacency& g, const std::vector<bool>& within, unsigned parity) {
  for (unsigned p = parity; p <= d.max_priority(); p += 2) {
    auto mask = at_least(d, within, p);
    auto scc = omega::strongly_connected(g, mask);
    for (state_t s = 0; s < d.size(); ++s)
      if (mask[s] && d.priority(s) == p && scc.nontrivial[scc.component[s]]) return true;
  }
  return false;
}

} // namespace detail

/// Every superloop of an accepting loop is accepting. A violation is an odd
/// p and an SCC C of the states with priority ≥ p, reachable, holding a
/// p-state and an accepting loop above p: that loop and a cycle through the
/// p-state close up inside C into a rejecting superloop.
inline bool landweber_gdelta(const dpa& d) {
  const auto g = d.graph();
  const auto reach = detail::reachable_states(d);
  for (unsigned p = 1; p <= d.max_priority(); p += 2) {
    auto mask = detail::at_least(d, reach, p);
    auto scc = omega::strongly_connected(g, mask);
    std::vector<bool> has_p(scc.count, false);
    for (state_t s = 0; s < d.size(); ++s)
      if (mask[s] && d.priority(s) == p && scc.nontrivial[scc.component[s]]) has_p[scc.component[s]] = true;
    for (std::uint32_t c = 0; c < scc.count; ++c) {
      if (!has_p[c]) continue;
      std::vector<bool> inner(d.size(), false);
      for (state_t s = 0; s < d.size(); ++s) inner[s] = mask[s] && scc.component[s] == c && d.priority(s) > p;
      if (detail::has_loop_of_parity(d, g, inner, 0)) return false;
    }
  }
  return true;
}

/// Dual test: every superloop of a rejecting loop is rejecting.
inline bool landweber_fsigma(const dpa& d) { return landweber_gdelta(omega::dpa_complement(d)); }

/// Safety automaton of the topological closure: states with a nonempty
/// residual keep priority 0, the rest collapse into a rejecting sink.
inline dpa closure_dpa(const dpa& d) {
  const auto g = d.graph();
  const auto reach = detail::reachable_states(d);
  std::vector<bool> core(d.size(), false);
  for (unsigned e = 0; e <= d.max_priority(); e += 2) {
    auto mask = detail::at_least(d, reach, e);
    auto scc = omega::strongly_connected(g, mask);
    for (state_t s = 0; s < d.size(); ++s)
      if (mask[s] && d.priority(s) == e && scc.nontrivial[scc.component[s]]) core[s] = true;
  }
  auto live = omega::coreachable(g, core);
  dpa r(d.alphabet());
  for (state_t s = 0; s < d.size(); ++s) r.add_state(live[s] ? 0 : 1);
  state_t sink = r.add_state(1);
  for (state_t s = 0; s < d.size(); ++s)
    for (omega::letter_t l = 0; l < d.letter_count(); ++l) {
      state_t t = d.succ(s, l);
      r.set_succ(s, l, live[s] && live[t] ? t : sink);
    }
  for (omega::letter_t l = 0; l < d.letter_count(); ++l) r.set_succ(sink, l, sink);
  r.set_initial(d.size() == 0 ? sink : d.initial());
  return omega::dpa_reachable(r);
}

/// L(d) equals its closure; L ⊆ closure always holds, so test closure ∩ ¬L.
inline bool prefix_closed_equal(const dpa& d) {
  auto c = omega::dpa_to_nba(closure_dpa(d));
  return omega::nba_is_empty(omega::nba_product(c, omega::dpa_to_nba(omega::dpa_complement(d))));
}

inline bool is_closed(const dpa& d) { return prefix_closed_equal(d); }
inline bool is_open(const dpa& d) { return prefix_closed_equal(omega::dpa_complement(d)); }

inline std::string label_of(bool open, bool closed, bool gdelta, bool fsigma) {
  if (open && closed) return "clopen";
  if (open) return "open_proper";
  if (closed) return "closed_proper";
  if (gdelta && fsigma) return "delta2_proper";
  if (gdelta) return "gdelta_proper";
  if (fsigma) return "fsigma_proper";
  return "bc_pi2_proper";
}

inline borel_report classify(const dpa& d) {
  borel_report r;
  r.is_open = is_open(d);
  r.is_closed = is_closed(d);
  r.is_gdelta = landweber_gdelta(d);
  r.is_fsigma = landweber_fsigma(d);
  r.label = label_of(r.is_open, r.is_closed, r.is_gdelta, r.is_fsigma);
  return r;
}

/// Empty string when the report is internally consistent, else the reason.
inline std::string report_inconsistency(const borel_report& r) {
  if ((r.is_open || r.is_closed) && !(r.is_gdelta && r.is_fsigma)) return "open or closed set outside delta2";
  if (r.label != label_of(r.is_open, r.is_closed, r.is_gdelta, r.is_fsigma)) return "label disagrees with booleans";
  return {};
}

/// Report expected for the complement language.
inline borel_report dual(const borel_report& r) {
  return {r.is_closed, r.is_open, r.is_fsigma, r.is_gdelta,
          label_of(r.is_closed, r.is_open, r.is_fsigma, r.is_gdelta)};
}

inline nlohmann::ordered_json to_json(const borel_report& r) {
  nlohmann::ordered_json j;
  j["is_open"] = r.is_open;
  j["is_closed"] = r.is_closed;
  j["is_gdelta"] = r.is_gdelta;
  j["is_fsigma"] = r.is_fsigma;
  j["label"] = r.label;
  return j;
}

/// Explicit loop family of a DPA: every reachable state set that is
/// strongly connected by its own edges, with its least priority.
struct loop_structure {
  std::vector<bool> reachable;
  std::vector<std::vector<state_t>> loops;
  std::vector<unsigned> least_priority;
};

inline constexpr std::size_t default_loop_cap = std::size_t{1} << 16;

inline loop_structure enumerate_loops(const dpa& d, std::size_t cap = default_loop_cap) {
  loop_structure ls;
  const auto g = d.graph();
  ls.reachable = detail::reachable_states(d);
  auto scc = omega::strongly_connected(g, ls.reachable);
  std::vector<std::vector<state_t>> members(scc.count);
  for (state_t s = 0; s < d.size(); ++s)
    if (ls.reachable[s]) members[scc.component[s]].push_back(s);
  for (std::uint32_t c = 0; c < scc.count; ++c) {
    const auto& m = members[c];
    if (!scc.nontrivial[c]) continue;
    if (m.size() >= 64 || (std::uint64_t{1} << m.size()) > cap)
      throw capacity_exceeded("component of " + std::to_string(m.size()) + " states exceeds the loop cap");
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m.size()); ++bits) {
      std::vector<bool> mask(d.size(), false);
      std::vector<state_t> set;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (bits >> i & 1u) {
          mask[m[i]] = true;
          set.push_back(m[i]);
        }
      auto sub = omega::strongly_connected(g, mask);
      const auto root = sub.component[set[0]];
      bool connected = sub.nontrivial[root];
      for (state_t s : set) connected = connected && sub.component[s] == root;
      if (!connected) continue;
      if (ls.loops.size() >= cap) throw capacity_exceeded("loop family exceeds " + std::to_string(cap));
      unsigned least = d.priority(set[0]);
      for (state_t s : set) least = std::min(least, d.priority(s));
      ls.loops.push_back(std::move(set));
      ls.least_priority.push_back(least);
    }
  }
  return ls;
}

namespace detail {

inline bool superloop_closed(const loop_structure& ls, unsigned parity) {
  for (std::size_t i = 0; i < ls.loops.size(); ++i) {
    if (ls.least_priority[i] % 2 != parity) continue;
    for (std::size_t j = 0; j < ls.loops.size(); ++j) {
      if (ls.least_priority[j] % 2 == parity) continue;
      if (std::includes(ls.loops[j].begin(), ls.loops[j].end(), ls.loops[i].begin(), ls.loops[i].end()))
        return false;
    }
  }
  return true;
}

} // namespace detail

/// Loop-enumeration versions of the two Landweber tests.
inline bool gdelta_by_loops(const loop_structure& ls) { return detail::superloop_closed(ls, 0); }
inline bool fsigma_by_loops(const loop_structure& ls) { return detail::superloop_closed(ls, 1); }

} // namespace s1s::borel

#endif
