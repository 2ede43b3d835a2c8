#ifndef S1S_OMEGA_GRAPH_HPP
#define S1S_OMEGA_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace s1s::omega {

using adjacency = std::vector<std::vector<std::uint32_t>>;

struct scc_result {
  std::vector<std::uint32_t> component;  // component id per vertex
  std::uint32_t count = 0;
  std::vector<bool> nontrivial;          // has an internal edge
};

/// Tarjan's algorithm, iterative. Vertices with `active[v] == false` are
/// skipped along with their edges (an empty mask means all active).
inline scc_result strongly_connected(const adjacency& g, const std::vector<bool>& active = {}) {
  constexpr std::uint32_t none = static_cast<std::uint32_t>(-1);
  const std::size_t n = g.size();
  auto on = [&](std::uint32_t v) { return active.empty() || active[v]; };

  scc_result r;
  r.component.assign(n, none);
  std::vector<std::uint32_t> index(n, none), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  std::uint32_t counter = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (!on(root) || index[root] != none) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] == none) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (next < g[v].size()) {
        std::uint32_t w = g[v][next++];
        if (!on(w)) continue;
        if (index[w] == none) {
          call.emplace_back(w, 0);
        } else if (on_stack[w] && index[w] < low[v]) {
          low[v] = index[w];
        }
        continue;
      }
      std::uint32_t u = v;
      call.pop_back();
      if (!call.empty()) {
        std::uint32_t parent = call.back().first;
        if (low[u] < low[parent]) low[parent] = low[u];
      }
      if (low[u] == index[u]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          r.component[w] = r.count;
        } while (w != u);
        ++r.count;
      }
    }
  }

  r.nontrivial.assign(r.count, false);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!on(v)) continue;
    for (std::uint32_t w : g[v])
      if (on(w) && r.component[w] == r.component[v]) r.nontrivial[r.component[v]] = true;
  }
  return r;
}

/// Vertices reachable from `sources`.
inline std::vector<bool> reachable_from(const adjacency& g, const std::vector<std::uint32_t>& sources) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::uint32_t> work;
  for (auto s : sources)
    if (!seen[s]) {
      seen[s] = true;
      work.push_back(s);
    }
  while (!work.empty()) {
    auto v = work.back();
    work.pop_back();
    for (auto w : g[v])
      if (!seen[w]) {
        seen[w] = true;
        work.push_back(w);
      }
  }
  return seen;
}

/// Vertices that can reach some vertex in `targets`.
inline std::vector<bool> coreachable(const adjacency& g, const std::vector<bool>& targets) {
  adjacency rev(g.size());
  for (std::uint32_t v = 0; v < g.size(); ++v)
    for (auto w : g[v]) rev[w].push_back(v);
  std::vector<std::uint32_t> sources;
  for (std::uint32_t v = 0; v < g.size(); ++v)
    if (targets[v]) sources.push_back(v);
  return reachable_from(rev, sources);
}

} // namespace s1s::omega

#endif
