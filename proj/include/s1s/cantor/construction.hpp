#ifndef S1S_CANTOR_CONSTRUCTION_HPP
#define S1S_CANTOR_CONSTRUCTION_HPP

#include "s1s/cantor/point.hpp"

#include <algorithm>

namespace s1s::cantor {

/// Closed intervals of the stage set K_n, ascending. Each interval
/// [l, l + q_i^{-1}] of K_i keeps its two outer pieces of length q_{i+1}^{-1}.
inline std::vector<std::pair<rational, rational>> kn_intervals(std::size_t n, const profile& pr) {
  pr.require_geometric();
  pr.require_depth(n);
  std::vector<std::pair<rational, rational>> cur{{rational(0), rational(1)}};
  for (std::size_t i = 0; i < n; ++i) {
    const rational len = pr.inv(i), sub = pr.inv(i + 1);
    std::vector<std::pair<rational, rational>> next;
    next.reserve(cur.size() * 2);
    for (const auto& [l, r] : cur) {
      next.emplace_back(l, l + sub);
      next.emplace_back(l + len - sub, l + len);
    }
    cur = std::move(next);
  }
  return cur;
}

/// The 2^{n+1} endpoints of K_n, ascending.
inline std::vector<rational> enumerate_Kn(std::size_t n, const profile& pr) {
  std::vector<rational> out;
  for (const auto& [l, r] : kn_intervals(n, pr)) {
    out.push_back(l);
    out.push_back(r);
  }
  return out;
}

/// Stage-n approximation of nu: the left end of the K_n interval holding x,
/// or the right end of the last interval below x when x sits in a gap. On
/// points of K this is the value of the depth-n truncation.
inline rational nu_brute(const rational& x, std::size_t n, const profile& pr) {
  if (x < 0 || x > 1) throw precondition_violation("nu_brute needs x in [0, 1]");
  rational best = 0;
  for (const auto& [l, r] : kn_intervals(n, pr)) {
    if (l > x) break;
    best = x <= r ? l : r;
  }
  return best;
}

/// Whether x lies in K_n.
inline bool in_Kn(const rational& x, std::size_t n, const profile& pr) {
  for (const auto& [l, r] : kn_intervals(n, pr))
    if (l <= x && x <= r) return true;
  return false;
}

/// For each right end r of a gap removed by stage n: the gap length v(r)
/// and w(r), the least left end l > r of a gap with v(l) ≥ v(r), or 1.
struct vw_row {
  rational r, v, w;
};

inline std::vector<vw_row> brute_vw(std::size_t n, const profile& pr) {
  auto iv = kn_intervals(n, pr);
  struct gap {
    rational lo, hi;
  };
  std::vector<gap> gaps;
  for (std::size_t i = 0; i + 1 < iv.size(); ++i) gaps.push_back({iv[i].second, iv[i + 1].first});
  std::vector<vw_row> out;
  for (const auto& g : gaps) {
    vw_row row{g.hi, g.hi - g.lo, 1};
    for (const auto& h : gaps)
      if (h.lo > g.hi && h.hi - h.lo >= row.v) {
        row.w = h.lo;
        break;
      }
    out.push_back(row);
  }
  return out;
}

} // namespace s1s::cantor

#endif
