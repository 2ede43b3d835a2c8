#ifndef S1S_UP_SEQUENCE_HPP
#define S1S_UP_SEQUENCE_HPP

#include "s1s/error.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace s1s {

/// An ultimately periodic sequence `prefix · period^ω`.
///
/// Used for ω-words over bitvector letters, for characteristic sets (bit
/// sequences) and for digit-sum streams (rational sequences). Equality via
/// `operator==` is structural; compare `canonical()` forms for semantic
/// equality.
template <class T>
struct up_sequence {
  std::vector<T> prefix;
  std::vector<T> period;

  up_sequence() = default;
  up_sequence(std::vector<T> p, std::vector<T> q)
      : prefix(std::move(p)), period(std::move(q)) {
    if (period.empty())
      throw precondition_violation("ultimately periodic sequence with empty period");
  }

  typename std::vector<T>::const_reference at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return period[(i - prefix.size()) % period.size()];
  }

  /// Minimal period length first, then minimal prefix length.
  up_sequence canonical() const {
    if (period.empty())
      throw precondition_violation("ultimately periodic sequence with empty period");
    up_sequence out = *this;
    std::size_t p = out.period.size();
    for (std::size_t d = 1; d <= p; ++d) {
      if (p % d != 0) continue;
      bool ok = true;
      for (std::size_t i = d; i < p && ok; ++i) ok = out.period[i] == out.period[i - d];
      if (ok) {
        out.period.resize(d);
        break;
      }
    }
    while (!out.prefix.empty() && out.prefix.back() == out.period.back()) {
      out.prefix.pop_back();
      std::rotate(out.period.rbegin(), out.period.rbegin() + 1, out.period.rend());
    }
    return out;
  }

  bool same_as(const up_sequence& other) const {
    return canonical() == other.canonical();
  }

  bool operator==(const up_sequence&) const = default;
};

/// Layout shared by a family of sequences: the longest prefix and the lcm of
/// the period lengths. Every sequence in the family is determined by its
/// values on `[0, prefix + period)`.
struct up_layout {
  std::size_t prefix = 0;
  std::size_t period = 1;

  std::size_t span() const { return prefix + period; }
};

template <class T>
up_layout common_layout(std::span<const up_sequence<T>> seqs) {
  up_layout l;
  for (const auto& s : seqs) {
    l.prefix = std::max(l.prefix, s.prefix.size());
    l.period = std::lcm(l.period, s.period.size());
  }
  return l;
}

/// Pointwise combination of sequences sharing a layout. `f(i)` yields the
/// combined value at index i.
template <class R, class F>
up_sequence<R> tabulate(up_layout l, F&& f) {
  std::vector<R> prefix, period;
  prefix.reserve(l.prefix);
  period.reserve(l.period);
  for (std::size_t i = 0; i < l.prefix; ++i) prefix.push_back(f(i));
  for (std::size_t i = 0; i < l.period; ++i) period.push_back(f(l.prefix + i));
  return up_sequence<R>(std::move(prefix), std::move(period));
}

} // namespace s1s

#endif
