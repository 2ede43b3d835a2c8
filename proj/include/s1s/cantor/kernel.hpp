#ifndef S1S_CANTOR_KERNEL_HPP
#define S1S_CANTOR_KERNEL_HPP

#include "s1s/cantor/point.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace s1s::cantor {

/// Finite rational combination of points, normalized: points merged, zero
/// coefficients dropped, terms ordered by point.
class combo {
public:
  combo() = default;
  combo(const point& p, rational c = 1) {  // NOLINT: a point is a combo
    if (c != 0) terms_.emplace_back(p, std::move(c));
  }
  /// r as a combination: r times the point whose set is all positions.
  static combo constant(const rational& r) { return combo(one_point(), r); }

  const std::vector<std::pair<point, rational>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend combo operator+(const combo& x, const combo& y) {
    std::map<point, rational> acc;
    for (const auto& [p, c] : x.terms_) acc[p] += c;
    for (const auto& [p, c] : y.terms_) acc[p] += c;
    combo r;
    for (auto& [p, c] : acc)
      if (c != 0) r.terms_.emplace_back(p, c);
    return r;
  }
  friend combo operator*(const rational& k, const combo& x) {
    combo r;
    if (k == 0) return r;
    for (const auto& [p, c] : x.terms_) r.terms_.emplace_back(p, k * c);
    return r;
  }
  friend combo operator-(const combo& x) { return rational(-1) * x; }
  friend combo operator-(const combo& x, const combo& y) { return x + (-y); }
  friend bool operator==(const combo& x, const combo& y) { return x.terms_ == y.terms_; }

private:
  std::vector<std::pair<point, rational>> terms_;
};

/// q · c for a coefficient tuple and a point tuple.
inline combo linear(const std::vector<rational>& q, const std::vector<point>& cs) {
  if (q.size() != cs.size()) throw precondition_violation("coefficient and point tuples differ in length");
  combo r;
  for (std::size_t i = 0; i < q.size(); ++i) r = r + combo(cs[i], q[i]);
  return r;
}

/// Digit sums Σ q_i δ(a, c_i); index i holds position i + 1.
inline up_sequence<rational> digit_stream(const combo& x) {
  std::vector<up_set> sets;
  for (const auto& t : x.terms()) sets.push_back(t.first.charset());
  auto layout = common_layout(std::span<const up_set>(sets));
  auto s = tabulate<rational>(layout, [&](std::size_t i) {
    rational sum = 0;
    for (const auto& [p, c] : x.terms())
      if (p.charset().at(i)) sum += c;
    return sum;
  });
  return s.canonical();
}

inline rational digit(const combo& x, std::size_t a) {
  if (a == 0) return 0;
  rational sum = 0;
  for (const auto& [p, c] : x.terms())
    if (p.contains(a)) sum += c;
  return sum;
}

/// Least position with a nonzero digit sum; none iff the stream vanishes.
inline std::optional<std::size_t> mu(const combo& x) {
  auto s = digit_stream(x);
  for (std::size_t i = 0; i < s.prefix.size() + s.period.size(); ++i)
    if (s.at(i) != 0) return i + 1;
  return std::nullopt;
}

inline std::optional<std::size_t> mu(const std::vector<rational>& q, const std::vector<point>& cs) {
  return mu(linear(q, cs));
}

/// Exact value under a geometric profile.
inline rational value(const combo& x, const profile& pr) {
  rational sum = 0;
  for (const auto& [p, c] : x.terms()) sum += c * value(p, pr);
  return sum;
}

/// Sign of a combination. Formal: the sign of the first nonzero digit sum.
/// Geometric(M): the same, provided the leading digit dominates its tail,
/// |ds(m)|·(M-1) > sup_{b>m} |ds(b)|, since the tail contributes at most
/// sup·M^{-m} against a leading term of |ds(m)|·(M-1)·M^{-m}.
inline int sign(const combo& x, const profile& pr) {
  auto s = digit_stream(x);
  std::optional<std::size_t> m;
  for (std::size_t i = 0; i < s.prefix.size() + s.period.size() && !m; ++i)
    if (s.at(i) != 0) m = i;
  if (!m) return 0;
  const rational& lead = s.at(*m);
  if (!pr.is_geometric()) return sign_of(lead);
  rational tail = 0;
  for (std::size_t i = *m + 1; i < s.prefix.size(); ++i) tail = std::max(tail, abs_of(s.prefix[i]));
  for (const auto& v : s.period) tail = std::max(tail, abs_of(v));
  if (!(abs_of(lead) * (pr.modulus - 1) > tail))
    throw growth_insufficient("leading digit sum " + to_string(lead) + " at position " + std::to_string(*m + 1) +
                              " does not dominate its tail under " + pr.name());
  int exact = sign_of(value(x, pr));
  if (exact != sign_of(lead)) throw std::logic_error("sign certificate disagrees with exact value");
  return exact;
}

/// The point with the same digits, when every digit sum is 0 or 1.
inline std::optional<point> as_point(const combo& x) {
  auto s = digit_stream(x);
  auto bit = [](const rational& r, bool& ok) {
    if (r != 0 && r != 1) ok = false;
    return r == 1;
  };
  bool ok = true;
  std::vector<bool> pre, per;
  for (const auto& r : s.prefix) pre.push_back(bit(r, ok));
  for (const auto& r : s.period) per.push_back(bit(r, ok));
  if (!ok) return std::nullopt;
  return point(up_set(pre, per));
}

struct interval {
  rational lo, hi;
  rational width() const { return hi - lo; }
  bool contains(const rational& v) const { return lo <= v && v <= hi; }
};

/// Exact value of the depth-n truncation plus a bound on the tails: a tail
/// S(c)_{>n} is 0 when empty, exactly q_n^{-1} when it is every position
/// beyond n, and lies in [0, q_n^{-1}] otherwise.
inline interval value_approx(const combo& x, const profile& pr, std::size_t n) {
  pr.require_geometric();
  pr.require_depth(n);
  interval r{0, 0};
  const rational w = pr.inv(n);
  for (const auto& [p, c] : x.terms()) {
    rational base = c * value(e_trunc(n, p), pr);
    rational lo = 0, hi = 0;
    bool any = false, all = true;
    // Beyond n the membership pattern is periodic after the prefix.
    const auto& s = p.charset();
    std::size_t span = std::max(s.prefix.size(), n) + s.period.size();
    for (std::size_t i = n; i < span; ++i) {
      bool b = s.at(i);
      any = any || b;
      all = all && b;
    }
    if (all) lo = hi = w;
    else if (any) hi = w;
    if (c < 0) std::swap(lo, hi);
    r.lo += base + c * lo;
    r.hi += base + c * hi;
  }
  return r;
}

namespace detail {

inline bool in_unit_interval(const combo& x, const profile& pr) {
  if (pr.is_geometric()) {
    rational v = value(x, pr);
    return v > 0 && v < 1;
  }
  return sign(x, pr) == 1 && sign(x - combo::constant(1), pr) == -1;
}

inline point from_bits(const std::vector<bool>& bits, bool tail) {
  return point(up_set(bits, {tail}));
}

} // namespace detail

/// Largest point of the Cantor set not above x, for x in (0, 1).
///
/// Let a be least with u = ds(a+1) outside {0, 1} and d the point of the
/// digits up to a. Then ν(x) is d + q_{a+1}^{-1} when 0 < u < 1, d + q_a^{-1}
/// when u > 1, and q_b^{-1} + e(b-1, d) when u < 0, where b ≤ a is the last
/// position of d. Each candidate is the left end of a complementary interval;
/// under a geometric profile x must fall in [candidate, right end), checked
/// exactly, or GrowthInsufficient is raised.
inline point nu(const combo& x, const profile& pr) {
  if (auto p = as_point(x)) return *p;
  if (!detail::in_unit_interval(x, pr)) throw precondition_violation("nu needs a value strictly between 0 and 1");
  auto s = digit_stream(x);
  std::size_t a = 0;
  while (s.at(a) == 0 || s.at(a) == 1) ++a;  // index a holds position a + 1
  const rational u = s.at(a);
  std::vector<bool> d;
  for (std::size_t i = 0; i < a; ++i) d.push_back(s.at(i) == 1);

  point cand, gap_end;
  auto last = [&](bool member) -> std::optional<std::size_t> {
    for (std::size_t b = a; b >= 1; --b)
      if (d[b - 1] == member) return b;
    return std::nullopt;
  };
  auto prefix_with = [&](std::size_t b, std::optional<bool> at_b) {
    std::vector<bool> bits(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(b - 1));
    if (at_b) bits.push_back(*at_b);
    return bits;
  };
  if (u > 0 && u < 1) {
    std::vector<bool> bits = d;
    bits.push_back(false);
    cand = detail::from_bits(bits, true);
    bits.back() = true;
    gap_end = detail::from_bits(bits, false);
  } else {
    std::optional<std::size_t> b = last(u < 0);
    if (!b) {
      if (pr.is_geometric()) throw growth_insufficient("digit pattern has no admissible nu candidate");
      throw precondition_violation("nu needs a value strictly between 0 and 1");
    }
    // Both shapes reduce to the left end e(b-1) + q_b^{-1} of the gap
    // opened at stage b, whose right end is e(b-1) + {b}.
    cand = detail::from_bits(prefix_with(*b, false), true);
    gap_end = detail::from_bits(prefix_with(*b, true), false);
  }
  if (pr.is_geometric()) {
    rational v = value(x, pr);
    if (!(value(cand, pr) <= v && v < value(gap_end, pr)))
      throw growth_insufficient("nu candidate is not certified under " + pr.name());
  }
  return cand;
}

/// Position a with q_{a+1}^{-1} < x ≤ q_a^{-1}. Geometric profiles compare
/// exact values; the formal profile compares by sign.
inline std::size_t lambda_inv(const combo& x, const profile& pr) {
  if (pr.is_geometric()) {
    rational v = value(x, pr);
    if (!(v > 0 && v <= 1)) throw precondition_violation("lambda_inv needs a value in (0, 1]");
    std::size_t a = 0;
    while (!(pr.inv(a + 1) < v)) ++a;
    return a;
  }
  if (sign(x, pr) != 1 || sign(x - combo::constant(1), pr) > 0)
    throw precondition_violation("lambda_inv needs a value in (0, 1]");
  for (std::size_t a = 0;; ++a)
    if (sign(x - combo(inv_point(a + 1)), pr) > 0 && sign(x - combo(inv_point(a)), pr) <= 0) return a;
}

enum class interval_kind { inner, right, left };

/// Endpoints of a complementary interval attached to c at level a, built
/// from their defining formulas and reduced to points.
///   inner  (e(a-1,c) + q_a^{-1}, e(a-1,c) + q_{a-1}^{-1} - q_a^{-1})
///   right  (e(a,c) + q_a^{-1}, e(a,c) + q_a^{-1} + q_{b-1}^{-1} - 2q_b^{-1}), b ≤ a last non-member
///   left   (e(a,c) - q_{b-1}^{-1} + 2q_b^{-1}, e(a,c)), b ≤ a last member
inline std::pair<combo, combo> comp_interval(const point& c, std::size_t a, interval_kind k) {
  if (a < 1) throw precondition_violation("comp_interval needs a >= 1");
  auto inv = [](std::size_t n) { return combo(inv_point(n)); };
  combo lo, hi;
  if (k == interval_kind::inner) {
    combo base(e_trunc(a - 1, c));
    lo = base + inv(a);
    hi = base + inv(a - 1) - inv(a);
  } else {
    bool member = k == interval_kind::left;
    std::optional<std::size_t> b;
    for (std::size_t i = a; i >= 1 && !b; --i)
      if (c.contains(i) == member) b = i;
    if (!b)
      throw precondition_violation(member ? "left interval needs a member at or below a"
                                          : "right interval needs a non-member at or below a");
    combo base(e_trunc(a, c));
    if (k == interval_kind::right) {
      lo = base + inv(a);
      hi = lo + inv(*b - 1) - rational(2) * inv(*b);
    } else {
      hi = base;
      lo = base - inv(*b - 1) + rational(2) * inv(*b);
    }
  }
  auto pl = as_point(lo), ph = as_point(hi);
  if (!pl || !ph) throw std::logic_error("complementary interval endpoint is not a point");
  return {combo(*pl), combo(*ph)};
}

} // namespace s1s::cantor

#endif
