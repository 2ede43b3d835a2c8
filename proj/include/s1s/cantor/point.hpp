#ifndef S1S_CANTOR_POINT_HPP
#define S1S_CANTOR_POINT_HPP

#include "s1s/error.hpp"
#include "s1s/rational.hpp"
#include "s1s/up_sequence.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace s1s::cantor {

/// Ultimately periodic subset of the positive integers: bit i says whether
/// position i + 1 is a member. Position 0 is never a member.
using up_set = up_sequence<bool>;

inline up_set up_canonicalize(const up_set& s) { return s.canonical(); }

/// Governs the underlying sequence q_k. `formal` compares combinations by
/// the first nonzero digit sum; `geometric` fixes q_k = M^k with M ≥ 4.
struct profile {
  enum class kind { formal, geometric };
  kind k = kind::formal;
  unsigned modulus = 0;
  std::size_t max_depth = 16;

  static profile formal(std::size_t max_depth = 16) { return {kind::formal, 0, max_depth}; }
  static profile geometric(unsigned m, std::size_t max_depth = 16) {
    if (m < 4) throw precondition_violation("geometric profile needs M >= 4, got " + std::to_string(m));
    return {kind::geometric, m, max_depth};
  }

  bool is_geometric() const { return k == kind::geometric; }

  void require_geometric() const {
    if (!is_geometric()) throw precondition_violation("operation needs a geometric profile");
  }
  void require_depth(std::size_t n) const {
    if (n > max_depth)
      throw depth_exceeded("depth " + std::to_string(n) + " exceeds the limit " + std::to_string(max_depth));
  }

  integer q(std::size_t n) const {
    require_geometric();
    return power_of(modulus, static_cast<unsigned>(n));
  }
  rational inv(std::size_t n) const { return rational(integer(1), q(n)); }

  std::string name() const {
    return is_geometric() ? "geometric:" + std::to_string(modulus) : "formal";
  }
};

/// Point of the Cantor set given by its characteristic set; always stored
/// in canonical form.
class point {
public:
  point() : set_({}, {false}) {}
  explicit point(const up_set& s) : set_(s.canonical()) {}

  const up_set& charset() const { return set_; }

  /// Membership of position a (position 0 is never a member).
  bool contains(std::size_t a) const { return a > 0 && set_.at(a - 1); }

  bool is_finite_set() const { return set_.period.size() == 1 && !set_.period[0]; }

  friend bool operator<(const point& x, const point& y) {
    return std::tie(x.set_.prefix, x.set_.period) < std::tie(y.set_.prefix, y.set_.period);
  }
  friend bool operator==(const point& x, const point& y) { return x.set_ == y.set_; }

private:
  up_set set_;
};

/// Point with the given finite member list.
inline point finite_point(const std::vector<std::size_t>& members) {
  std::vector<bool> bits;
  for (std::size_t m : members) {
    if (m == 0) throw precondition_violation("position 0 cannot be a member");
    if (bits.size() < m) bits.resize(m, false);
    bits[m - 1] = true;
  }
  return point(up_set(bits, {false}));
}

/// The point whose set is {m : m > n}; its value is q_n^{-1}.
inline point inv_point(std::size_t n) {
  return point(up_set(std::vector<bool>(n, false), {true}));
}

inline point zero_point() { return point(); }
inline point one_point() { return inv_point(0); }

/// e(a, c): members of S(c) up to a.
inline point e_trunc(std::size_t a, const point& c) {
  std::vector<bool> bits;
  for (std::size_t i = 1; i <= a; ++i) bits.push_back(c.contains(i));
  return point(up_set(bits, {false}));
}

inline int delta(std::size_t a, const point& c) { return c.contains(a) ? 1 : 0; }

/// Index n with S(c) = {m > n}, if c has that shape.
inline std::optional<std::size_t> as_inv(const point& c) {
  const auto& s = c.charset();
  if (s.period.size() != 1 || !s.period[0]) return std::nullopt;
  for (bool b : s.prefix)
    if (b) return std::nullopt;
  return s.prefix.size();
}

/// Exact value h(S) = Σ_{n∈S} (M-1)/M^n under a geometric profile.
inline rational value(const point& c, const profile& pr) {
  pr.require_geometric();
  const auto& s = c.charset();
  const integer m = pr.modulus;
  rational sum = 0;
  for (std::size_t i = 0; i < s.prefix.size(); ++i)
    if (s.prefix[i]) sum += rational(m - 1, pr.q(i + 1));
  const std::size_t p = s.prefix.size(), l = s.period.size();
  rational block = 0;
  for (std::size_t j = 0; j < l; ++j)
    if (s.period[j]) block += rational(m - 1, pr.q(p + 1 + j));
  if (block != 0) {
    integer ml = pr.q(l);
    sum += block * rational(ml, ml - 1);
  }
  return sum;
}

} // namespace s1s::cantor

#endif
