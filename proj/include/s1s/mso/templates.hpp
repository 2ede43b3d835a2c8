#ifndef S1S_MSO_TEMPLATES_HPP
#define S1S_MSO_TEMPLATES_HPP

#include "s1s/mso/formula.hpp"

#include <string_view>

namespace s1s::mso {

/// Digit-sum formulas over set variables X1..Xn.
///   chi1(X̄, y)  the weighted digit sum at y is 0
///   chi2(X̄, y)  it is positive
///   phi(X̄, y)   it vanishes at every z < y, so the first nonzero is at ≥ y
///   psi(X̄, y)   the first nonzero digit sum sits exactly at y
///   theta(X̄)    it vanishes everywhere
///   omega(X̄)    some set D carries it, i.e. every digit sum is 0 or 1
enum class template_kind { chi1, chi2, phi, psi, theta, omega };

inline std::optional<template_kind> template_kind_of(std::string_view name) {
  for (auto [n, k] : {std::pair{"chi1", template_kind::chi1}, std::pair{"chi2", template_kind::chi2},
                      std::pair{"phi", template_kind::phi}, std::pair{"psi", template_kind::psi},
                      std::pair{"theta", template_kind::theta}, std::pair{"omega", template_kind::omega}})
    if (name == n) return k;
  return std::nullopt;
}

inline std::vector<std::string> template_sets(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("X" + std::to_string(i));
  return out;
}

namespace detail {

inline std::vector<set_term> set_vars(std::size_t n) {
  std::vector<set_term> out;
  for (const auto& name : template_sets(n)) out.push_back(set_var(name));
  return out;
}

inline formula_ptr digit_sum_at(const std::vector<rational>& q, const std::string& at, relation rel) {
  return dsum(q, set_vars(q.size()), pos_var(at), rel, 0);
}

} // namespace detail

inline formula_ptr make_template(template_kind k, const std::vector<rational>& q) {
  using detail::digit_sum_at;
  if (q.empty()) throw precondition_violation("template needs at least one coefficient");
  switch (k) {
    case template_kind::chi1: return digit_sum_at(q, "y", relation::eq);
    case template_kind::chi2: return digit_sum_at(q, "y", relation::gt);
    case template_kind::phi:
      return quantify(kind::all1, "z",
                      binary(kind::implication, pos_atom(kind::less, pos_var("z"), pos_var("y")),
                             digit_sum_at(q, "z", relation::eq)));
    case template_kind::psi:
      return binary(kind::conjunction, negate(digit_sum_at(q, "y", relation::eq)),
                    make_template(template_kind::phi, q));
    case template_kind::theta: return quantify(kind::all1, "y", digit_sum_at(q, "y", relation::eq));
    case template_kind::omega: {
      std::vector<rational> qd = q;
      qd.push_back(-1);
      auto sets = detail::set_vars(q.size());
      sets.push_back(set_var("D"));
      return quantify(kind::ex2, "D", quantify(kind::all1, "y", dsum(qd, sets, pos_var("y"), relation::eq, 0)));
    }
  }
  throw precondition_violation("unknown template");
}

/// Bind X1..Xn to constants.
inline formula_ptr apply_template(const formula_ptr& t, const std::vector<up_bits>& sets) {
  std::map<std::string, up_bits> sigma;
  auto names = template_sets(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) sigma[names[i]] = sets[i];
  return substitute(t, sigma);
}

} // namespace s1s::mso

#endif
