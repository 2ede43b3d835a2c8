#ifndef S1S_MSO_FORMULA_HPP
#define S1S_MSO_FORMULA_HPP

#include "s1s/rational.hpp"
#include "s1s/up_sequence.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace s1s::mso {

/// Characteristic sequence of a set of positions; index 0 is position 0.
using up_bits = up_sequence<bool>;

enum class kind {
  truth, falsity,
  pos_eq, less, succ_eq, member, subset, set_eq, first, first_in, dsum,
  negation, conjunction, disjunction, implication, equivalence,
  ex1, all1, ex2, all2
};

enum class relation { eq, lt, gt };

/// `var` followed by `depth` applications of the successor.
struct pos_term {
  std::string var;
  unsigned depth = 0;

  bool operator==(const pos_term&) const = default;
};

/// A set variable or an ultimately periodic constant.
struct set_term {
  std::string var;
  std::optional<up_bits> constant;

  bool is_constant() const { return constant.has_value(); }
  bool operator==(const set_term&) const = default;
};

struct formula;
using formula_ptr = std::shared_ptr<const formula>;

struct formula {
  kind op = kind::truth;
  pos_term p, q;                  // position atoms; dsum uses p as its position
  std::vector<set_term> sets;     // member/subset/set_eq/first_in/dsum
  std::vector<rational> coeffs;   // dsum
  relation rel = relation::eq;    // dsum
  rational bound;                 // dsum
  std::string var;                // quantifiers
  std::vector<formula_ptr> kids;

  bool operator==(const formula& o) const {
    if (op != o.op || !(p == o.p) || !(q == o.q) || sets != o.sets || coeffs != o.coeffs ||
        rel != o.rel || bound != o.bound || var != o.var || kids.size() != o.kids.size())
      return false;
    for (std::size_t i = 0; i < kids.size(); ++i)
      if (!(*kids[i] == *o.kids[i])) return false;
    return true;
  }
};

inline bool is_first_order(const std::string& name) {
  return !name.empty() && name[0] >= 'a' && name[0] <= 'z';
}

inline bool is_quantifier(kind k) {
  return k == kind::ex1 || k == kind::all1 || k == kind::ex2 || k == kind::all2;
}

inline bool is_atom(kind k) {
  return !is_quantifier(k) && k != kind::negation && k != kind::conjunction &&
         k != kind::disjunction && k != kind::implication && k != kind::equivalence;
}

// Builders.

inline formula_ptr make(formula f) {
  return std::make_shared<const formula>(std::move(f));
}

inline formula_ptr truth() { return make({}); }
inline formula_ptr falsity() {
  formula f;
  f.op = kind::falsity;
  return make(std::move(f));
}

inline formula_ptr pos_atom(kind k, pos_term a, pos_term b = {}) {
  formula f;
  f.op = k;
  f.p = std::move(a);
  f.q = std::move(b);
  return make(std::move(f));
}

inline formula_ptr member(pos_term t, set_term s) {
  formula f;
  f.op = kind::member;
  f.p = std::move(t);
  f.sets = {std::move(s)};
  return make(std::move(f));
}

inline formula_ptr set_atom(kind k, std::vector<set_term> s) {
  formula f;
  f.op = k;
  f.sets = std::move(s);
  return make(std::move(f));
}

inline formula_ptr dsum(std::vector<rational> q, std::vector<set_term> s, pos_term at,
                        relation rel, rational r) {
  formula f;
  f.op = kind::dsum;
  f.coeffs = std::move(q);
  f.sets = std::move(s);
  f.p = std::move(at);
  f.rel = rel;
  f.bound = std::move(r);
  return make(std::move(f));
}

inline formula_ptr unary(kind k, formula_ptr a) {
  formula f;
  f.op = k;
  f.kids = {std::move(a)};
  return make(std::move(f));
}
inline formula_ptr negate(formula_ptr a) { return unary(kind::negation, std::move(a)); }

inline formula_ptr binary(kind k, formula_ptr a, formula_ptr b) {
  formula f;
  f.op = k;
  f.kids = {std::move(a), std::move(b)};
  return make(std::move(f));
}

inline formula_ptr quantify(kind k, std::string v, formula_ptr body) {
  formula f;
  f.op = k;
  f.var = std::move(v);
  f.kids = {std::move(body)};
  return make(std::move(f));
}

inline set_term set_var(std::string name) { return set_term{std::move(name), std::nullopt}; }
inline set_term set_const(up_bits bits) { return set_term{"", std::move(bits)}; }
inline pos_term pos_var(std::string name, unsigned depth = 0) { return pos_term{std::move(name), depth}; }

/// Free variables, first- and second-order together, in sorted order.
inline std::set<std::string> free_variables(const formula& f) {
  std::set<std::string> out;
  if (is_atom(f.op)) {
    if (!f.p.var.empty()) out.insert(f.p.var);
    if (!f.q.var.empty()) out.insert(f.q.var);
    for (const auto& s : f.sets)
      if (!s.is_constant()) out.insert(s.var);
    return out;
  }
  for (const auto& k : f.kids) {
    auto sub = free_variables(*k);
    out.insert(sub.begin(), sub.end());
  }
  if (is_quantifier(f.op)) out.erase(f.var);
  return out;
}

inline bool is_quantifier_free(const formula& f) {
  if (is_quantifier(f.op)) return false;
  for (const auto& k : f.kids)
    if (!is_quantifier_free(*k)) return false;
  return true;
}

/// Replace free set variables by constants.
inline formula_ptr substitute(const formula_ptr& f, const std::map<std::string, up_bits>& sigma) {
  if (is_atom(f->op)) {
    formula g = *f;
    bool changed = false;
    for (auto& s : g.sets)
      if (!s.is_constant()) {
        auto it = sigma.find(s.var);
        if (it != sigma.end()) {
          s = set_const(it->second);
          changed = true;
        }
      }
    return changed ? make(std::move(g)) : f;
  }
  formula g = *f;
  if (is_quantifier(f->op) && sigma.count(f->var)) {
    auto inner = sigma;
    inner.erase(f->var);
    g.kids[0] = substitute(f->kids[0], inner);
    return make(std::move(g));
  }
  for (auto& k : g.kids) k = substitute(k, sigma);
  return make(std::move(g));
}

// Printing. Compound operands are parenthesized so that the text parses
// back to the same tree.

inline std::string bits_text(const std::vector<bool>& b) {
  std::string s;
  for (bool x : b) s += x ? '1' : '0';
  return s;
}

inline std::string to_string(const up_bits& c) {
  return "up(" + bits_text(c.prefix) + ";" + bits_text(c.period) + ")";
}

inline std::string to_string(const pos_term& t) {
  std::string s = t.var;
  for (unsigned i = 0; i < t.depth; ++i) s = "s(" + s + ")";
  return s;
}

inline std::string to_string(const set_term& t) {
  return t.is_constant() ? to_string(*t.constant) : t.var;
}

inline std::string to_string(const formula& f);

namespace detail {

inline std::string operand(const formula& f) {
  if (is_atom(f.op) || f.op == kind::negation) return to_string(f);
  return "(" + to_string(f) + ")";
}

inline const char* keyword(kind k) {
  switch (k) {
    case kind::conjunction: return "and";
    case kind::disjunction: return "or";
    case kind::implication: return "->";
    case kind::equivalence: return "<->";
    case kind::ex1: return "ex1";
    case kind::all1: return "all1";
    case kind::ex2: return "ex2";
    case kind::all2: return "all2";
    default: return "?";
  }
}

} // namespace detail

inline std::string to_string(const formula& f) {
  switch (f.op) {
    case kind::truth: return "true";
    case kind::falsity: return "false";
    case kind::pos_eq: return to_string(f.p) + " = " + to_string(f.q);
    case kind::less: return to_string(f.p) + " < " + to_string(f.q);
    case kind::succ_eq: return "s(" + to_string(f.p) + ") = " + to_string(f.q);
    case kind::member: return to_string(f.p) + " in " + to_string(f.sets[0]);
    case kind::subset: return to_string(f.sets[0]) + " sub " + to_string(f.sets[1]);
    case kind::set_eq: return to_string(f.sets[0]) + " = " + to_string(f.sets[1]);
    case kind::first: return "first(" + to_string(f.p) + ")";
    case kind::first_in: return "first_in(" + to_string(f.sets[0]) + ")";
    case kind::dsum: {
      std::string s = "dsum(";
      for (std::size_t i = 0; i < f.coeffs.size(); ++i) s += (i ? "," : "") + s1s::to_string(f.coeffs[i]);
      s += ";";
      for (std::size_t i = 0; i < f.sets.size(); ++i) s += (i ? "," : "") + to_string(f.sets[i]);
      s += " at " + to_string(f.p) + ") ";
      s += f.rel == relation::eq ? "=" : f.rel == relation::lt ? "<" : ">";
      return s + " " + s1s::to_string(f.bound);
    }
    case kind::negation: return "not " + detail::operand(*f.kids[0]);
    case kind::conjunction:
    case kind::disjunction:
    case kind::implication:
    case kind::equivalence:
      return detail::operand(*f.kids[0]) + " " + detail::keyword(f.op) + " " + detail::operand(*f.kids[1]);
    default:
      return std::string(detail::keyword(f.op)) + " " + f.var + ". " + to_string(*f.kids[0]);
  }
}

} // namespace s1s::mso

#endif
