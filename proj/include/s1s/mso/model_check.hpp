#ifndef S1S_MSO_MODEL_CHECK_HPP
#define S1S_MSO_MODEL_CHECK_HPP

#include "s1s/mso/compile.hpp"

namespace s1s::mso {

namespace detail {

class qf_evaluator {
public:
  explicit qf_evaluator(const witness_assignment& s) : s_(s) {}

  bool eval(const formula& f) const {
    switch (f.op) {
      case kind::truth: return true;
      case kind::falsity: return false;
      case kind::pos_eq: return pos(f.p) == pos(f.q);
      case kind::less: return pos(f.p) < pos(f.q);
      case kind::succ_eq: return pos(f.p) + 1 == pos(f.q);
      case kind::member: return set(f.sets[0]).at(pos(f.p));
      case kind::first: return pos(f.p) == 0;
      case kind::first_in: return set(f.sets[0]).at(0);
      case kind::subset:
      case kind::set_eq: {
        const up_bits &x = set(f.sets[0]), &y = set(f.sets[1]);
        std::vector<up_bits> both{x, y};
        auto layout = common_layout(std::span<const up_bits>(both));
        for (std::size_t i = 0; i < layout.span(); ++i) {
          if (x.at(i) && !y.at(i)) return false;
          if (f.op == kind::set_eq && y.at(i) && !x.at(i)) return false;
        }
        return true;
      }
      case kind::dsum: {
        std::size_t at = pos(f.p);
        rational sum = 0;
        for (std::size_t i = 0; i < f.sets.size(); ++i)
          if (set(f.sets[i]).at(at)) sum += f.coeffs[i];
        if (f.rel == relation::eq) return sum == f.bound;
        return f.rel == relation::lt ? sum < f.bound : sum > f.bound;
      }
      case kind::negation: return !eval(*f.kids[0]);
      case kind::conjunction: return eval(*f.kids[0]) && eval(*f.kids[1]);
      case kind::disjunction: return eval(*f.kids[0]) || eval(*f.kids[1]);
      case kind::implication: return !eval(*f.kids[0]) || eval(*f.kids[1]);
      case kind::equivalence: return eval(*f.kids[0]) == eval(*f.kids[1]);
      default: throw precondition_violation("model_check_qf on a quantified formula");
    }
  }

private:
  std::size_t pos(const pos_term& t) const {
    auto it = s_.positions.find(t.var);
    if (it == s_.positions.end()) throw precondition_violation("no value for position '" + t.var + "'");
    return it->second + t.depth;
  }
  const up_bits& set(const set_term& t) const {
    if (t.is_constant()) return *t.constant;
    auto it = s_.sets.find(t.var);
    if (it == s_.sets.end()) throw precondition_violation("no value for set '" + t.var + "'");
    return it->second;
  }

  const witness_assignment& s_;
};

} // namespace detail

/// Direct evaluation of a quantifier-free formula. Set comparisons scan the
/// longest prefix plus one common period of the sets involved.
inline bool model_check_qf(const formula& f, const witness_assignment& sigma) {
  if (!is_quantifier_free(f)) throw precondition_violation("model_check_qf needs a quantifier-free formula");
  return detail::qf_evaluator(sigma).eval(f);
}

/// Truth of f under the assignment along the automaton route: membership of
/// the encoded word in the compiled automaton.
inline bool holds_by_automaton(const formula& f, const witness_assignment& sigma, compile_options opt = {}) {
  auto fv = free_variables(f);
  std::vector<std::string> env(fv.begin(), fv.end());
  nba a = compile(f, env, opt);
  return omega::nba_member_up(a, encode(a.alphabet(), sigma));
}

/// Verifies a witness independently of the lasso it came from: quantifier-
/// free formulas by direct evaluation, others by deciding the instantiated
/// sentence.
inline bool verify_witness(const formula_ptr& f, const witness_assignment& sigma, compile_options opt = {}) {
  if (is_quantifier_free(*f)) return model_check_qf(*f, sigma);
  return decide(*instantiate(f, sigma), opt);
}

} // namespace s1s::mso

#endif
