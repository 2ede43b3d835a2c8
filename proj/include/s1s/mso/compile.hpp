#ifndef S1S_MSO_COMPILE_HPP
#define S1S_MSO_COMPILE_HPP

#include "s1s/mso/formula.hpp"
#include "s1s/omega/complement.hpp"
#include "s1s/omega/emptiness.hpp"

#include <map>

namespace s1s::mso {

using omega::guard;
using omega::nba;
using omega::state_t;
using omega::track_alphabet;

/// Assignment read off an accepting lasso: sets as canonical ultimately
/// periodic bit sequences (index 0 is position 0), positions as integers.
struct witness_assignment {
  std::map<std::string, up_bits> sets;
  std::map<std::string, std::size_t> positions;

  bool operator==(const witness_assignment&) const = default;
};

struct compile_options {
  std::size_t max_states = omega::default_max_states;
};

namespace detail {

inline track_alphabet alphabet_of(const std::set<std::string>& names) {
  return track_alphabet(std::vector<std::string>(names.begin(), names.end()));
}

// Small automata over named tracks.
class atom_builder {
public:
  explicit atom_builder(std::set<std::string> names) : al_(alphabet_of(names)), a_(al_) {}

  guard lit(const std::string& name, bool v) const { return guard::literal(*al_.index_of(name), v); }
  guard zero(std::initializer_list<std::string> names) const {
    guard g = guard::top();
    for (const auto& n : names) g = g & lit(n, false);
    return g;
  }
  state_t state(bool acc = false) { return a_.add_state(acc); }
  void edge(state_t s, const guard& g, state_t t) { a_.add_transition(s, g, t); }
  nba done(state_t init) {
    a_.add_initial(init);
    return std::move(a_);
  }
  const track_alphabet& alphabet() const { return al_; }

private:
  track_alphabet al_;
  nba a_;
};

// Exactly one position carries a 1 on each of the given tracks.
inline nba singletons(const track_alphabet& al, const std::vector<std::string>& fo) {
  nba r = omega::universal_nba(al);
  for (const auto& x : fo) {
    nba s(al);
    auto wait = s.add_state(false), seen = s.add_state(true);
    unsigned i = *al.index_of(x);
    s.add_transition(wait, guard::literal(i, false), wait);
    s.add_transition(wait, guard::literal(i, true), seen);
    s.add_transition(seen, guard::literal(i, false), seen);
    s.add_initial(wait);
    r = omega::nba_trim(omega::nba_product(r, s));
  }
  return r;
}

inline std::vector<std::string> first_order_of(const track_alphabet& al) {
  std::vector<std::string> out;
  for (const auto& t : al.tracks())
    if (is_first_order(t)) out.push_back(t);
  return out;
}

inline nba primitive(const formula& f) {
  std::set<std::string> names;
  if (!f.p.var.empty()) names.insert(f.p.var);
  if (!f.q.var.empty()) names.insert(f.q.var);
  for (const auto& s : f.sets) names.insert(s.var);
  atom_builder b(names);
  switch (f.op) {
    case kind::pos_eq: {
      const auto &x = f.p.var, &y = f.q.var;
      auto s0 = b.state(), s1 = b.state(true);
      b.edge(s0, b.zero({x, y}), s0);
      b.edge(s0, b.lit(x, true) & b.lit(y, true), s1);
      b.edge(s1, b.zero({x, y}), s1);
      return b.done(s0);
    }
    case kind::less: {
      const auto &x = f.p.var, &y = f.q.var;
      auto s0 = b.state(), s1 = b.state(), s2 = b.state(true);
      b.edge(s0, b.zero({x, y}), s0);
      b.edge(s0, b.lit(x, true) & b.lit(y, false), s1);
      b.edge(s1, b.zero({x, y}), s1);
      b.edge(s1, b.lit(x, false) & b.lit(y, true), s2);
      b.edge(s2, b.zero({x, y}), s2);
      return b.done(s0);
    }
    case kind::succ_eq: {
      const auto &x = f.p.var, &y = f.q.var;
      auto s0 = b.state(), s1 = b.state(), s2 = b.state(true);
      b.edge(s0, b.zero({x, y}), s0);
      b.edge(s0, b.lit(x, true) & b.lit(y, false), s1);
      b.edge(s1, b.lit(x, false) & b.lit(y, true), s2);
      b.edge(s2, b.zero({x, y}), s2);
      return b.done(s0);
    }
    case kind::member: {
      const auto &x = f.p.var, &X = f.sets[0].var;
      auto s0 = b.state(), s1 = b.state(true);
      b.edge(s0, b.lit(x, false), s0);
      b.edge(s0, b.lit(x, true) & b.lit(X, true), s1);
      b.edge(s1, b.lit(x, false), s1);
      return b.done(s0);
    }
    case kind::subset: {
      const auto &X = f.sets[0].var, &Y = f.sets[1].var;
      auto s = b.state(true);
      b.edge(s, b.lit(X, false) | b.lit(Y, true), s);
      return b.done(s);
    }
    case kind::set_eq: {
      const auto &X = f.sets[0].var, &Y = f.sets[1].var;
      auto s = b.state(true);
      b.edge(s, (b.lit(X, false) & b.lit(Y, false)) | (b.lit(X, true) & b.lit(Y, true)), s);
      return b.done(s);
    }
    case kind::first: {
      const auto& x = f.p.var;
      auto s0 = b.state(), s1 = b.state(true);
      b.edge(s0, b.lit(x, true), s1);
      b.edge(s1, b.lit(x, false), s1);
      return b.done(s0);
    }
    case kind::first_in: {
      auto s0 = b.state(), s1 = b.state(true);
      b.edge(s0, b.lit(f.sets[0].var, true), s1);
      b.edge(s1, guard::top(), s1);
      return b.done(s0);
    }
    case kind::dsum: {
      // Letter predicate: the weighted digit sum over the set tracks,
      // read at the single position marked on the position track.
      std::vector<std::string> distinct;
      for (const auto& s : f.sets)
        if (std::find(distinct.begin(), distinct.end(), s.var) == distinct.end()) distinct.push_back(s.var);
      if (distinct.size() > omega::max_explicit_width)
        throw capacity_exceeded("dsum over more than 16 distinct sets");
      std::vector<omega::cube> cubes;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << distinct.size()); ++bits) {
        rational sum = 0;
        for (std::size_t i = 0; i < f.sets.size(); ++i) {
          auto at = std::find(distinct.begin(), distinct.end(), f.sets[i].var) - distinct.begin();
          if (bits >> at & 1) sum += f.coeffs[i];
        }
        bool holds = f.rel == relation::eq ? sum == f.bound : f.rel == relation::lt ? sum < f.bound : sum > f.bound;
        if (!holds) continue;
        guard g = guard::top();
        for (std::size_t k = 0; k < distinct.size(); ++k) g = g & b.lit(distinct[k], bits >> k & 1);
        cubes.insert(cubes.end(), g.cubes().begin(), g.cubes().end());
      }
      guard pred(std::move(cubes));
      const auto& t = f.p.var;
      auto s0 = b.state(), s1 = b.state(true);
      b.edge(s0, b.lit(t, false), s0);
      b.edge(s0, b.lit(t, true) & pred, s1);
      b.edge(s1, b.lit(t, false), s1);
      return b.done(s0);
    }
    default:
      throw precondition_violation("not an atom");
  }
}

class compiler {
public:
  explicit compiler(compile_options opt) : opt_(opt) {}

  nba run(const formula& f) {
    switch (f.op) {
      case kind::truth: return omega::universal_nba(track_alphabet());
      case kind::falsity: return omega::empty_nba(track_alphabet());
      case kind::negation: {
        const formula& g = *f.kids[0];
        if (g.op == kind::negation) return run(*g.kids[0]);
        return complement(run(g));
      }
      case kind::conjunction: {
        nba a = run(*f.kids[0]), b = run(*f.kids[1]);
        auto al = joint(a, b);
        return omega::nba_trim(omega::nba_product(widen(a, al), widen(b, al)));
      }
      case kind::disjunction: {
        nba a = run(*f.kids[0]), b = run(*f.kids[1]);
        auto al = joint(a, b);
        return omega::nba_trim(omega::nba_union(widen(a, al), widen(b, al)));
      }
      case kind::implication:
        return run(*binary(kind::disjunction, negate(f.kids[0]), f.kids[1]));
      case kind::equivalence: {
        nba a = run(*f.kids[0]), b = run(*f.kids[1]);
        auto al = joint(a, b);
        nba na = complement(a), nb = complement(b);
        nba both = omega::nba_product(widen(a, al), widen(b, al));
        nba neither = omega::nba_product(widen(na, al), widen(nb, al));
        return omega::nba_trim(omega::nba_union(both, neither));
      }
      case kind::ex1:
      case kind::ex2:
        return exists(f.var, run(*f.kids[0]));
      case kind::all1:
      case kind::all2: {
        nba body = run(*f.kids[0]);
        if (!body.alphabet().index_of(f.var)) return body;
        return complement(exists(f.var, complement(body)));
      }
      default:
        return atom(f);
    }
  }

private:
  nba complement(const nba& a) {
    nba c = omega::nba_complement(a, omega::complement_method::via_determinization, opt_.max_states);
    auto fo = first_order_of(a.alphabet());
    if (fo.empty()) return c;
    return omega::nba_trim(omega::nba_product(c, singletons(a.alphabet(), fo)));
  }

  nba exists(const std::string& v, const nba& a) {
    if (!a.alphabet().index_of(v)) return a;
    return omega::nba_trim(omega::nba_project(a, v));
  }

  static track_alphabet joint(const nba& a, const nba& b) {
    std::set<std::string> names(a.alphabet().tracks().begin(), a.alphabet().tracks().end());
    names.insert(b.alphabet().tracks().begin(), b.alphabet().tracks().end());
    return alphabet_of(names);
  }

  // Cylindrify, constraining first-order tracks the automaton did not have.
  static nba widen(const nba& a, const track_alphabet& al) {
    if (a.alphabet() == al) return a;
    nba w = omega::nba_cylindrify(a, al);
    std::vector<std::string> added;
    for (const auto& t : al.tracks())
      if (is_first_order(t) && !a.alphabet().index_of(t)) added.push_back(t);
    if (added.empty()) return w;
    return omega::nba_trim(omega::nba_product(w, singletons(al, added)));
  }

  std::string fresh() { return "#" + std::to_string(counter_++); }

  // Atoms with successor terms or set constants are rewritten over fresh
  // tracks; those tracks are constrained and projected away again.
  nba atom(const formula& f) {
    formula g = f;
    std::vector<std::pair<std::string, nba>> extras;
    auto flatten = [&](pos_term& t) {
      if (t.var.empty()) return;
      std::string cur = t.var;
      for (unsigned i = 0; i < t.depth; ++i) {
        std::string next = fresh();
        extras.emplace_back(next, primitive(*pos_atom(kind::succ_eq, pos_var(cur), pos_var(next))));
        cur = next;
      }
      t = pos_var(cur);
    };
    flatten(g.p);
    flatten(g.q);
    for (auto& s : g.sets) {
      if (!s.is_constant()) continue;
      std::string name = fresh();
      track_alphabet one({name});
      const up_bits& c = *s.constant;
      omega::up_word w(std::vector<omega::letter_t>(c.prefix.begin(), c.prefix.end()),
                       std::vector<omega::letter_t>(c.period.begin(), c.period.end()));
      extras.emplace_back(name, omega::word_nba(one, w));
      s = set_var(name);
    }
    nba base = primitive(g);
    if (extras.empty()) return base;
    std::set<std::string> names(base.alphabet().tracks().begin(), base.alphabet().tracks().end());
    for (const auto& e : extras) names.insert(e.second.alphabet().tracks().begin(), e.second.alphabet().tracks().end());
    auto al = alphabet_of(names);
    nba r = omega::nba_cylindrify(base, al);
    for (const auto& e : extras) r = omega::nba_trim(omega::nba_product(r, omega::nba_cylindrify(e.second, al)));
    for (auto it = extras.rbegin(); it != extras.rend(); ++it)
      if (r.alphabet().index_of(it->first)) r = omega::nba_trim(omega::nba_project(r, it->first));
    return r;
  }

  compile_options opt_;
  unsigned counter_ = 0;
};

} // namespace detail

/// Automaton over the tracks `env` (in that order) accepting exactly the
/// encodings of satisfying assignments; first-order tracks are singletons.
inline nba compile(const formula& f, const std::vector<std::string>& env, compile_options opt = {}) {
  for (const auto& v : free_variables(f))
    if (std::find(env.begin(), env.end(), v) == env.end())
      throw precondition_violation("free variable '" + v + "' has no track");
  nba a = detail::compiler(opt).run(f);
  track_alphabet al(env);
  if (a.alphabet() == al) return a;
  nba w = omega::nba_cylindrify(a, al);
  std::vector<std::string> added;
  for (const auto& t : env)
    if (is_first_order(t) && !a.alphabet().index_of(t)) added.push_back(t);
  if (!added.empty()) w = omega::nba_trim(omega::nba_product(w, detail::singletons(al, added)));
  return w;
}

/// Compile over the free variables in sorted order.
inline nba compile(const formula& f, compile_options opt = {}) {
  auto fv = free_variables(f);
  return compile(f, std::vector<std::string>(fv.begin(), fv.end()), opt);
}

inline bool decide(const formula& sentence, compile_options opt = {}) {
  if (!free_variables(sentence).empty())
    throw precondition_violation("decide expects a sentence; free variables: " +
                                 *free_variables(sentence).begin());
  return !omega::nba_is_empty(compile(sentence, opt));
}

/// Decode an ultimately periodic word over `al` into an assignment.
inline witness_assignment decode(const track_alphabet& al, const omega::up_word& w) {
  witness_assignment out;
  for (unsigned i = 0; i < al.width(); ++i) {
    std::vector<bool> pre, per;
    for (auto l : w.prefix) pre.push_back(l >> i & 1);
    for (auto l : w.period) per.push_back(l >> i & 1);
    up_bits bits = up_bits(pre, per).canonical();
    const std::string& name = al.name(i);
    if (is_first_order(name)) {
      std::size_t at = 0;
      while (at < bits.prefix.size() && !bits.prefix[at]) ++at;
      out.positions[name] = at;
    } else {
      out.sets[name] = bits;
    }
  }
  return out;
}

/// Encode an assignment as a word over `al`.
inline omega::up_word encode(const track_alphabet& al, const witness_assignment& s) {
  std::vector<up_bits> rows;
  for (const auto& name : al.tracks()) {
    if (is_first_order(name)) {
      std::vector<bool> pre(s.positions.at(name) + 1, false);
      pre.back() = true;
      rows.emplace_back(pre, std::vector<bool>{false});
    } else {
      rows.push_back(s.sets.at(name));
    }
  }
  auto layout = common_layout(std::span<const up_bits>(rows));
  return tabulate<omega::letter_t>(layout, [&](std::size_t i) {
    omega::letter_t l = 0;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (rows[k].at(i)) l |= omega::letter_t{1} << k;
    return l;
  });
}

/// Satisfying assignment from the canonical lasso of the compiled automaton.
inline std::optional<witness_assignment> witness(const formula& f, compile_options opt = {}) {
  auto fv = free_variables(f);
  std::vector<std::string> env(fv.begin(), fv.end());
  nba a = compile(f, env, opt);
  auto l = omega::nba_emptiness(a);
  if (!l) return std::nullopt;
  return decode(a.alphabet(), l->word());
}

/// The sentence asserting f under the assignment: set variables become
/// constants and positions are pinned through singleton constants.
inline formula_ptr instantiate(const formula_ptr& f, const witness_assignment& s) {
  formula_ptr g = substitute(f, s.sets);
  for (const auto& [x, at] : s.positions) {
    std::vector<bool> pre(at + 1, false);
    pre.back() = true;
    g = quantify(kind::ex1, x, binary(kind::conjunction, member(pos_var(x), set_const(up_bits(pre, {false}))), g));
  }
  return g;
}

} // namespace s1s::mso

#endif
