#ifndef S1S_MSO_PARSER_HPP
#define S1S_MSO_PARSER_HPP

#include "s1s/error.hpp"
#include "s1s/mso/formula.hpp"

#include <cctype>
#include <string_view>

namespace s1s::mso {

namespace detail {

class formula_parser {
public:
  explicit formula_parser(std::string_view text) : text_(text) {}

  formula_ptr parse() {
    formula_ptr f = iff();
    token t = next();
    if (t.kind != tok::end) fail("unexpected '" + t.text + "'", t);
    return f;
  }

private:
  enum class tok { ident, number, lparen, rparen, semi, comma, dot, eq, lt, gt, minus, arrow, iff, end };
  struct token {
    tok kind;
    std::string text;
    std::size_t pos;
  };

  [[noreturn]] void fail(const std::string& what, const token& at) const {
    auto [line, col] = where(at.pos);
    throw parse_error(what, line, col);
  }

  std::pair<std::size_t, std::size_t> where(std::size_t pos) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void sort_fail(std::size_t from, const std::string& why) const {
    std::string atom(text_.substr(from, pos_ - from));
    while (!atom.empty() && std::isspace(static_cast<unsigned char>(atom.back()))) atom.pop_back();
    throw sort_error("ill-sorted atom '" + atom + "': " + why);
  }

  token lex() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    token t{tok::end, "", pos_};
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    auto take = [&](tok k, std::size_t n) {
      t.kind = k;
      t.text = std::string(text_.substr(pos_, n));
      pos_ += n;
      return t;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 0;
      while (pos_ + n < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_ + n])) || text_[pos_ + n] == '_'))
        ++n;
      return take(tok::ident, n);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 0;
      while (pos_ + n < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + n]))) ++n;
      if (pos_ + n < text_.size() && text_[pos_ + n] == '/') {
        ++n;
        while (pos_ + n < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + n]))) ++n;
      }
      return take(tok::number, n);
    }
    switch (c) {
      case '(': return take(tok::lparen, 1);
      case ')': return take(tok::rparen, 1);
      case ';': return take(tok::semi, 1);
      case ',': return take(tok::comma, 1);
      case '.': return take(tok::dot, 1);
      case '=': return take(tok::eq, 1);
      case '>': return take(tok::gt, 1);
      case '-':
        if (text_.substr(pos_, 2) == "->") return take(tok::arrow, 2);
        return take(tok::minus, 1);
      case '<':
        if (text_.substr(pos_, 3) == "<->") return take(tok::iff, 3);
        return take(tok::lt, 1);
      default: break;
    }
    t.text = std::string(1, c);
    fail("unexpected character '" + t.text + "'", t);
  }

  token next() {
    if (ahead_) {
      token t = *ahead_;
      ahead_.reset();
      return t;
    }
    return lex();
  }
  const token& peek() {
    if (!ahead_) ahead_ = lex();
    return *ahead_;
  }
  bool peek_word(const char* w) { return peek().kind == tok::ident && peek().text == w; }
  token expect(tok k, const char* what) {
    token t = next();
    if (t.kind != k) fail(std::string("expected ") + what + (t.kind == tok::end ? " at end of input" : " before '" + t.text + "'"), t);
    return t;
  }
  void expect_word(const char* w) {
    token t = next();
    if (t.kind != tok::ident || t.text != w) fail(std::string("expected '") + w + "'", t);
  }
  std::size_t start_of_next() {
    return peek().pos;
  }

  formula_ptr iff() {
    formula_ptr f = imp();
    while (peek().kind == tok::iff) {
      next();
      f = binary(kind::equivalence, f, imp());
    }
    return f;
  }
  formula_ptr imp() {
    formula_ptr f = disj();
    if (peek().kind == tok::arrow) {
      next();
      return binary(kind::implication, f, imp());
    }
    return f;
  }
  formula_ptr disj() {
    formula_ptr f = conj();
    while (peek_word("or")) {
      next();
      f = binary(kind::disjunction, f, conj());
    }
    return f;
  }
  formula_ptr conj() {
    formula_ptr f = unary_formula();
    while (peek_word("and")) {
      next();
      f = binary(kind::conjunction, f, unary_formula());
    }
    return f;
  }

  formula_ptr unary_formula() {
    if (peek_word("not")) {
      next();
      return negate(unary_formula());
    }
    for (auto [word, k] : {std::pair{"ex1", kind::ex1}, std::pair{"all1", kind::all1},
                           std::pair{"ex2", kind::ex2}, std::pair{"all2", kind::all2}}) {
      if (!peek_word(word)) continue;
      std::size_t from = start_of_next();
      next();
      token v = expect(tok::ident, "a variable name");
      bool first_order = k == kind::ex1 || k == kind::all1;
      if (first_order != is_first_order(v.text)) {
        pos_ = v.pos + v.text.size();
        sort_fail(from, first_order ? "first-order quantifier over an uppercase (set) variable"
                                    : "second-order quantifier over a lowercase (position) variable");
      }
      expect(tok::dot, "'.'");
      return quantify(k, v.text, iff());
    }
    if (peek().kind == tok::lparen) {
      next();
      formula_ptr f = iff();
      expect(tok::rparen, "')'");
      return f;
    }
    return atom();
  }

  // A bit string, possibly empty, inside up(...).
  std::vector<bool> bits() {
    std::vector<bool> out;
    if (peek().kind != tok::number) return out;
    token t = next();
    for (char c : t.text) {
      if (c != '0' && c != '1') fail("set constant bits must be 0 or 1", t);
      out.push_back(c == '1');
    }
    return out;
  }

  up_bits constant_body() {
    expect(tok::lparen, "'('");
    auto prefix = bits();
    expect(tok::semi, "';'");
    token at = peek();
    auto period = bits();
    if (period.empty()) fail("set constant needs a nonempty period", at);
    expect(tok::rparen, "')'");
    return up_bits(std::move(prefix), std::move(period));
  }

  struct any_term {
    bool is_set = false;
    pos_term pos;
    set_term set;
  };

  any_term term() {
    token t = next();
    if (t.kind != tok::ident) fail("expected a term", t);
    if (t.text == "s" && peek().kind == tok::lparen) {
      std::size_t from = t.pos;
      next();
      any_term inner = term();
      expect(tok::rparen, "')'");
      if (inner.is_set) sort_fail(from, "successor applied to a set");
      ++inner.pos.depth;
      return inner;
    }
    if (t.text == "up" && peek().kind == tok::lparen) {
      any_term r;
      r.is_set = true;
      r.set = set_const(constant_body());
      return r;
    }
    any_term r;
    if (is_first_order(t.text)) {
      r.pos = pos_var(t.text);
    } else {
      r.is_set = true;
      r.set = set_var(t.text);
    }
    return r;
  }

  pos_term position(std::size_t from) {
    any_term t = term();
    if (t.is_set) sort_fail(from, "'" + to_string(t.set) + "' is a set, a position is required");
    return t.pos;
  }
  set_term set_of(std::size_t from) {
    any_term t = term();
    if (!t.is_set) sort_fail(from, "'" + to_string(t.pos) + "' is a position, a set is required");
    return t.set;
  }

  rational number() {
    bool negative = false;
    if (peek().kind == tok::minus) {
      next();
      negative = true;
    }
    token t = expect(tok::number, "a rational");
    auto r = parse_rational(t.text);
    if (!r) fail("malformed rational '" + t.text + "'", t);
    return negative ? rational(-*r) : *r;
  }

  formula_ptr atom() {
    std::size_t from = start_of_next();
    const token& head = peek();
    if (head.kind == tok::ident) {
      std::string w = head.text;
      if (w == "true") return next(), truth();
      if (w == "false") return next(), falsity();
      if (w == "first" || w == "first_in" || w == "s_in" || w == "dsum") {
        next();
        if (peek().kind != tok::lparen) fail("expected '(' after " + w, peek());
        next();
        if (w == "first") {
          pos_term t = position(from);
          expect(tok::rparen, "')'");
          return pos_atom(kind::first, t);
        }
        if (w == "first_in") {
          set_term s = set_of(from);
          expect(tok::rparen, "')'");
          return set_atom(kind::first_in, {s});
        }
        if (w == "s_in") {
          set_term s = set_of(from);
          expect_word("at");
          pos_term t = position(from);
          expect(tok::rparen, "')'");
          return member(t, s);
        }
        std::vector<rational> q{number()};
        while (peek().kind == tok::comma) next(), q.push_back(number());
        expect(tok::semi, "';'");
        std::vector<set_term> sets{set_of(from)};
        while (peek().kind == tok::comma) next(), sets.push_back(set_of(from));
        expect_word("at");
        pos_term t = position(from);
        expect(tok::rparen, "')'");
        if (q.size() != sets.size()) {
          token here{tok::end, "", from};
          fail("dsum has " + std::to_string(q.size()) + " coefficients but " +
                   std::to_string(sets.size()) + " sets", here);
        }
        token r = next();
        relation rel = relation::eq;
        if (r.kind == tok::lt) rel = relation::lt;
        else if (r.kind == tok::gt) rel = relation::gt;
        else if (r.kind != tok::eq) fail("expected '=', '<' or '>' after dsum(...)", r);
        return dsum(std::move(q), std::move(sets), std::move(t), rel, number());
      }
    }
    any_term lhs = term();
    token op = next();
    if (op.kind == tok::ident && op.text == "in") {
      set_term s = set_of(from);
      if (lhs.is_set) sort_fail(from, "'" + to_string(lhs.set) + "' is a set, a position is required");
      return member(lhs.pos, s);
    }
    if (op.kind == tok::ident && op.text == "sub") {
      set_term s = set_of(from);
      if (!lhs.is_set) sort_fail(from, "'" + to_string(lhs.pos) + "' is a position, a set is required");
      return set_atom(kind::subset, {lhs.set, s});
    }
    if (op.kind == tok::lt) {
      pos_term rhs = position(from);
      if (lhs.is_set) sort_fail(from, "'<' compares positions");
      return pos_atom(kind::less, lhs.pos, rhs);
    }
    if (op.kind == tok::eq) {
      any_term rhs = term();
      if (lhs.is_set != rhs.is_set) sort_fail(from, "'=' between a position and a set");
      if (lhs.is_set) return set_atom(kind::set_eq, {lhs.set, rhs.set});
      if (lhs.pos.depth > 0) {
        --lhs.pos.depth;
        return pos_atom(kind::succ_eq, lhs.pos, rhs.pos);
      }
      return pos_atom(kind::pos_eq, lhs.pos, rhs.pos);
    }
    fail(op.kind == tok::end ? "unexpected end of input" : "unexpected '" + op.text + "'", op);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<token> ahead_;
};

} // namespace detail

/// Parse a formula. Lowercase identifiers are positions, uppercase ones are
/// sets. Precedence, tightest first: not, and, or, ->, <->; `->` groups to
/// the right and quantifier bodies extend as far right as possible.
inline formula_ptr parse_formula(std::string_view text) {
  return detail::formula_parser(text).parse();
}

} // namespace s1s::mso

#endif
