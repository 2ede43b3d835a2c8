#ifndef S1S_OMEGA_HOA_HPP
#define S1S_OMEGA_HOA_HPP

#include "s1s/omega/complement.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

namespace s1s::omega {

using automaton = std::variant<nba, dpa>;

namespace detail {

inline std::string guard_text(const guard& g, unsigned width) {
  if (g.is_true()) return "t";
  if (g.is_false()) return "f";
  std::string out;
  bool first_cube = true;
  for (const auto& c : g.cubes()) {
    if (!first_cube) out += " | ";
    first_cube = false;
    bool first_lit = true;
    for (unsigned t = 0; t < width; ++t) {
      letter_t bit = letter_t{1} << t;
      if (!(c.mask & bit)) continue;
      if (!first_lit) out += "&";
      first_lit = false;
      if (!(c.value & bit)) out += "!";
      out += std::to_string(t);
    }
  }
  return out;
}

inline std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

inline void emit_ap(std::ostream& os, const track_alphabet& al) {
  os << "AP: " << al.width();
  for (const auto& t : al.tracks()) os << " " << quoted(t);
  os << "\n";
}

// Acceptance formula of parity min even with k colours, in the usual
// shape Inf(0) | (Fin(1) & (Inf(2) | Fin(3))). With `wrap_last` the final
// atom is parenthesized too, which the reader also accepts.
inline std::string parity_formula(unsigned k, unsigned i = 0, bool wrap_last = false) {
  std::string atom = (i % 2 == 0 ? "Inf(" : "Fin(") + std::to_string(i) + ")";
  if (i + 1 >= k) return atom;
  std::string rest = parity_formula(k, i + 1, wrap_last);
  if (i + 2 < k || wrap_last) rest = "(" + rest + ")";
  return atom + (i % 2 == 0 ? " | " : " & ") + rest;
}

} // namespace detail

inline std::string hoa_emit(const nba& a) {
  std::ostringstream os;
  os << "HOA: v1\n";
  os << "States: " << a.size() << "\n";
  std::vector<state_t> init = a.initial();
  std::sort(init.begin(), init.end());
  for (state_t i : init) os << "Start: " << i << "\n";
  detail::emit_ap(os, a.alphabet());
  os << "acc-name: Buchi\n";
  os << "Acceptance: 1 Inf(0)\n";
  os << "properties: trans-labels explicit-labels state-acc\n";
  os << "--BODY--\n";
  for (state_t s = 0; s < a.size(); ++s) {
    os << "State: " << s << (a.accepting(s) ? " {0}" : "") << "\n";
    std::vector<transition> out = a.out(s);
    std::sort(out.begin(), out.end(), [](const transition& x, const transition& y) { return x.dst < y.dst; });
    for (const auto& t : out) os << "[" << detail::guard_text(t.label, a.width()) << "] " << t.dst << "\n";
  }
  os << "--END--\n";
  return os.str();
}

inline std::string hoa_emit(const dpa& d) {
  std::ostringstream os;
  unsigned k = d.max_priority() + 1;
  os << "HOA: v1\n";
  os << "States: " << d.size() << "\n";
  os << "Start: " << d.initial() << "\n";
  detail::emit_ap(os, d.alphabet());
  os << "acc-name: parity min even " << k << "\n";
  os << "Acceptance: " << k << " " << detail::parity_formula(k) << "\n";
  os << "properties: trans-labels explicit-labels state-acc deterministic complete\n";
  os << "--BODY--\n";
  for (state_t s = 0; s < d.size(); ++s) {
    os << "State: " << s << " {" << d.priority(s) << "}\n";
    std::map<state_t, std::vector<letter_t>> by_target;
    for (letter_t l = 0; l < d.letter_count(); ++l) by_target[d.succ(s, l)].push_back(l);
    for (const auto& [t, ls] : by_target)
      os << "[" << detail::guard_text(guard_of_letters(ls, d.width()), d.width()) << "] " << t << "\n";
  }
  os << "--END--\n";
  return os.str();
}

inline std::string hoa_emit(const automaton& x) {
  return std::visit([](const auto& v) { return hoa_emit(v); }, x);
}

namespace detail {

class hoa_reader {
public:
  explicit hoa_reader(std::string_view text) : text_(text) {}

  automaton read() {
    expect_header("HOA");
    auto version = next();
    if (version.kind != tok::ident || version.text != "v1") fail("expected version v1", version);

    std::optional<std::size_t> states;
    std::vector<state_t> start;
    std::vector<std::string> aps;
    bool have_ap = false;
    std::optional<token> acceptance_at;
    std::vector<token> acceptance;
    std::string acc_name;

    token t = next();
    while (t.kind == tok::header) {
      const std::string name = t.text;
      std::vector<token> values;
      t = next();
      while (t.kind != tok::header && t.kind != tok::body && t.kind != tok::end_of_input) {
        values.push_back(t);
        t = next();
      }
      if (name == "States") {
        states = int_value(values, 0, name);
      } else if (name == "Start") {
        for (const auto& v : values)
          if (v.kind == tok::amp) fail("alternating start states are not supported", v);
        start.push_back(static_cast<state_t>(int_value(values, 0, name)));
      } else if (name == "AP") {
        have_ap = true;
        std::size_t n = int_value(values, 0, name);
        if (values.size() != n + 1) fail("AP count does not match the listed names", values.front());
        for (std::size_t i = 1; i < values.size(); ++i) {
          if (values[i].kind != tok::string) fail("expected quoted proposition name", values[i]);
          aps.push_back(values[i].text);
        }
      } else if (name == "Acceptance") {
        if (values.empty()) fail("empty Acceptance header", t);
        acceptance_at = values.front();
        acceptance = values;
      } else if (name == "acc-name") {
        for (const auto& v : values) acc_name += (acc_name.empty() ? "" : " ") + v.text;
      } else if (name == "Alias") {
        fail("aliases are not supported", values.empty() ? t : values.front());
      }
      // Other headers (name, tool, properties, ...) carry no semantics here.
    }
    if (t.kind != tok::body) fail("expected --BODY--", t);
    if (!acceptance_at) fail("missing Acceptance header", t);
    if (!have_ap) aps.clear();

    enum class kind { buchi, all, none, parity } mode = kind::buchi;
    unsigned colours = 0;
    {
      std::string formula;
      for (std::size_t i = 1; i < acceptance.size(); ++i) formula += acceptance[i].text;
      std::size_t n = int_value(acceptance, 0, "Acceptance");
      auto squash = [](std::string s) {
        s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
        return s;
      };
      if (n == 1 && formula == "Inf(0)") {
        mode = kind::buchi;
      } else if (n == 0 && formula == "t") {
        mode = kind::all;
      } else if (n == 0 && formula == "f") {
        mode = kind::none;
      } else if (n >= 2 && (formula == squash(parity_formula(static_cast<unsigned>(n))) ||
                             formula == squash(parity_formula(static_cast<unsigned>(n), 0, true)))) {
        mode = kind::parity;
        colours = static_cast<unsigned>(n);
      } else {
        throw unsupported_acceptance("acceptance condition '" + std::to_string(n) + " " + formula +
                                         "' is neither Buchi nor parity min even",
                                     acceptance_at->line, acceptance_at->column);
      }
      if (mode == kind::buchi && acc_name.rfind("parity", 0) == 0) mode = kind::parity, colours = 1;
    }

    track_alphabet alphabet(aps);
    const unsigned width = alphabet.width();
    struct edge {
      state_t src;
      guard label;
      state_t dst;
      token at;
    };
    std::vector<edge> edges;
    std::map<state_t, std::optional<unsigned>> marks;
    std::optional<state_t> current;

    t = next();
    while (t.kind != tok::end && t.kind != tok::end_of_input) {
      if (t.kind == tok::header && t.text == "State") {
        token id = next();
        if (id.kind != tok::integer) fail("expected state number", id);
        current = static_cast<state_t>(std::stoul(id.text));
        if (marks.count(*current)) fail("state declared twice", id);
        marks[*current] = std::nullopt;
        t = next();
        if (t.kind == tok::string) t = next();
        if (t.kind == tok::lbrace) {
          auto set = acc_set();
          if (set.size() > 1) fail("a state may carry at most one acceptance mark", t);
          if (!set.empty()) marks[*current] = set.front();
          t = next();
        }
        continue;
      }
      if (t.kind == tok::lbracket) {
        if (!current) fail("edge outside of a state", t);
        token at = t;
        guard g = label_or(width);
        t = next();
        if (t.kind != tok::rbracket) fail("expected ']'", t);
        token dst = next();
        if (dst.kind != tok::integer) fail("expected destination state", dst);
        t = next();
        if (t.kind == tok::amp) fail("alternating edges are not supported", t);
        if (t.kind == tok::lbrace)
          throw unsupported_acceptance("transition-based acceptance marks are not supported", t.line, t.column);
        edges.push_back(edge{*current, g, static_cast<state_t>(std::stoul(dst.text)), at});
        continue;
      }
      if (t.kind == tok::integer) fail("edges without explicit labels are not supported", t);
      fail("unexpected token '" + t.text + "' in body", t);
    }
    if (t.kind != tok::end) fail("expected --END--", t);

    std::size_t n = states.value_or(0);
    for (const auto& [s, m] : marks) n = std::max<std::size_t>(n, s + 1);
    for (const auto& e : edges) n = std::max<std::size_t>(n, std::max(e.src, e.dst) + 1);
    for (state_t s : start) n = std::max<std::size_t>(n, s + 1);
    if (states && n > *states) fail("state number exceeds the States header", t);

    if (mode == kind::parity) {
      if (start.size() != 1) fail("parity automaton needs exactly one start state", t);
      dpa d(alphabet);
      for (std::size_t s = 0; s < n; ++s) {
        auto it = marks.find(static_cast<state_t>(s));
        if (it == marks.end() || !it->second) fail("parity state " + std::to_string(s) + " lacks a priority", t);
        if (*it->second >= colours) fail("priority outside the declared range", t);
        d.add_state(*it->second);
      }
      std::vector<std::vector<int>> seen(n, std::vector<int>(d.letter_count(), -1));
      for (const auto& e : edges)
        for (letter_t l = 0; l < d.letter_count(); ++l) {
          if (!e.label.matches(l)) continue;
          if (seen[e.src][l] >= 0) fail("parity automaton is not deterministic", e.at);
          seen[e.src][l] = static_cast<int>(e.dst);
          d.set_succ(e.src, l, e.dst);
        }
      for (std::size_t s = 0; s < n; ++s)
        for (letter_t l = 0; l < d.letter_count(); ++l)
          if (seen[s][l] < 0) fail("parity automaton is not complete", t);
      d.set_initial(start.front());
      return d;
    }

    nba a(alphabet);
    for (std::size_t s = 0; s < n; ++s) {
      auto it = marks.find(static_cast<state_t>(s));
      bool acc = mode == kind::all || (mode == kind::buchi && it != marks.end() && it->second == 0u);
      a.add_state(acc);
    }
    for (state_t s : start) a.add_initial(s);
    for (const auto& e : edges) a.add_transition(e.src, e.label, e.dst);
    return a;
  }

private:
  enum class tok {
    header, ident, integer, string, lbracket, rbracket, lbrace, rbrace, lparen, rparen,
    amp, bar, bang, body, end, end_of_input
  };
  struct token {
    tok kind;
    std::string text;
    std::size_t line, column;
  };

  [[noreturn]] void fail(const std::string& what, const token& at) const {
    throw parse_error(what, at.line, at.column);
  }

  std::size_t int_value(const std::vector<token>& v, std::size_t i, const std::string& header) const {
    if (i >= v.size() || v[i].kind != tok::integer) {
      token at = i < v.size() ? v[i] : token{tok::end_of_input, "", line_, col_};
      fail("expected integer in " + header + " header", at);
    }
    return std::stoul(v[i].text);
  }

  void expect_header(const std::string& name) {
    token t = next();
    if (t.kind != tok::header || t.text != name) fail("expected '" + name + ":'", t);
  }

  std::vector<unsigned> acc_set() {
    std::vector<unsigned> out;
    while (true) {
      token t = next();
      if (t.kind == tok::rbrace) return out;
      if (t.kind != tok::integer) fail("expected acceptance set number", t);
      out.push_back(static_cast<unsigned>(std::stoul(t.text)));
    }
  }

  guard label_or(unsigned width) {
    guard g = label_and(width);
    while (peek().kind == tok::bar) {
      next();
      g = g | label_and(width);
    }
    return g;
  }
  guard label_and(unsigned width) {
    guard g = label_not(width);
    while (peek().kind == tok::amp) {
      next();
      g = g & label_not(width);
    }
    return g;
  }
  guard label_not(unsigned width) {
    token t = next();
    if (t.kind == tok::bang) return label_not(width).negate(width);
    if (t.kind == tok::lparen) {
      guard g = label_or(width);
      token c = next();
      if (c.kind != tok::rparen) fail("expected ')'", c);
      return g;
    }
    if (t.kind == tok::ident && t.text == "t") return guard::top();
    if (t.kind == tok::ident && t.text == "f") return guard::bottom();
    if (t.kind == tok::integer) {
      unsigned i = static_cast<unsigned>(std::stoul(t.text));
      if (i >= width) fail("proposition index out of range", t);
      return guard::literal(i, true);
    }
    fail("malformed label", t);
  }

  token peek() {
    auto save = std::make_tuple(pos_, line_, col_);
    token t = next();
    std::tie(pos_, line_, col_) = save;
    return t;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  token next() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else if (text_.substr(pos_, 2) == "/*") {
        while (pos_ < text_.size() && text_.substr(pos_, 2) != "*/") advance();
        if (pos_ < text_.size()) advance(), advance();
      } else {
        break;
      }
    }
    token t{tok::end_of_input, "", line_, col_};
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    auto single = [&](tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance();
      return t;
    };
    switch (c) {
      case '[': return single(tok::lbracket);
      case ']': return single(tok::rbracket);
      case '{': return single(tok::lbrace);
      case '}': return single(tok::rbrace);
      case '(': return single(tok::lparen);
      case ')': return single(tok::rparen);
      case '&': return single(tok::amp);
      case '|': return single(tok::bar);
      case '!': return single(tok::bang);
      default: break;
    }
    if (text_.substr(pos_, 8) == "--BODY--") {
      for (int i = 0; i < 8; ++i) advance();
      t.kind = tok::body;
      t.text = "--BODY--";
      return t;
    }
    if (text_.substr(pos_, 7) == "--END--") {
      for (int i = 0; i < 7; ++i) advance();
      t.kind = tok::end;
      t.text = "--END--";
      return t;
    }
    if (c == '"') {
      advance();
      t.kind = tok::string;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
        t.text += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size()) fail("unterminated string", t);
      advance();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = tok::integer;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '-' || text_[pos_] == '@')) {
        t.text += text_[pos_];
        advance();
      }
      if (pos_ < text_.size() && text_[pos_] == ':') {
        advance();
        t.kind = tok::header;
      } else {
        t.kind = tok::ident;
      }
      return t;
    }
    t.text = std::string(1, c);
    fail(std::string("unexpected character '") + c + "'", t);
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

} // namespace detail

/// Parse the HOA v1 subset: state-based Büchi (or the trivial `t`/`f`
/// conditions) into an NBA, `parity min even` into a DPA, which must then
/// be deterministic and complete.
inline automaton hoa_parse(std::string_view text) {
  return detail::hoa_reader(text).read();
}

} // namespace s1s::omega

#endif
