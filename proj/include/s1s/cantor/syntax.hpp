#ifndef S1S_CANTOR_SYNTAX_HPP
#define S1S_CANTOR_SYNTAX_HPP

#include "s1s/cantor/kernel.hpp"

#include <cctype>
#include <string_view>

namespace s1s::cantor {

inline std::string to_string(const point& p) {
  if (auto n = as_inv(p)) return "inv(" + std::to_string(*n) + ")";
  std::string s = "pt(";
  for (bool b : p.charset().prefix) s += b ? '1' : '0';
  s += ";";
  for (bool b : p.charset().period) s += b ? '1' : '0';
  return s + ")";
}

/// "3/4*pt(1;0) - 1/2*pt(01;10) + inv(2)"; "0" for the empty combination.
inline std::string to_string(const combo& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : x.terms()) {
    rational mag = abs_of(c);
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) out += s1s::to_string(mag) + "*";
    out += to_string(p);
  }
  return out;
}

namespace detail {

class combo_parser {
public:
  explicit combo_parser(std::string_view t) : t_(t) {}

  combo parse() {
    skip();
    bool negative = false;
    if (peek() == '-') {
      ++i_;
      negative = true;
    }
    combo x = term();
    if (negative) x = -x;
    while (true) {
      skip();
      if (i_ >= t_.size()) return x;
      char op = t_[i_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++i_;
      combo y = term();
      x = op == '+' ? x + y : x - y;
    }
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, 1, i_ + 1); }

  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < t_.size() ? t_[i_] : '\0';
  }
  bool word(std::string_view w) {
    skip();
    if (t_.substr(i_, w.size()) != w) return false;
    i_ += w.size();
    return true;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::optional<rational> number() {
    skip();
    std::size_t start = i_;
    while (i_ < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[i_])) || t_[i_] == '/')) ++i_;
    if (start == i_) return std::nullopt;
    auto r = parse_rational(t_.substr(start, i_ - start));
    if (!r) {
      i_ = start;
      fail("malformed rational");
    }
    return r;
  }

  std::vector<bool> bits() {
    std::vector<bool> out;
    skip();
    while (i_ < t_.size() && (t_[i_] == '0' || t_[i_] == '1')) out.push_back(t_[i_++] == '1');
    return out;
  }

  point atom() {
    if (word("pt")) {
      expect('(');
      auto pre = bits();
      expect(';');
      auto per = bits();
      if (per.empty()) fail("point needs a nonempty period");
      expect(')');
      return point(up_set(pre, per));
    }
    if (word("inv")) {
      expect('(');
      auto n = number();
      if (!n || denominator_of(*n) != 1) fail("inv needs a nonnegative integer");
      expect(')');
      return inv_point(static_cast<std::size_t>(numerator_of(*n)));
    }
    fail("expected pt(...) or inv(...)");
  }

  combo term() {
    if (auto r = number()) {
      if (peek() != '*') return combo::constant(*r);
      ++i_;
      return *r * combo(atom());
    }
    return combo(atom());
  }

  std::string_view t_;
  std::size_t i_ = 0;
};

} // namespace detail

inline combo parse_combo(std::string_view text) { return detail::combo_parser(text).parse(); }

} // namespace s1s::cantor

#endif
