#ifndef S1S_RATIONAL_HPP
#define S1S_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace s1s {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline integer numerator_of(const rational& r) {
  return boost::multiprecision::numerator(r);
}
inline integer denominator_of(const rational& r) {
  return boost::multiprecision::denominator(r);
}

inline int sign_of(const rational& r) {
  return r.sign();
}

inline rational abs_of(const rational& r) {
  return r.sign() < 0 ? rational(-r) : r;
}

/// Height of p/q in lowest terms: max(|p|, q).
inline integer height_of(const rational& r) {
  integer p = abs(numerator_of(r));
  integer q = denominator_of(r);
  return p > q ? p : q;
}

/// M^n as an exact integer.
inline integer power_of(unsigned base, unsigned n) {
  integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= base;
  return r;
}

/// "p/q" or "p" with an optional sign. Returns nullopt on malformed text.
inline std::optional<rational> parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](integer& out) {
    std::size_t start = i;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out = out * 10 + (text[i] - '0');
      ++i;
    }
    return i > start;
  };
  integer num, den = 1;
  if (!digits(num)) return std::nullopt;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!digits(den) || den == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  rational r(num, den);
  return negative ? rational(-r) : r;
}

inline std::string to_string(const rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Decimal rendering rounded half-up to at most `digits` fractional digits,
/// trailing zeros trimmed.
inline std::string to_decimal(const rational& r, unsigned digits = 12) {
  integer num = numerator_of(r);
  integer den = denominator_of(r);
  bool negative = num < 0;
  if (negative) num = -num;
  integer scale = power_of(10, digits);
  integer scaled = (num * scale * 2 + den) / (den * 2);
  integer whole = scaled / scale;
  integer frac = scaled % scale;
  std::string out = whole.str();
  if (frac != 0) {
    std::string f = frac.str();
    f.insert(0, digits - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  if (negative && scaled != 0) out.insert(0, "-");
  return out;
}

} // namespace s1s

#endif
