#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "sympdiag/error.hpp"

namespace sympdiag {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline bool is_integer(const Rational& q) { return den(q) == 1; }

namespace detail {
inline Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw Error(ErrorCode::RationalFormat, "bad rational '" + std::string(whole) + "'");
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error(ErrorCode::RationalFormat, "bad rational '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Integer(-v) : v;
}
}  // namespace detail

// Accepts "p", "-p", "p/q" with q > 0 after sign normalisation.
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(s, s));
  Integer p = detail::parse_integer(s.substr(0, slash), s);
  Integer q = detail::parse_integer(s.substr(slash + 1), s);
  if (q == 0) throw Error(ErrorCode::RationalFormat, "zero denominator in '" + std::string(s) + "'");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

}  // namespace sympdiag
