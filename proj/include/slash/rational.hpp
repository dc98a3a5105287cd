#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "slash/error.hpp"

namespace slash {

// Always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long p, long q = 1) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rational_str(const Rational& x) { return x.str(); }

inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  std::size_t slash_pos = s.find('/');
  auto check_int = [&](const std::string& t) {
    if (t.empty()) throw parse_error("bad rational literal '" + s + "'");
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) throw parse_error("bad rational literal '" + s + "'");
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw parse_error("bad rational literal '" + s + "'");
  };
  if (slash_pos == std::string::npos) {
    check_int(s);
    return Rational(BigInt(s));
  }
  std::string num = s.substr(0, slash_pos), den = s.substr(slash_pos + 1);
  check_int(num);
  check_int(den);
  BigInt d(den);
  if (d == 0) throw parse_error("zero denominator in '" + s + "'");
  BigInt p(num);
  if (d < 0) {
    p = -p;
    d = -d;
  }
  return Rational(p, d);
}

inline int sgn(const Rational& x) { return x.sign(); }

}  // namespace slash
