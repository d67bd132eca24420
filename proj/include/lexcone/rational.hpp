#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "lexcone/error.hpp"

namespace lexcone {

// Arbitrary-precision rationals. mpq_class keeps values canonical
// (reduced, positive denominator) as long as every constructed value is
// canonicalised, which parse_rational does.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

// Accepts "p", "+p", "-p" and "p/q" with decimal digits; q must be nonzero.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError("invalid rational '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  std::size_t slash = std::string_view::npos;
  std::size_t digits = 0;
  for (std::size_t k = i; k < text.size(); ++k) {
    char c = text[k];
    if (c == '/') {
      if (slash != std::string_view::npos || digits == 0) fail();
      slash = k;
      digits = 0;
    } else if (c >= '0' && c <= '9') {
      ++digits;
    } else {
      fail();
    }
  }
  if (digits == 0) fail();
  std::string s(text[0] == '+' ? text.substr(1) : text);
  if (slash != std::string_view::npos) {
    std::string den = s.substr(s.find('/') + 1);
    if (den.find_first_not_of('0') == std::string::npos)
      throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational abs_value(const Rational& q) { return sign(q) < 0 ? Rational(-q) : q; }

}  // namespace lexcone
