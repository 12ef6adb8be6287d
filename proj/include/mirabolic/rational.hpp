#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "mirabolic/errors.hpp"

namespace mirabolic {

/// Exact rational scalar.  All arithmetic in the library is exact; nothing
/// is ever rounded.
using Rational = mpq_class;

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

/// Parses an unsigned decimal integer starting at `pos`, advancing it.
inline mpz_class parse_unsigned_integer(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == start) throw parse_error("expected a digit", start);
  return mpz_class(std::string(text.substr(start, pos - start)), 10);
}

/// Parses `['-'] int ['/' int]` starting at `pos`, advancing it.
inline Rational parse_rational_at(std::string_view text, std::size_t& pos) {
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  mpz_class num = parse_unsigned_integer(text, pos);
  mpz_class den = 1;
  if (pos < text.size() && text[pos] == '/') {
    const std::size_t slash = pos;
    ++pos;
    den = parse_unsigned_integer(text, pos);
    if (den == 0) throw parse_error("zero denominator", slash + 1);
  }
  Rational r(num, den);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

}  // namespace detail

/// Parses a whole string as a rational literal.
inline Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  Rational r = detail::parse_rational_at(text, pos);
  if (pos != text.size()) throw parse_error("trailing characters after rational", pos);
  return r;
}

}  // namespace mirabolic
