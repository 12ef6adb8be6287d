#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mirabolic/errors.hpp"
#include "mirabolic/rational.hpp"

namespace mirabolic {

/// Element of Q(i): an exact complex number with rational real and
/// imaginary parts.  This is the scalar field used for character
/// parameters, matrix entries and functional values.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(int value) : re(value), im(0) {}
  GaussianRational(const Rational& real) : re(real), im(0) {}
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return GaussianRational(re, Rational(-im)); }

  /// re^2 + im^2, the multiplicative norm.
  Rational norm() const {
    Rational n = re * re + im * im;
    return n;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(Rational(a.re + b.re), Rational(a.im + b.im));
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(Rational(a.re - b.re), Rational(a.im - b.im));
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return GaussianRational(Rational(-a.re), Rational(-a.im));
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(Rational(a.re * b.re - a.im * b.im),
                            Rational(a.re * b.im + a.im * b.re));
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    Rational n = b.norm();
    GaussianRational numer = a * b.conj();
    return GaussianRational(Rational(numer.re / n), Rational(numer.im / n));
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
};

/// Total order on Q(i), lexicographic in (re, im).  Used to canonicalize
/// multisets; it has no analytic meaning.
inline int gaussian_cmp(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c;
  return cmp(a.im, b.im);
}

inline bool gaussian_less(const GaussianRational& a, const GaussianRational& b) {
  return gaussian_cmp(a, b) < 0;
}

/// Canonical literal: "a", "b*i" or "a+b*i" / "a-b*i", with rationals in
/// lowest terms.  Zero prints as "0".
inline std::string gaussian_to_string(const GaussianRational& g) {
  if (g.im == 0) return rational_to_string(g.re);
  std::string imag = rational_to_string(abs(g.im)) + "*i";
  if (g.re == 0) return (g.im < 0 ? "-" : "") + imag;
  return rational_to_string(g.re) + (g.im < 0 ? "-" : "+") + imag;
}

namespace detail {

inline bool starts_literal_char(char c) { return is_digit(c) || c == '-' || c == '+' || c == 'i'; }

/// Parses a complex literal greedily starting at `pos`, advancing it.
/// Accepted forms: `a`, `b*i`, `a+b*i`, `a-b*i`, and `i` with an optional
/// sign in place of a coefficient.  No whitespace inside a literal.
inline GaussianRational parse_gaussian_at(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || !starts_literal_char(text[pos]))
    throw parse_error("expected a number", pos);

  auto bare_i = [&](Rational sign) -> GaussianRational {
    ++pos;  // consume 'i'
    return GaussianRational(Rational(0), sign);
  };

  if (text[pos] == 'i') return bare_i(Rational(1));
  if ((text[pos] == '-' || text[pos] == '+') && pos + 1 < text.size() && text[pos + 1] == 'i') {
    Rational sign(text[pos] == '-' ? -1 : 1);
    ++pos;
    return bare_i(sign);
  }

  Rational first = parse_rational_at(text, pos);

  // `b*i` with no real part.
  if (pos + 1 < text.size() && text[pos] == '*' && text[pos + 1] == 'i') {
    pos += 2;
    return GaussianRational(Rational(0), first);
  }

  // `a+b*i` / `a-b*i` / `a+i` / `a-i`.
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    Rational sign(text[pos] == '-' ? -1 : 1);
    const std::size_t mark = pos;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      return GaussianRational(first, sign);
    }
    if (pos < text.size() && is_digit(text[pos])) {
      Rational coeff = parse_rational_at(text, pos);
      if (pos + 1 < text.size() && text[pos] == '*' && text[pos + 1] == 'i') {
        pos += 2;
        Rational imag = sign * coeff;
        return GaussianRational(first, imag);
      }
      throw parse_error("expected '*i' after imaginary coefficient", pos);
    }
    // A trailing sign that is not part of this literal: back off.
    pos = mark;
    return GaussianRational(first);
  }

  return GaussianRational(first);
}

}  // namespace detail

/// Parses a whole string as a complex literal.
inline GaussianRational parse_gaussian(std::string_view text) {
  std::size_t pos = 0;
  GaussianRational g = detail::parse_gaussian_at(text, pos);
  if (pos != text.size()) throw parse_error("trailing characters after number", pos);
  return g;
}

}  // namespace mirabolic
