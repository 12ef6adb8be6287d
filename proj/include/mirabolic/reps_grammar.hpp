#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mirabolic/errors.hpp"
#include "mirabolic/gaussian.hpp"
#include "mirabolic/reps.hpp"

namespace mirabolic {

// Expression grammar
//
//   expr    ::= 'triv' | '0' | factor (sep 'x' sep factor)*
//   factor  ::= 'chi' '(' arg ',' arg ',' arg ')'
//             | 'stein' '(' arg ',' arg [';' arg ',' arg] ')'
//             | 'speh' '(' arg ',' arg [';' arg] ')'
//             | 'spehcs' '(' arg ',' arg ',' arg [';' arg] ')'
//   arg     ::= [name '='] literal
//
// Literals are rational or complex ("1/2", "2*i", "1+1/3*i").  Whitespace
// is free between tokens but not inside a literal.  The optional `name=`
// prefix must match the parameter name at that position (chi: n, eps, z;
// stein: m, s, eps, t; speh: m, k, t; spehcs: m, k, s, t).  The part after
// ';' is the unitary twist and may be omitted when zero.

namespace detail {

class ExprCursor {
 public:
  explicit ExprCursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n'))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::size_t pos() const { return pos_; }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string read_word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
            (text_[pos_] >= 'A' && text_[pos_] <= 'Z')))
      ++pos_;
    if (pos_ == start) throw parse_error("expected a name", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  /// Reads one argument, honoring an optional `name=` prefix which must
  /// equal `expected_name`.
  GaussianRational read_arg(std::string_view expected_name) {
    skip_ws();
    // Lookahead for `name=`: letters followed by '='.  A bare 'i' literal
    // is letters too, so only treat it as a name when '=' follows.
    std::size_t probe = pos_;
    while (probe < text_.size() &&
           ((text_[probe] >= 'a' && text_[probe] <= 'z') ||
            (text_[probe] >= 'A' && text_[probe] <= 'Z')))
      ++probe;
    if (probe > pos_ && probe < text_.size() && text_[probe] == '=') {
      std::string name(text_.substr(pos_, probe - pos_));
      if (name != expected_name)
        throw parse_error("argument name '" + name + "' does not belong here (expected '" +
                              std::string(expected_name) + "')",
                          pos_);
      pos_ = probe + 1;
      skip_ws();
    }
    return parse_gaussian_at(text_, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline int require_int(const GaussianRational& v, std::string_view what, std::size_t pos) {
  if (v.im != 0 || v.re.get_den() != 1)
    throw parse_error(std::string(what) + " must be an integer", pos);
  if (!v.re.get_num().fits_sint_p())
    throw parse_error(std::string(what) + " is out of range", pos);
  return static_cast<int>(v.re.get_num().get_si());
}

inline Rational require_rational(const GaussianRational& v, std::string_view what,
                                 std::size_t pos) {
  if (v.im != 0) throw parse_error(std::string(what) + " must be real", pos);
  return v.re;
}

inline Factor parse_factor(ExprCursor& cursor) {
  const std::size_t word_pos = cursor.pos();
  std::string word = cursor.read_word();
  cursor.expect('(');
  if (word == "chi") {
    std::size_t p = cursor.pos();
    int n = require_int(cursor.read_arg("n"), "character size", p);
    cursor.expect(',');
    p = cursor.pos();
    int eps = require_int(cursor.read_arg("eps"), "character exponent", p);
    cursor.expect(',');
    GaussianRational z = cursor.read_arg("z");
    cursor.expect(')');
    return CharacterRep(n, eps, std::move(z));
  }
  if (word == "stein") {
    std::size_t p = cursor.pos();
    int m = require_int(cursor.read_arg("m"), "Stein size", p);
    cursor.expect(',');
    p = cursor.pos();
    Rational s = require_rational(cursor.read_arg("s"), "Stein parameter", p);
    int eps = 0;
    Rational t(0);
    if (cursor.consume(';')) {
      p = cursor.pos();
      eps = require_int(cursor.read_arg("eps"), "twist exponent", p);
      cursor.expect(',');
      p = cursor.pos();
      t = require_rational(cursor.read_arg("t"), "twist parameter", p);
    }
    cursor.expect(')');
    return SteinRep(m, std::move(s), eps, std::move(t));
  }
  if (word == "speh") {
    std::size_t p = cursor.pos();
    int m = require_int(cursor.read_arg("m"), "Speh size", p);
    cursor.expect(',');
    p = cursor.pos();
    int k = require_int(cursor.read_arg("k"), "Speh discrete parameter", p);
    Rational t(0);
    if (cursor.consume(';')) {
      p = cursor.pos();
      t = require_rational(cursor.read_arg("t"), "twist parameter", p);
    }
    cursor.expect(')');
    return SpehRep(m, k, std::move(t));
  }
  if (word == "spehcs") {
    std::size_t p = cursor.pos();
    int m = require_int(cursor.read_arg("m"), "size", p);
    cursor.expect(',');
    p = cursor.pos();
    int k = require_int(cursor.read_arg("k"), "discrete parameter", p);
    cursor.expect(',');
    p = cursor.pos();
    Rational s = require_rational(cursor.read_arg("s"), "complementary parameter", p);
    Rational t(0);
    if (cursor.consume(';')) {
      p = cursor.pos();
      t = require_rational(cursor.read_arg("t"), "twist parameter", p);
    }
    cursor.expect(')');
    return SpehCSRep(m, k, std::move(s), std::move(t));
  }
  throw parse_error("unknown factor type '" + word + "'", word_pos);
}

}  // namespace detail

/// Parses an expression over the given base field.
inline RepExpr parse_rep_expr(std::string_view text, Field field = Field::Real) {
  detail::ExprCursor cursor(text);
  if (cursor.at_end()) throw parse_error("empty expression", 0);

  // Literal forms for the two degenerate expressions.
  if (cursor.peek() == '0') {
    cursor.expect('0');
    if (!cursor.at_end()) throw parse_error("unexpected characters after '0'", cursor.pos());
    return RepExpr::zero(field);
  }
  if (cursor.peek() == 't') {
    std::string word = cursor.read_word();
    if (word != "triv") throw parse_error("unknown factor type '" + word + "'", 0);
    if (!cursor.at_end()) throw parse_error("unexpected characters after 'triv'", cursor.pos());
    return RepExpr::trivial(field);
  }

  std::vector<Factor> factors;
  factors.push_back(detail::parse_factor(cursor));
  while (!cursor.at_end()) {
    const std::size_t sep_pos = cursor.pos();
    std::string sep = cursor.read_word();
    if (sep != "x") throw parse_error("expected 'x' between factors", sep_pos);
    factors.push_back(detail::parse_factor(cursor));
  }
  return RepExpr::of(field, std::move(factors));
}

namespace detail {

inline std::string print_factor(const Factor& f) {
  if (const auto* c = std::get_if<CharacterRep>(&f)) {
    return "chi(" + std::to_string(c->n) + "," + std::to_string(c->eps) + "," +
           gaussian_to_string(c->z) + ")";
  }
  if (const auto* s = std::get_if<SteinRep>(&f)) {
    std::string out = "stein(" + std::to_string(s->m) + "," + rational_to_string(s->s);
    if (s->eps != 0 || s->t != 0)
      out += ";" + std::to_string(s->eps) + "," + rational_to_string(s->t);
    return out + ")";
  }
  if (const auto* d = std::get_if<SpehRep>(&f)) {
    std::string out = "speh(" + std::to_string(d->m) + "," + std::to_string(d->k);
    if (d->t != 0) out += ";" + rational_to_string(d->t);
    return out + ")";
  }
  const auto& x = std::get<SpehCSRep>(f);
  std::string out = "spehcs(" + std::to_string(x.m) + "," + std::to_string(x.k) + "," +
                    rational_to_string(x.s);
  if (x.t != 0) out += ";" + rational_to_string(x.t);
  return out + ")";
}

}  // namespace detail

/// Canonical form: factors joined by " x ", no argument names, twist tail
/// omitted when zero.  parse_rep_expr inverts this exactly.
inline std::string print_rep_expr(const RepExpr& e) {
  if (e.is_zero()) return "0";
  if (e.is_trivial()) return "triv";
  std::string out;
  for (std::size_t i = 0; i < e.factors().size(); ++i) {
    if (i) out += " x ";
    out += detail::print_factor(e.factors()[i]);
  }
  return out;
}

}  // namespace mirabolic
