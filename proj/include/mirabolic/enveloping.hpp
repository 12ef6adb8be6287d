#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mirabolic/errors.hpp"
#include "mirabolic/rational.hpp"

namespace mirabolic {

/// Element of the enveloping algebra of the two-dimensional Lie algebra
/// spanned by I and X with [I, X] = X, kept in normal-ordered form
///
///     sum of c_{a,b} I^a X^b.
///
/// Multiplication rewrites X^b I into (I - b) X^b, which is forced by the
/// bracket; everything else is bilinear bookkeeping.
class IXElement {
 public:
  IXElement() = default;

  static IXElement one() { return monomial(0, 0, Rational(1)); }
  static IXElement gen_i() { return monomial(1, 0, Rational(1)); }
  static IXElement gen_x() { return monomial(0, 1, Rational(1)); }

  static IXElement monomial(int i_power, int x_power, Rational coeff = Rational(1)) {
    if (i_power < 0 || x_power < 0) throw domain_error("negative exponent");
    IXElement e;
    if (coeff != 0) e.coeffs_[{i_power, x_power}] = std::move(coeff);
    return e;
  }

  bool is_zero() const { return coeffs_.empty(); }

  const std::map<std::pair<int, int>, Rational>& terms() const { return coeffs_; }

  friend bool operator==(const IXElement& a, const IXElement& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend IXElement operator+(const IXElement& a, const IXElement& b) {
    IXElement out = a;
    for (const auto& [key, coeff] : b.coeffs_) out.add_term(key.first, key.second, coeff);
    return out;
  }

  friend IXElement operator-(const IXElement& a, const IXElement& b) {
    IXElement out = a;
    for (const auto& [key, coeff] : b.coeffs_)
      out.add_term(key.first, key.second, Rational(-coeff));
    return out;
  }

  friend IXElement operator*(const Rational& scalar, const IXElement& e) {
    IXElement out;
    if (scalar == 0) return out;
    for (const auto& [key, coeff] : e.coeffs_)
      out.coeffs_[key] = Rational(scalar * coeff);
    return out;
  }

  friend IXElement operator*(const IXElement& a, const IXElement& b) {
    IXElement out;
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_) {
        // (I^p X^q)(I^r X^s) = I^p (X^q I^r) X^s with
        // X^q I^r = sum_j binom(r,j) (-q)^(r-j) I^j X^q.
        const int p = ka.first, q = ka.second, r = kb.first, s = kb.second;
        Rational base = ca * cb;
        Rational binom(1);
        Rational minus_q_power(1);
        // Walk j = r down to 0, maintaining binom(r, j) and (-q)^(r-j).
        for (int j = r; j >= 0; --j) {
          Rational term = base * binom * minus_q_power;
          out.add_term(p + j, q + s, term);
          binom *= j;
          binom /= r - j + 1;
          minus_q_power *= -q;
        }
      }
    return out;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [key, coeff] : coeffs_) {
      if (!out.empty()) out += " + ";
      out += rational_to_string(coeff);
      if (key.first) out += " I^" + std::to_string(key.first);
      if (key.second) out += " X^" + std::to_string(key.second);
    }
    return out;
  }

 private:
  void add_term(int i_power, int x_power, const Rational& coeff) {
    auto key = std::make_pair(i_power, x_power);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
      if (coeff != 0) coeffs_.emplace(key, coeff);
      return;
    }
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }

  std::map<std::pair<int, int>, Rational> coeffs_;
};

inline IXElement commutator(const IXElement& a, const IXElement& b) {
  return a * b - b * a;
}

/// ad(X)^k applied to I^m, computed by the normal-ordering engine.
inline IXElement ad_x_power(int k, int m) {
  if (k < 0 || m < 0) throw domain_error("negative exponent");
  IXElement x = IXElement::gen_x();
  IXElement current = IXElement::monomial(m, 0);
  for (int step = 0; step < k; ++step) current = commutator(x, current);
  return current;
}

struct AdPowerReport {
  int max_k;
  long checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Asserts the two derived consequences of [I, X] = X for all m <= k:
///
///   ad(X)^k (I^k) = k! (-1)^k X^k      and      ad(X)^k (I^m) = 0, m < k.
inline AdPowerReport ad_power_identity(int max_k) {
  AdPowerReport report{max_k};
  for (int k = 1; k <= max_k; ++k) {
    Rational factorial(1);
    for (int i = 2; i <= k; ++i) factorial *= i;
    const Rational sign(k % 2 == 0 ? 1 : -1);
    IXElement expected_k = IXElement::monomial(0, k, Rational(factorial * sign));
    for (int m = 1; m <= k; ++m) {
      ++report.checks;
      IXElement value = ad_x_power(k, m);
      if (m == k ? !(value == expected_k) : !value.is_zero())
        report.failures.push_back("ad(X)^" + std::to_string(k) + "(I^" + std::to_string(m) +
                                  ") = " + value.to_string());
    }
  }
  return report;
}

}  // namespace mirabolic
