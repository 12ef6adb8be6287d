#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "mirabolic/errors.hpp"
#include "mirabolic/gaussian.hpp"
#include "mirabolic/partition.hpp"
#include "mirabolic/rational.hpp"

namespace mirabolic {

/// Base field of the general linear group the representations live on.
enum class Field { Real, Complex };

inline std::string field_to_string(Field f) { return f == Field::Real ? "R" : "C"; }

/// Unitary character of GL(n): sign (or circle) character exponent `eps`
/// and continuous parameter `z` twisting by |det|^z.
struct CharacterRep {
  int n;
  int eps;
  GaussianRational z;

  CharacterRep(int n_, int eps_, GaussianRational z_) : n(n_), eps(eps_), z(std::move(z_)) {
    if (n <= 0) throw domain_error("character size must be positive");
  }
};

/// Stein complementary series of GL(2m): irreducible induced from
/// |det|^s x |det|^-s on the (m, m) block Levi, 0 < s < 1/2, twisted by
/// the character with exponent `eps` and imaginary parameter `t`.
struct SteinRep {
  int m;
  Rational s;
  int eps;
  Rational t;

  SteinRep(int m_, Rational s_, int eps_ = 0, Rational t_ = Rational(0))
      : m(m_), s(std::move(s_)), eps(eps_), t(std::move(t_)) {
    if (m <= 0) throw domain_error("Stein size parameter must be positive");
  }
};

/// Speh representation of GL(2m) built from the discrete series parameter
/// k, twisted by the unramified unitary character with parameter `t`.
/// Real groups only.
struct SpehRep {
  int m;
  int k;
  Rational t;

  SpehRep(int m_, int k_, Rational t_ = Rational(0)) : m(m_), k(k_), t(std::move(t_)) {
    if (m <= 0) throw domain_error("Speh size parameter must be positive");
    if (k <= 0) throw domain_error("Speh discrete parameter must be positive");
  }
};

/// Speh complementary series of GL(4m): irreducible induced from a pair of
/// Speh representations pushed off the unitary axis by +s and -s,
/// 0 < s < 1/2, twisted as above.  Real groups only.
struct SpehCSRep {
  int m;
  int k;
  Rational s;
  Rational t;

  SpehCSRep(int m_, int k_, Rational s_, Rational t_ = Rational(0))
      : m(m_), k(k_), s(std::move(s_)), t(std::move(t_)) {
    if (m <= 0) throw domain_error("Speh complementary series size parameter must be positive");
    if (k <= 0) throw domain_error("Speh discrete parameter must be positive");
  }
};

using Factor = std::variant<CharacterRep, SteinRep, SpehRep, SpehCSRep>;

/// Sign character exponent attached to the discrete parameter k.
inline int speh_epsilon(int k) { return (k + 1) % 2; }

/// Size of the general linear group the factor lives on.
inline int factor_size(const Factor& f) {
  return std::visit(
      [](const auto& r) -> int {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, CharacterRep>) return r.n;
        if constexpr (std::is_same_v<T, SteinRep>) return 2 * r.m;
        if constexpr (std::is_same_v<T, SpehRep>) return 2 * r.m;
        if constexpr (std::is_same_v<T, SpehCSRep>) return 4 * r.m;
      },
      f);
}

/// Partition of the nilpotent orbit attached to a single factor.
inline Partition factor_associated_partition(const Factor& f) {
  return std::visit(
      [](const auto& r) -> Partition {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, CharacterRep>) return Partition::rectangle(1, r.n);
        if constexpr (std::is_same_v<T, SteinRep>) return Partition::rectangle(2, r.m);
        if constexpr (std::is_same_v<T, SpehRep>) return Partition::rectangle(2, r.m);
        if constexpr (std::is_same_v<T, SpehCSRep>) return Partition::rectangle(4, r.m);
      },
      f);
}

inline int factor_depth(const Factor& f) {
  return factor_associated_partition(f).largest();
}

inline bool factor_equal(const Factor& a, const Factor& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ca = std::get_if<CharacterRep>(&a)) {
    const auto& cb = std::get<CharacterRep>(b);
    return ca->n == cb.n && ca->eps == cb.eps && ca->z == cb.z;
  }
  if (const auto* sa = std::get_if<SteinRep>(&a)) {
    const auto& sb = std::get<SteinRep>(b);
    return sa->m == sb.m && sa->s == sb.s && sa->eps == sb.eps && sa->t == sb.t;
  }
  if (const auto* da = std::get_if<SpehRep>(&a)) {
    const auto& db = std::get<SpehRep>(b);
    return da->m == db.m && da->k == db.k && da->t == db.t;
  }
  const auto& xa = std::get<SpehCSRep>(a);
  const auto& xb = std::get<SpehCSRep>(b);
  return xa.m == xb.m && xa.k == xb.k && xa.s == xb.s && xa.t == xb.t;
}

namespace detail {

/// Arbitrary total order on factors, used only to canonicalize multisets.
inline bool factor_less(const Factor& a, const Factor& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  auto key_cmp = [](auto... pairs) -> int {
    int result = 0;
    (void)std::initializer_list<int>{
        (result == 0 ? (result = pairs) : result)...};
    return result;
  };
  if (const auto* ca = std::get_if<CharacterRep>(&a)) {
    const auto& cb = std::get<CharacterRep>(b);
    return key_cmp(ca->n - cb.n, ca->eps - cb.eps, gaussian_cmp(ca->z, cb.z)) < 0;
  }
  if (const auto* sa = std::get_if<SteinRep>(&a)) {
    const auto& sb = std::get<SteinRep>(b);
    return key_cmp(sa->m - sb.m, cmp(sa->s, sb.s), sa->eps - sb.eps, cmp(sa->t, sb.t)) < 0;
  }
  if (const auto* da = std::get_if<SpehRep>(&a)) {
    const auto& db = std::get<SpehRep>(b);
    return key_cmp(da->m - db.m, da->k - db.k, cmp(da->t, db.t)) < 0;
  }
  const auto& xa = std::get<SpehCSRep>(a);
  const auto& xb = std::get<SpehCSRep>(b);
  return key_cmp(xa.m - xb.m, xa.k - xb.k, cmp(xa.s, xb.s), cmp(xa.t, xb.t)) < 0;
}

}  // namespace detail

/// Formal product of catalogue factors on GL(n), n the sum of the factor
/// sizes.  The empty product is the trivial representation of GL(0); the
/// distinguished zero object absorbs products and has no invariants.
class RepExpr {
 public:
  static RepExpr trivial(Field field) { return RepExpr(field, false, {}); }

  static RepExpr zero(Field field) { return RepExpr(field, true, {}); }

  static RepExpr of(Field field, std::vector<Factor> factors) {
    return RepExpr(field, false, std::move(factors));
  }

  static RepExpr single(Field field, Factor f) {
    return RepExpr(field, false, {std::move(f)});
  }

  Field field() const { return field_; }
  bool is_zero() const { return zero_; }
  bool is_trivial() const { return !zero_ && factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Size of the ambient general linear group.
  int n() const {
    int total = 0;
    for (const auto& f : factors_) total += factor_size(f);
    return total;
  }

  friend bool operator==(const RepExpr& a, const RepExpr& b) {
    if (a.field_ != b.field_ || a.zero_ != b.zero_) return false;
    if (a.factors_.size() != b.factors_.size()) return false;
    for (std::size_t i = 0; i < a.factors_.size(); ++i)
      if (!factor_equal(a.factors_[i], b.factors_[i])) return false;
    return true;
  }

 private:
  RepExpr(Field field, bool zero, std::vector<Factor> factors)
      : field_(field), zero_(zero), factors_(std::move(factors)) {}

  Field field_;
  bool zero_;
  std::vector<Factor> factors_;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Checks parameter ranges and field compatibility of every factor:
/// 0 < s < 1/2 for the complementary series, sign exponents in {0, 1} over
/// the reals, Speh types only over the reals, imaginary twist parameters.
inline ValidationReport validate(const RepExpr& e) {
  ValidationReport report;
  auto check_eps = [&](int eps) {
    if (e.field() == Field::Real && eps != 0 && eps != 1)
      report.problems.push_back("sign character exponent must be 0 or 1 over R");
  };
  auto check_s = [&](const Rational& s) {
    if (!(s > 0 && 2 * s < 1))
      report.problems.push_back("complementary series parameter must satisfy 0 < s < 1/2");
  };
  for (const auto& f : e.factors()) {
    if (const auto* c = std::get_if<CharacterRep>(&f)) {
      check_eps(c->eps);
    } else if (const auto* s = std::get_if<SteinRep>(&f)) {
      check_eps(s->eps);
      check_s(s->s);
    } else if (std::get_if<SpehRep>(&f)) {
      if (e.field() == Field::Complex)
        report.problems.push_back("Speh representations exist only over R");
    } else if (const auto* x = std::get_if<SpehCSRep>(&f)) {
      if (e.field() == Field::Complex)
        report.problems.push_back("Speh complementary series exist only over R");
      check_s(x->s);
    }
  }
  return report;
}

inline void ensure_valid(const RepExpr& e) {
  ValidationReport report = validate(e);
  if (!report.ok()) throw domain_error("invalid representation: " + report.problems.front());
}

/// Partition of the nilpotent orbit attached to the representation: the
/// induced sum of the factor orbits.  Undefined for the zero object.
inline Partition associated_partition(const RepExpr& e) {
  if (e.is_zero()) throw domain_error("the zero object has no associated partition");
  ensure_valid(e);
  std::vector<Partition> summands;
  summands.reserve(e.factors().size());
  for (const auto& f : e.factors()) summands.push_back(factor_associated_partition(f));
  return induced_sum(summands);
}

/// Largest part of the associated partition; equivalently the sum of the
/// factor depths.
inline int depth(const RepExpr& e) {
  return associated_partition(e).largest();
}

/// Parabolic induction product.  Both operands must live over the same
/// field; the zero object absorbs.
inline RepExpr product(const RepExpr& a, const RepExpr& b) {
  if (a.field() != b.field())
    throw domain_error("product factors must live over the same field");
  if (a.is_zero() || b.is_zero()) return RepExpr::zero(a.field());
  std::vector<Factor> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return RepExpr::of(a.field(), std::move(factors));
}

/// Equality in the representation ring: same factors up to reordering.
inline bool grothendieck_equal(const RepExpr& a, const RepExpr& b) {
  if (a.field() != b.field() || a.is_zero() != b.is_zero()) return false;
  std::vector<Factor> fa = a.factors(), fb = b.factors();
  std::sort(fa.begin(), fa.end(), detail::factor_less);
  std::sort(fb.begin(), fb.end(), detail::factor_less);
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (!factor_equal(fa[i], fb[i])) return false;
  return true;
}

/// The two degenerate principal series presentations of the Speh
/// representation of GL(2m) with discrete parameter k: the induced module
/// whose quotient it is, and the one whose submodule it is.
struct SpehPresentations {
  RepExpr quotient_of;
  RepExpr submodule_of;
};

inline SpehPresentations speh_presentations(int m, int k) {
  if (m <= 0 || k <= 0) throw domain_error("Speh parameters must be positive");
  const int eps = speh_epsilon(k);
  Rational half_k(k, 2);
  half_k.canonicalize();
  auto chi = [&](int e, Rational z) {
    return Factor(CharacterRep(m, e, GaussianRational(std::move(z))));
  };
  RepExpr quotient_of = RepExpr::of(
      Field::Real, {chi(eps, Rational(-half_k)), chi(0, half_k)});
  RepExpr submodule_of = RepExpr::of(
      Field::Real, {chi(eps, half_k), chi(0, Rational(-half_k))});
  return SpehPresentations{std::move(quotient_of), std::move(submodule_of)};
}

}  // namespace mirabolic
