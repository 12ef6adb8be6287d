#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mirabolic/errors.hpp"
#include "mirabolic/gaussian.hpp"
#include "mirabolic/partition.hpp"
#include "mirabolic/reps.hpp"

namespace mirabolic {

/// Highest non-vanishing derivative, computed factor by factor:
///
///   character of GL(n)            ->  same character of GL(n-1)
///   Stein of GL(2m)               ->  Stein of GL(2m-2), same parameters
///   Speh of GL(2m)                ->  Speh of GL(2m-2), same parameters
///   Speh compl. series of GL(4m)  ->  same type on GL(4m-4)
///
/// Factors that shrink to size 0 disappear.  The zero object maps to
/// itself.  The order of the derivative taken is depth(e).
inline RepExpr adduce(const RepExpr& e) {
  if (e.is_zero()) return e;
  ensure_valid(e);
  std::vector<Factor> result;
  result.reserve(e.factors().size());
  for (const auto& f : e.factors()) {
    if (const auto* c = std::get_if<CharacterRep>(&f)) {
      if (c->n > 1) result.push_back(CharacterRep(c->n - 1, c->eps, c->z));
    } else if (const auto* s = std::get_if<SteinRep>(&f)) {
      if (s->m > 1) result.push_back(SteinRep(s->m - 1, s->s, s->eps, s->t));
    } else if (const auto* d = std::get_if<SpehRep>(&f)) {
      if (d->m > 1) result.push_back(SpehRep(d->m - 1, d->k, d->t));
    } else {
      const auto& x = std::get<SpehCSRep>(f);
      if (x.m > 1) result.push_back(SpehCSRep(x.m - 1, x.k, x.s, x.t));
    }
  }
  return RepExpr::of(e.field(), std::move(result));
}

/// Alias: the highest derivative of e is its adduced representation.
inline RepExpr highest_derivative(const RepExpr& e) { return adduce(e); }

/// Derivative of the given order of a monomial of characters.
///
/// For a product of k characters the depth is k, and:
///   order == k      ->  every character shrinks by one, size-0 factors drop
///   order  > k      ->  the zero object
///   1 <= order < k  ->  not determined by this calculus (undetermined_error)
///
/// Non-character factors are rejected; apply `adduce` to those instead.
inline RepExpr derivative_monomial(const RepExpr& e, int order) {
  if (order < 1) throw domain_error("derivative order must be positive");
  if (e.is_zero()) throw domain_error("derivative of the zero object");
  ensure_valid(e);
  for (const auto& f : e.factors())
    if (!std::holds_alternative<CharacterRep>(f))
      throw domain_error("derivative_monomial applies to monomials of characters only");
  const int k = static_cast<int>(e.factors().size());
  if (order > k) return RepExpr::zero(e.field());
  if (order < k)
    throw undetermined_error(
        "derivative of order " + std::to_string(order) + " of a monomial of depth " +
        std::to_string(k) + " is not determined by this calculus");
  return adduce(e);
}

/// Monomial of characters attached to a representation; its derivatives of
/// every order up to the depth are defined.  Twists distribute onto the
/// factor characters:
///
///   character                     ->  itself
///   Stein(m, s; eps, t)           ->  chi(m,eps,s+it) x chi(m,eps,-s+it)
///   Speh(m, k; t)                 ->  chi(m,eps',k/2+it) x chi(m,0,-k/2+it)
///   SpehCS(m, k, s; t)            ->  the four characters
///                                     chi(m,eps',k/2+-s+it) x chi(m,0,-k/2+-s+it)
///
/// where eps' alternates with k.  Factors are stably sorted by
/// non-ascending real part, so the result has exactly depth(e) factors and
/// taking the full derivative commutes with this attachment.
inline RepExpr igeq(const RepExpr& e) {
  if (e.is_zero()) throw domain_error("the zero object has no attached character monomial");
  ensure_valid(e);
  std::vector<CharacterRep> chars;
  for (const auto& f : e.factors()) {
    if (const auto* c = std::get_if<CharacterRep>(&f)) {
      chars.push_back(*c);
    } else if (const auto* s = std::get_if<SteinRep>(&f)) {
      GaussianRational it(Rational(0), s->t);
      chars.push_back(CharacterRep(s->m, s->eps, GaussianRational(s->s) + it));
      chars.push_back(CharacterRep(s->m, s->eps, GaussianRational(Rational(-s->s)) + it));
    } else if (const auto* d = std::get_if<SpehRep>(&f)) {
      Rational half_k(d->k, 2);
      half_k.canonicalize();
      GaussianRational it(Rational(0), d->t);
      chars.push_back(CharacterRep(d->m, speh_epsilon(d->k), GaussianRational(half_k) + it));
      chars.push_back(CharacterRep(d->m, 0, GaussianRational(Rational(-half_k)) + it));
    } else {
      const auto& x = std::get<SpehCSRep>(f);
      Rational half_k(x.k, 2);
      half_k.canonicalize();
      GaussianRational it(Rational(0), x.t);
      const int eps = speh_epsilon(x.k);
      chars.push_back(
          CharacterRep(x.m, eps, GaussianRational(Rational(half_k + x.s)) + it));
      chars.push_back(
          CharacterRep(x.m, 0, GaussianRational(Rational(-half_k + x.s)) + it));
      chars.push_back(
          CharacterRep(x.m, eps, GaussianRational(Rational(half_k - x.s)) + it));
      chars.push_back(
          CharacterRep(x.m, 0, GaussianRational(Rational(-half_k - x.s)) + it));
    }
  }
  std::stable_sort(chars.begin(), chars.end(),
                   [](const CharacterRep& a, const CharacterRep& b) {
                     return cmp(a.z.re, b.z.re) > 0;
                   });
  std::vector<Factor> factors(chars.begin(), chars.end());
  return RepExpr::of(e.field(), std::move(factors));
}

/// Dimension of the space of Whittaker-type functionals attached to the
/// composition lambda, as far as the iterated-derivative calculus decides
/// it.
struct WhittakerDim {
  enum class Verdict { Zero, One, Unknown };

  Verdict verdict;
  std::string reason;

  static WhittakerDim zero() { return {Verdict::Zero, {}}; }
  static WhittakerDim one() { return {Verdict::One, {}}; }
  static WhittakerDim unknown(std::string why) { return {Verdict::Unknown, std::move(why)}; }
};

inline std::string to_string(WhittakerDim::Verdict v) {
  switch (v) {
    case WhittakerDim::Verdict::Zero: return "zero";
    case WhittakerDim::Verdict::One: return "one";
    default: return "unknown";
  }
}

/// Walks the parts of lambda in order, taking one derivative per part:
/// a part above the current depth kills the representation, a part equal
/// to the depth takes the highest derivative, and a part below the depth
/// is not determined by this calculus.
inline WhittakerDim whittaker_dim(const RepExpr& e, const Composition& lambda) {
  if (e.is_zero()) throw domain_error("Whittaker dimension of the zero object");
  ensure_valid(e);
  if (lambda.n() != e.n())
    throw domain_error("lambda must be a composition of " + std::to_string(e.n()));
  RepExpr current = e;
  for (int part : lambda.parts()) {
    const int d = depth(current);
    if (part > d) return WhittakerDim::zero();
    if (part < d)
      return WhittakerDim::unknown(
          "a derivative of order " + std::to_string(part) + " below the current depth " +
          std::to_string(d) + " is not determined by this calculus");
    current = adduce(current);
  }
  return WhittakerDim::one();
}

/// Multiset of exact complex numbers, kept sorted; the infinitesimal
/// character data the derivative acts on.
class InfCharMultiset {
 public:
  InfCharMultiset() = default;

  explicit InfCharMultiset(std::vector<GaussianRational> elements)
      : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), gaussian_less);
  }

  const std::vector<GaussianRational>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  friend bool operator==(const InfCharMultiset& a, const InfCharMultiset& b) {
    return a.elements_ == b.elements_;
  }
  friend bool operator<(const InfCharMultiset& a, const InfCharMultiset& b) {
    return std::lexicographical_compare(a.elements_.begin(), a.elements_.end(),
                                        b.elements_.begin(), b.elements_.end(),
                                        gaussian_less);
  }

 private:
  std::vector<GaussianRational> elements_;
};

/// All multisets obtained by deleting k elements of S and adding 1/2 to
/// each survivor.  Deletions of equal elements give equal results, so the
/// output is deduplicated; it is sorted for determinism.
inline std::vector<InfCharMultiset> infchar_transform(const InfCharMultiset& S, int k) {
  const int n = static_cast<int>(S.size());
  if (k < 1 || k > n)
    throw domain_error("cannot delete " + std::to_string(k) + " elements from a multiset of " +
                       std::to_string(n));
  const Rational half(1, 2);
  std::set<InfCharMultiset> results;
  std::vector<int> choice(k);
  // Enumerate k-element index subsets; duplicates collapse in the set.
  auto emit = [&]() {
    std::vector<GaussianRational> kept;
    kept.reserve(n - k);
    std::size_t next = 0;
    for (int i = 0; i < n; ++i) {
      if (next < choice.size() && choice[next] == i) {
        ++next;
        continue;
      }
      const GaussianRational& g = S.elements()[i];
      kept.push_back(GaussianRational(Rational(g.re + half), g.im));
    }
    results.insert(InfCharMultiset(std::move(kept)));
  };
  for (int i = 0; i < k; ++i) choice[i] = i;
  while (true) {
    emit();
    int i = k - 1;
    while (i >= 0 && choice[i] == n - k + i) --i;
    if (i < 0) break;
    ++choice[i];
    for (int j = i + 1; j < k; ++j) choice[j] = choice[j - 1] + 1;
  }
  return std::vector<InfCharMultiset>(results.begin(), results.end());
}

}  // namespace mirabolic
