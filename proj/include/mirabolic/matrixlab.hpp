#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mirabolic/errors.hpp"
#include "mirabolic/gaussian.hpp"
#include "mirabolic/matrix.hpp"
#include "mirabolic/partition.hpp"
#include "mirabolic/report.hpp"

namespace mirabolic {

/// Nilpotent Jordan matrix with block sizes given by `parts` (in order):
/// ones on the superdiagonal inside each block.
inline ExactMatrix jordan_matrix(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) {
    if (p <= 0) throw domain_error("Jordan block sizes must be positive");
    n += p;
  }
  ExactMatrix m(n, n);
  int offset = 0;
  for (int p : parts) {
    for (int j = 0; j < p - 1; ++j) m(offset + j, offset + j + 1) = GaussianRational(1);
    offset += p;
  }
  return m;
}

inline ExactMatrix jordan_matrix(const Partition& p) { return jordan_matrix(p.parts()); }
inline ExactMatrix jordan_matrix(const Composition& c) { return jordan_matrix(c.parts()); }

/// Jordan type of a nilpotent matrix.  The conjugate partition is read off
/// the rank sequence: entry k of the conjugate is rank(A^(k-1)) - rank(A^k).
inline Partition jordan_partition(const ExactMatrix& a) {
  if (!a.is_square()) throw domain_error("Jordan type of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return Partition();
  std::vector<int> ranks;
  ranks.push_back(n);  // rank of A^0
  ExactMatrix power = a;
  int k = 1;
  while (true) {
    ranks.push_back(rank(power));
    if (ranks.back() == 0) break;
    if (k == n)
      throw domain_error("matrix is not nilpotent: its power " + std::to_string(n) +
                         " is still nonzero");
    power = power * a;
    ++k;
  }
  std::vector<int> conjugate;
  for (std::size_t i = 1; i < ranks.size(); ++i) conjugate.push_back(ranks[i - 1] - ranks[i]);
  while (!conjugate.empty() && conjugate.back() == 0) conjugate.pop_back();
  return transpose(Partition(std::move(conjugate)));
}

/// Linear functional on n x n matrices represented by its dual matrix:
/// f(Z) = tr(dual * Z).
struct LinearFunctional {
  int n;
  ExactMatrix dual;

  LinearFunctional(int n_, ExactMatrix dual_) : n(n_), dual(std::move(dual_)) {
    if (dual.rows() != n || dual.cols() != n)
      throw domain_error("functional dual matrix has the wrong shape");
  }

  GaussianRational evaluate(const ExactMatrix& z) const {
    if (z.rows() != n || z.cols() != n)
      throw domain_error("functional applied to a matrix of the wrong size");
    GaussianRational sum(0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sum += dual(r, c) * z(c, r);
    return sum;
  }

  /// Value on the elementary matrix E_ab (1-based indices): dual(b, a).
  GaussianRational evaluate_elementary(int a, int b) const {
    if (a < 1 || a > n || b < 1 || b > n)
      throw domain_error("elementary matrix index out of range");
    return dual(b - 1, a - 1);
  }
};

/// The Whittaker-type functional attached to a composition lambda of n:
/// the Jordan matrix of lambda conjugated by the order-reversing
/// permutation, paired against matrices by the trace form.  For
/// lambda = (n) this is the sum of the superdiagonal entries.
inline LinearFunctional psi_lambda(const Composition& lambda) {
  const int n = lambda.n();
  ExactMatrix j = jordan_matrix(lambda);
  ExactMatrix dual(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) dual(r, c) = j(n - 1 - r, n - 1 - c);
  return LinearFunctional(n, std::move(dual));
}

/// Smallest d >= 1 with dual^d = 0.  The zero functional has depth 1.
inline int depth_of_functional(const LinearFunctional& f) {
  ExactMatrix power = ExactMatrix::identity(f.n);
  for (int d = 1; d <= f.n || d == 1; ++d) {
    power = power * f.dual;
    if (power.is_zero()) return d;
  }
  throw domain_error("the dual matrix of the functional is not nilpotent");
}

// ---------------------------------------------------------------------------
// The superdiagonal perturbation lemma.
//
// Fix 1 <= d <= n.  Let u have ones at positions (j, j+1) for
// j = n-d+1 .. n-1 (d-1 entries ending in the corner), and let v be
// supported in column n-d+1, rows 1 .. n-d.  Then
//
//     (u + v)^d  =  v moved to column n,
//
// so u + v is nilpotent of order <= d exactly when v = 0.
// ---------------------------------------------------------------------------

/// The d-1 superdiagonal ones ending at (n-1, n) (1-based positions).
inline ExactMatrix superdiagonal_unit(int n, int d) {
  if (d < 1 || d > n) throw domain_error("need 1 <= d <= n");
  ExactMatrix u(n, n);
  for (int j = n - d + 1; j <= n - 1; ++j) u(j - 1, j) = GaussianRational(1);
  return u;
}

/// The alternative reading with d ones starting one row higher, at
/// (n-d, n-d+1).  Kept only to document that the lemma fails for it.
inline ExactMatrix superdiagonal_unit_alt(int n, int d) {
  if (d < 1 || d > n - 1) throw domain_error("need 1 <= d <= n-1");
  ExactMatrix u(n, n);
  for (int j = n - d; j <= n - 1; ++j) u(j - 1, j) = GaussianRational(1);
  return u;
}

/// Places `column` (length n-d) into column n-d+1, rows 1..n-d.
inline ExactMatrix embed_perturbation(int n, int d, const std::vector<GaussianRational>& column) {
  if (d < 1 || d > n) throw domain_error("need 1 <= d <= n");
  if (static_cast<int>(column.size()) != n - d)
    throw domain_error("perturbation vector must have length n-d");
  ExactMatrix v(n, n);
  for (int r = 1; r <= n - d; ++r) v(r - 1, n - d) = column[r - 1];
  return v;
}

/// The closed form of (u+v)^d: the same column vector moved to column n.
inline ExactMatrix lemma_closed_form(int n, int d, const std::vector<GaussianRational>& column) {
  if (static_cast<int>(column.size()) != n - d)
    throw domain_error("perturbation vector must have length n-d");
  ExactMatrix w(n, n);
  for (int r = 1; r <= n - d; ++r) w(r - 1, n - 1) = column[r - 1];
  return w;
}

namespace detail {

inline bool column_is_zero(const std::vector<GaussianRational>& column) {
  for (const auto& g : column)
    if (!g.is_zero()) return false;
  return true;
}

inline std::string describe_column(const std::vector<GaussianRational>& column) {
  std::string out = "(";
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (i) out += ",";
    out += gaussian_to_string(column[i]);
  }
  return out + ")";
}

}  // namespace detail

/// Checks the lemma for one perturbation: computes (u+v)^d directly and
/// compares it with the closed form, then checks the nilpotency criterion.
inline bool check_linalg_lemma_instance(int n, int d,
                                        const std::vector<GaussianRational>& column,
                                        std::string* failure = nullptr) {
  ExactMatrix sum = superdiagonal_unit(n, d) + embed_perturbation(n, d, column);
  ExactMatrix power = sum.pow(d);
  if (!(power == lemma_closed_form(n, d, column))) {
    if (failure)
      *failure = "power mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d) +
                 " v=" + detail::describe_column(column);
    return false;
  }
  const bool vanishes = power.is_zero();
  if (vanishes != detail::column_is_zero(column)) {
    if (failure)
      *failure = "nilpotency criterion failed at n=" + std::to_string(n) +
                 " d=" + std::to_string(d) + " v=" + detail::describe_column(column);
    return false;
  }
  return true;
}

/// Exhaustive sweep over v in {-1,0,1}^(n-d) for all 1 <= d <= n <= max_n,
/// plus `random_per_pair` seeded random rational perturbations per (n, d).
inline SuiteReport run_linalg_suite(int max_n, unsigned long seed, int random_per_pair) {
  SuiteReport report;
  std::mt19937_64 rng(seed);
  auto random_rational = [&]() {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 9) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 1; d <= n; ++d) {
      const int len = n - d;
      std::vector<GaussianRational> column(len);
      // Odometer over {-1,0,1}^len.
      std::vector<int> digits(len, 0);
      while (true) {
        for (int i = 0; i < len; ++i) column[i] = GaussianRational(digits[i] - 1);
        std::string failure;
        ++report.checks;
        if (!check_linalg_lemma_instance(n, d, column, &failure))
          report.note_failure(failure);
        int i = 0;
        while (i < len && digits[i] == 2) digits[i++] = 0;
        if (i == len) break;
        ++digits[i];
      }
      if (len > 0) {
        for (int trial = 0; trial < random_per_pair; ++trial) {
          for (int i = 0; i < len; ++i) column[i] = GaussianRational(random_rational());
          std::string failure;
          ++report.checks;
          if (!check_linalg_lemma_instance(n, d, column, &failure))
            report.note_failure(failure);
        }
      }
    }
  }
  return report;
}

/// The documented counterexample to the alternative reading: at n = 2,
/// d = 1 the matrix u' + v with u' = E12, v = -E12 satisfies
/// (u' + v)^1 = 0 although v is nonzero, so "nilpotent of order <= d only
/// when v = 0" is false for u'.
inline bool alt_reading_fails_at_2_1() {
  const int n = 2, d = 1;
  ExactMatrix u_alt = superdiagonal_unit_alt(n, d);
  ExactMatrix v = embed_perturbation(n, d, {GaussianRational(-1)});
  ExactMatrix power = (u_alt + v).pow(d);
  return power.is_zero() && !v.is_zero();
}

}  // namespace mirabolic
