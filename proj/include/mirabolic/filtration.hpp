#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mirabolic/errors.hpp"
#include "mirabolic/matrix.hpp"
#include "mirabolic/rational.hpp"
#include "mirabolic/report.hpp"

namespace mirabolic {

/// Subspace of Q^ambient, stored as the reduced row echelon basis of its
/// row space.  Two subspaces are equal exactly when the stored bases are.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {
    if (ambient < 0) throw domain_error("ambient dimension must be non-negative");
  }

  static Subspace zero(int ambient) { return Subspace(ambient); }

  static Subspace from_rows(int ambient, const std::vector<std::vector<Rational>>& rows) {
    Matrix<Rational> m(static_cast<int>(rows.size()), ambient);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(rows[r].size()) != ambient)
        throw domain_error("row length does not match the ambient dimension");
      for (int c = 0; c < ambient; ++c) m(static_cast<int>(r), c) = rows[r][c];
    }
    Subspace s(ambient);
    s.basis_ = rref(m);
    return s;
  }

  static Subspace full(int ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix<Rational>::identity(ambient);
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  const Matrix<Rational>& basis() const { return basis_; }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw domain_error("subspace ambient mismatch");
    Matrix<Rational> stacked(a.basis_.rows() + b.basis_.rows(), a.ambient_);
    for (int r = 0; r < a.basis_.rows(); ++r)
      for (int c = 0; c < a.ambient_; ++c) stacked(r, c) = a.basis_(r, c);
    for (int r = 0; r < b.basis_.rows(); ++r)
      for (int c = 0; c < a.ambient_; ++c) stacked(a.basis_.rows() + r, c) = b.basis_(r, c);
    Subspace s(a.ambient_);
    s.basis_ = rref(stacked);
    return s;
  }

  bool contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw domain_error("subspace ambient mismatch");
    return (*this + other).dim() == dim();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_;
  Matrix<Rational> basis_;
};

/// dim(a intersect b), via dim a + dim b - dim(a + b).
inline int intersection_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - (a + b).dim();
}

/// Exhaustive increasing chain of subspaces indexed by the integers:
/// steps 0 .. size-1 are stored, every negative index reads as the zero
/// subspace, and every index past the end reads as the last stored step.
class FiltrationChain {
 public:
  FiltrationChain(int ambient, std::vector<Subspace> steps)
      : ambient_(ambient), zero_(ambient), steps_(std::move(steps)) {
    if (steps_.empty()) throw domain_error("a filtration chain needs at least one step");
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (steps_[i].ambient() != ambient_)
        throw domain_error("chain step " + std::to_string(i) + " has the wrong ambient");
      if (i > 0 && !steps_[i].contains(steps_[i - 1]))
        throw domain_error("chain step " + std::to_string(i) +
                           " does not contain step " + std::to_string(i - 1));
    }
  }

  int ambient() const { return ambient_; }
  int size() const { return static_cast<int>(steps_.size()); }
  const Subspace& top() const { return steps_.back(); }

  const Subspace& step_at(int i) const {
    if (i < 0) return zero_;
    if (i >= size()) return steps_.back();
    return steps_[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const FiltrationChain& a, const FiltrationChain& b) {
    return a.ambient_ == b.ambient_ && a.steps_ == b.steps_;
  }

 private:
  int ambient_;
  Subspace zero_;
  std::vector<Subspace> steps_;
};

/// F and Phi interlock with gap k when Phi^i <= F^(i+k) <= Phi^(i+2k) for
/// every i.  Checked through stabilization; k must be non-negative.
inline bool comparable(const FiltrationChain& f, const FiltrationChain& phi, int k) {
  if (k < 0) throw domain_error("comparability gap must be non-negative");
  if (f.ambient() != phi.ambient()) throw domain_error("chain ambient mismatch");
  const int limit = std::max(f.size(), phi.size()) + 1;
  for (int i = -(2 * k + 1); i <= limit; ++i) {
    if (!f.step_at(i + k).contains(phi.step_at(i))) return false;
    if (!phi.step_at(i + 2 * k).contains(f.step_at(i + k))) return false;
  }
  return true;
}

/// The 2k+1 chains Psi_j^i = F^(i+k) + Phi^(i+j), j = 0..2k, walking from
/// F shifted by k (j = 0) to Phi shifted by 2k (j = 2k).  Requires
/// comparable(F, Phi, k).
inline std::vector<FiltrationChain> interpolate(const FiltrationChain& f,
                                                const FiltrationChain& phi, int k) {
  if (!comparable(f, phi, k)) throw domain_error("chains are not comparable with gap k");
  const int length = std::max(f.size(), phi.size()) + 1;
  std::vector<FiltrationChain> out;
  out.reserve(2 * k + 1);
  for (int j = 0; j <= 2 * k; ++j) {
    std::vector<Subspace> steps;
    steps.reserve(length);
    for (int i = 0; i < length; ++i) steps.push_back(f.step_at(i + k) + phi.step_at(i + j));
    out.emplace_back(f.ambient(), std::move(steps));
  }
  return out;
}

/// Kernel and cokernel dimensions of the graded comparison maps
/// Gr^i(F) -> Gr^i(Phi) for interleaved chains F^i <= Phi^i <= F^(i+1),
/// where Gr^i is step i modulo step i-1.  The dimensions are computed from
/// genuine subspace sums and intersections; `formulas_match` records that
/// they agree with the closed forms dim Phi^(i-1) - dim F^(i-1) and
/// dim Phi^i - dim F^i, and `identity_holds` that cokernel_i equals
/// kernel_(i+1).
struct ShiftLemmaReport {
  std::vector<int> kernel_dims;
  std::vector<int> cokernel_dims;
  bool formulas_match = true;
  bool identity_holds = true;
};

inline ShiftLemmaReport shift_lemma_dims(const FiltrationChain& f, const FiltrationChain& phi) {
  if (f.ambient() != phi.ambient()) throw domain_error("chain ambient mismatch");
  const int limit = std::max(f.size(), phi.size()) + 1;
  for (int i = -1; i <= limit; ++i) {
    if (!phi.step_at(i).contains(f.step_at(i)))
      throw domain_error("interleaving fails at index " + std::to_string(i) +
                         ": F is not inside Phi there");
    if (!f.step_at(i + 1).contains(phi.step_at(i)))
      throw domain_error("interleaving fails at index " + std::to_string(i) +
                         ": Phi is not inside the next step of F");
  }
  ShiftLemmaReport report;
  for (int i = 0; i <= limit; ++i) {
    const Subspace& fi = f.step_at(i);
    const Subspace& phi_prev = phi.step_at(i - 1);
    const Subspace& f_prev = f.step_at(i - 1);
    // Kernel of Gr^i(F) -> Gr^i(Phi) is (F^i cap Phi^(i-1)) / F^(i-1).
    const int ker = intersection_dim(fi, phi_prev) - f_prev.dim();
    // Image is (F^i + Phi^(i-1)) / Phi^(i-1).
    const int image = (fi + phi_prev).dim() - phi_prev.dim();
    const int coker = phi.step_at(i).dim() - phi_prev.dim() - image;
    report.kernel_dims.push_back(ker);
    report.cokernel_dims.push_back(coker);
    if (ker != phi_prev.dim() - f_prev.dim()) report.formulas_match = false;
    if (coker != phi.step_at(i).dim() - fi.dim()) report.formulas_match = false;
  }
  for (std::size_t i = 0; i + 1 < report.kernel_dims.size(); ++i)
    if (report.cokernel_dims[i] != report.kernel_dims[i + 1]) report.identity_holds = false;
  // Beyond the computed window both chains are stable and all graded
  // pieces vanish, so the trailing cokernel must be zero as well.
  if (!report.cokernel_dims.empty() && report.cokernel_dims.back() != 0)
    report.identity_holds = false;
  return report;
}

/// Dimensions of the graded pieces: [dim F^0, dim F^1 - dim F^0, ...].
/// They sum to the dimension of the top step.
inline std::vector<int> graded_dims(const FiltrationChain& f) {
  std::vector<int> out;
  out.reserve(f.size());
  for (int i = 0; i < f.size(); ++i)
    out.push_back(f.step_at(i).dim() - f.step_at(i - 1).dim());
  return out;
}

// --- chain text form ------------------------------------------------------
//
//   ambient 4
//   step
//   1 0 0 0
//   step
//   1 0 0 0
//   0 1 0 0
//
// Each "step" is followed by the rows of a basis (possibly none, for the
// zero subspace).  The printer emits the reduced echelon basis, which the
// parser re-reduces, so round trips are exact.

inline std::string print_chain(const FiltrationChain& f) {
  std::string out = "ambient " + std::to_string(f.ambient()) + "\n";
  for (int i = 0; i < f.size(); ++i) {
    out += "step\n";
    const Matrix<Rational>& basis = f.step_at(i).basis();
    for (int r = 0; r < basis.rows(); ++r) {
      for (int c = 0; c < basis.cols(); ++c) {
        if (c) out += ' ';
        out += rational_to_string(basis(r, c));
      }
      out += '\n';
    }
  }
  return out;
}

inline FiltrationChain parse_chain(std::string_view text) {
  int ambient = -1;
  std::vector<std::vector<std::vector<Rational>>> step_rows;
  std::size_t pos = 0;
  const std::size_t size = text.size();
  auto next_line = [&]() -> std::string_view {
    while (pos < size && (text[pos] == '\n' || text[pos] == '\r')) ++pos;
    if (pos >= size) return {};
    std::size_t start = pos;
    while (pos < size && text[pos] != '\n') ++pos;
    std::size_t end = pos;
    while (end > start && (text[end - 1] == ' ' || text[end - 1] == '\r')) --end;
    return text.substr(start, end - start);
  };
  while (pos < size) {
    const std::size_t line_pos = pos;
    std::string_view line = next_line();
    if (line.empty()) continue;
    if (line.substr(0, 7) == "ambient") {
      if (ambient >= 0) throw parse_error("duplicate ambient line", line_pos);
      std::size_t p = 7;
      while (p < line.size() && line[p] == ' ') ++p;
      std::size_t start = p;
      while (p < line.size() && detail::is_digit(line[p])) ++p;
      if (start == p || p != line.size())
        throw parse_error("malformed ambient line", line_pos);
      ambient = std::stoi(std::string(line.substr(start, p - start)));
      continue;
    }
    if (line == "step") {
      if (ambient < 0) throw parse_error("step before ambient line", line_pos);
      step_rows.emplace_back();
      continue;
    }
    if (ambient < 0 || step_rows.empty())
      throw parse_error("matrix row outside any step", line_pos);
    std::vector<Rational> row;
    std::size_t p = 0;
    while (p < line.size()) {
      if (line[p] == ' ' || line[p] == '\t') {
        ++p;
        continue;
      }
      row.push_back(detail::parse_rational_at(line, p));
    }
    if (static_cast<int>(row.size()) != ambient)
      throw parse_error("row has the wrong number of entries", line_pos);
    step_rows.back().push_back(std::move(row));
  }
  if (ambient < 0) throw parse_error("missing ambient line", 0);
  if (step_rows.empty()) throw parse_error("a chain needs at least one step", 0);
  std::vector<Subspace> steps;
  steps.reserve(step_rows.size());
  for (const auto& rows : step_rows) steps.push_back(Subspace::from_rows(ambient, rows));
  return FiltrationChain(ambient, std::move(steps));
}

// --- randomized verification ----------------------------------------------

namespace detail {

inline std::vector<Rational> random_vector(std::mt19937_64& rng, int ambient) {
  std::vector<Rational> v(ambient);
  for (int i = 0; i < ambient; ++i) v[i] = Rational(static_cast<long>(rng() % 5) - 2);
  return v;
}

/// Strictly bookkept random increasing chain: each step adds 0-2 vectors.
inline std::vector<Subspace> random_master_chain(std::mt19937_64& rng, int ambient,
                                                 int length) {
  std::vector<Subspace> chain;
  Subspace current = Subspace::zero(ambient);
  for (int i = 0; i < length; ++i) {
    const int additions = static_cast<int>(rng() % 3);
    std::vector<std::vector<Rational>> rows;
    for (int a = 0; a < additions; ++a) rows.push_back(random_vector(rng, ambient));
    current = current + Subspace::from_rows(ambient, rows);
    chain.push_back(current);
  }
  return chain;
}

}  // namespace detail

/// Seeded randomized sweep over the whole module: comparability of
/// subsampled chains, interpolation endpoints and nesting, the graded
/// kernel/cokernel shift identity, and graded dimension bookkeeping.
inline SuiteReport run_filtration_suite(unsigned long seed, int trials, int max_dim) {
  SuiteReport report;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int ambient = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_dim));
    const int master_len = 2 + static_cast<int>(rng() % 7);
    std::vector<Subspace> master = detail::random_master_chain(rng, ambient, master_len);
    auto master_at = [&](int i) -> const Subspace& {
      return master[static_cast<std::size_t>(std::clamp(i, 0, master_len - 1))];
    };
    auto tag = [&](const std::string& what) {
      return what + " (trial " + std::to_string(trial) + ", ambient " +
             std::to_string(ambient) + ")";
    };

    // Interleaved pair: F^i = C^(2i), Phi^i = C^(2i+1); both stabilize at
    // the last master step.
    const int pair_len = master_len / 2 + 1;
    std::vector<Subspace> f_steps, phi_steps;
    for (int i = 0; i < pair_len; ++i) {
      f_steps.push_back(master_at(2 * i));
      phi_steps.push_back(master_at(2 * i + 1));
    }
    FiltrationChain f(ambient, std::move(f_steps));
    FiltrationChain phi(ambient, std::move(phi_steps));

    ++report.checks;
    if (!comparable(f, phi, 1)) report.note_failure(tag("interleaved pair not comparable"));
    ++report.checks;
    if (!comparable(phi, f, 2))
      report.note_failure(tag("comparability is not symmetric with doubled gap"));

    ShiftLemmaReport shift = shift_lemma_dims(f, phi);
    ++report.checks;
    if (!shift.identity_holds)
      report.note_failure(tag("cokernel/kernel shift identity failed"));
    ++report.checks;
    if (!shift.formulas_match)
      report.note_failure(tag("graded kernel/cokernel dimensions differ from closed form"));

    // Interpolation for a couple of gaps.
    for (int k = 1; k <= 2; ++k) {
      if (!comparable(f, phi, k)) continue;
      std::vector<FiltrationChain> psi = interpolate(f, phi, k);
      const int length = psi.front().size();
      ++report.checks;
      bool endpoints = true;
      for (int i = 0; i < length; ++i) {
        if (!(psi.front().step_at(i) == f.step_at(i + k))) endpoints = false;
        if (!(psi.back().step_at(i) == phi.step_at(i + 2 * k))) endpoints = false;
      }
      if (!endpoints) report.note_failure(tag("interpolation endpoints are wrong"));
      ++report.checks;
      bool nested = true;
      for (int j = 0; j + 1 <= 2 * k; ++j)
        for (int i = 0; i < length; ++i) {
          if (!psi[j + 1].step_at(i).contains(psi[j].step_at(i))) nested = false;
          if (!psi[j].step_at(i + 1).contains(psi[j + 1].step_at(i))) nested = false;
        }
      if (!nested) report.note_failure(tag("interpolation nesting failed"));
    }

    // Graded dimensions add up to the top.
    ++report.checks;
    std::vector<int> grades = graded_dims(f);
    int total = 0;
    for (int g : grades) total += g;
    if (total != f.top().dim()) report.note_failure(tag("graded dimensions do not sum"));

    // Chain text round trip.
    ++report.checks;
    FiltrationChain reparsed = parse_chain(print_chain(phi));
    if (!(reparsed == phi)) report.note_failure(tag("chain text round trip failed"));
  }
  return report;
}

}  // namespace mirabolic
