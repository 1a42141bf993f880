#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "thetab/errors.hpp"
#include "thetab/rational.hpp"

namespace thetab::lp {

enum class Relation { LessEq, Eq, GreaterEq };
enum class Sense { Minimize, Maximize };
enum class Status { Optimal, Infeasible, Unbounded };

template <class S>
struct Row {
  std::vector<S> coeffs;
  Relation rel;
  S rhs;
};

// Linear program in natural inequality form; every variable is >= 0.
template <class S>
struct Problem {
  Sense sense = Sense::Minimize;
  std::vector<S> costs;
  std::vector<Row<S>> rows;

  size_t num_vars() const { return costs.size(); }
  void validate() const {
    if (costs.empty()) throw DomainError("LP with no variables");
    for (const auto& r : rows)
      if (r.coeffs.size() != costs.size()) throw ShapeMismatch("LP row length mismatch");
  }
};

template <class S>
struct Solution {
  Status status = Status::Infeasible;
  std::vector<S> values;  // original variables, meaningful iff Optimal
  S objective{};          // meaningful iff Optimal
  // Final basis over standard-form columns and the surviving row indices;
  // kept so optimality can be certified from the dual afterwards.
  std::vector<int> basis;
  std::vector<int> active_rows;
};

namespace detail {

template <class S>
struct ScalarOps;

// Exact mode: zero tolerances, Bland's rule (terminates on every input).
template <>
struct ScalarOps<Rational> {
  static constexpr bool bland = true;
  static bool neg_cost(const Rational& x) { return x.sign() < 0; }
  static bool pos_pivot(const Rational& x) { return x.sign() > 0; }
  static bool nonzero(const Rational& x) { return !x.is_zero(); }
  static bool phase1_positive(const Rational& x) { return x.sign() > 0; }
  static bool dual_feasible(const Rational& reduced) { return reduced.sign() >= 0; }
  static bool feas_eq(const Rational& a, const Rational& b) { return a == b; }
  static bool feas_le(const Rational& a, const Rational& b) { return a <= b; }
  static size_t iteration_cap(size_t m, size_t n) { return 1000000 * (m + n); }
};

// Float mode: pivot threshold guards against ill-conditioned tableaus;
// breakdown signals the caller to retry in exact mode.
template <>
struct ScalarOps<double> {
  static constexpr bool bland = false;
  static constexpr double eps_pivot = 1e-9;
  static constexpr double eps_cost = 1e-9;
  static constexpr double eps_feas = 1e-6;
  static bool neg_cost(double x) { return x < -eps_cost; }
  static bool pos_pivot(double x) { return x > eps_pivot; }
  static bool nonzero(double x) { return std::abs(x) > eps_pivot; }
  static bool phase1_positive(double x) { return x > 1e-7; }
  static bool dual_feasible(double reduced) { return reduced >= -eps_feas; }
  static bool feas_eq(double a, double b) { return std::abs(a - b) <= eps_feas * (1.0 + std::abs(b)); }
  static bool feas_le(double a, double b) { return a <= b + eps_feas * (1.0 + std::abs(b)); }
  static size_t iteration_cap(size_t m, size_t n) { return 2000 * (m + n) + 10000; }
};

// Standard form: min c.x, A x = b, x >= 0, b >= 0.
template <class S>
struct Standard {
  std::vector<std::vector<S>> A;
  std::vector<S> b;
  std::vector<S> c;          // internal minimization costs
  size_t n_orig = 0;
  size_t n_cols = 0;         // original + slack/surplus (no artificials)
  std::vector<int> slack_col;  // per row, -1 for equality rows
};

template <class S>
Standard<S> build_standard(const Problem<S>& p) {
  p.validate();
  const size_t n = p.num_vars();
  const size_t m = p.rows.size();
  size_t n_ineq = 0;
  for (const auto& r : p.rows)
    if (r.rel != Relation::Eq) ++n_ineq;

  Standard<S> sf;
  sf.n_orig = n;
  sf.n_cols = n + n_ineq;
  sf.A.assign(m, std::vector<S>(sf.n_cols, S(0)));
  sf.b.assign(m, S(0));
  sf.c.assign(sf.n_cols, S(0));
  sf.slack_col.assign(m, -1);
  for (size_t j = 0; j < n; ++j)
    sf.c[j] = (p.sense == Sense::Minimize) ? p.costs[j] : S(0) - p.costs[j];

  size_t next_slack = n;
  for (size_t i = 0; i < m; ++i) {
    const auto& r = p.rows[i];
    bool flip = r.rhs < S(0);
    for (size_t j = 0; j < n; ++j) sf.A[i][j] = flip ? S(0) - r.coeffs[j] : r.coeffs[j];
    sf.b[i] = flip ? S(0) - r.rhs : r.rhs;
    Relation rel = r.rel;
    if (flip && rel == Relation::LessEq) rel = Relation::GreaterEq;
    else if (flip && rel == Relation::GreaterEq) rel = Relation::LessEq;
    if (rel == Relation::LessEq) {
      sf.A[i][next_slack] = S(1);
      sf.slack_col[i] = static_cast<int>(next_slack++);
    } else if (rel == Relation::GreaterEq) {
      sf.A[i][next_slack] = S(0) - S(1);
      sf.slack_col[i] = static_cast<int>(next_slack++);
    }
  }
  return sf;
}

// Full-tableau simplex over columns [0, n_active); row layout:
// rows 0..m-1 constraints with rhs in the last column, row m the reduced
// cost row with the negated objective in its rhs cell.
template <class S>
class Tableau {
 public:
  using Ops = ScalarOps<S>;

  Tableau(std::vector<std::vector<S>> tab, std::vector<int> basis, size_t n_active)
      : t_(std::move(tab)), basis_(std::move(basis)), n_active_(n_active) {}

  size_t rows() const { return t_.size() - 1; }
  const std::vector<int>& basis() const { return basis_; }
  std::vector<std::vector<S>>& data() { return t_; }
  size_t n_active() const { return n_active_; }
  void set_n_active(size_t n) { n_active_ = n; }

  const S& rhs(size_t i) const { return t_[i].back(); }
  const S& objective_cell() const { return t_.back().back(); }

  // Builds the reduced-cost row for the given costs from scratch.
  void load_costs(const std::vector<S>& c) {
    auto& z = t_.back();
    std::fill(z.begin(), z.end(), S(0));
    for (size_t j = 0; j < c.size(); ++j) z[j] = c[j];
    for (size_t i = 0; i < rows(); ++i) {
      int bj = basis_[i];
      if (bj >= 0 && bj < static_cast<int>(c.size()) && Ops::nonzero(c[bj])) {
        S f = c[bj];
        for (size_t j = 0; j < t_[i].size(); ++j) z[j] -= f * t_[i][j];
      }
    }
  }

  enum class Result { Optimal, Unbounded };

  Result optimize() {
    const size_t cap = Ops::iteration_cap(rows(), n_active_);
    for (size_t iter = 0;; ++iter) {
      if (iter > cap) {
        if constexpr (Ops::bland)
          throw Error("exact simplex exceeded iteration cap");  // unreachable with Bland
        else
          throw NumericalBreakdown("simplex iteration cap exceeded");
      }
      int enter = pick_entering();
      if (enter < 0) return Result::Optimal;
      int leave = pick_leaving(enter);
      if (leave == -1) return Result::Unbounded;
      if (leave == -2) throw NumericalBreakdown("no usable pivot above threshold");
      pivot(static_cast<size_t>(leave), static_cast<size_t>(enter));
    }
  }

  void pivot(size_t r, size_t c) {
    auto& pr = t_[r];
    S inv = S(1) / pr[c];
    for (auto& x : pr) x *= inv;
    pr[c] = S(1);
    for (size_t i = 0; i < t_.size(); ++i) {
      if (i == r) continue;
      S f = t_[i][c];
      if (f == S(0)) continue;
      for (size_t j = 0; j < t_[i].size(); ++j) t_[i][j] -= f * pr[j];
      t_[i][c] = S(0);
    }
    basis_[r] = static_cast<int>(c);
  }

 private:
  int pick_entering() const {
    const auto& z = t_.back();
    if constexpr (Ops::bland) {
      for (size_t j = 0; j < n_active_; ++j)
        if (Ops::neg_cost(z[j])) return static_cast<int>(j);
      return -1;
    } else {
      int best = -1;
      S best_val = S(0);
      for (size_t j = 0; j < n_active_; ++j) {
        if (Ops::neg_cost(z[j]) && z[j] < best_val) {
          best_val = z[j];
          best = static_cast<int>(j);
        }
      }
      return best;
    }
  }

  // -1: unbounded; -2: breakdown (float only).
  int pick_leaving(int enter) const {
    int best = -1;
    bool saw_tiny_positive = false;
    for (size_t i = 0; i < rows(); ++i) {
      const S& a = t_[i][static_cast<size_t>(enter)];
      if (!Ops::pos_pivot(a)) {
        if constexpr (!Ops::bland) {
          if (a > 0) saw_tiny_positive = true;
        }
        continue;
      }
      if (best < 0) {
        best = static_cast<int>(i);
        continue;
      }
      const S& ab = t_[static_cast<size_t>(best)][static_cast<size_t>(enter)];
      // ratio(i) vs ratio(best): rhs(i)/a vs rhs(best)/ab, both positive pivots
      S lhs = rhs(i) * ab;
      S rhs_v = rhs(static_cast<size_t>(best)) * a;
      if (lhs < rhs_v || (lhs == rhs_v && basis_[i] < basis_[static_cast<size_t>(best)]))
        best = static_cast<int>(i);
    }
    if (best < 0) return saw_tiny_positive ? -2 : -1;
    return best;
  }

  std::vector<std::vector<S>> t_;
  std::vector<int> basis_;
  size_t n_active_;
};

}  // namespace detail

template <class S>
Solution<S> simplex_solve(const Problem<S>& p) {
  using Ops = detail::ScalarOps<S>;
  auto sf = detail::build_standard(p);
  const size_t m = sf.A.size();
  const size_t n_cols = sf.n_cols;

  // Identity start: slack columns where possible, artificials elsewhere.
  size_t n_art = 0;
  std::vector<int> art_col(m, -1);
  for (size_t i = 0; i < m; ++i) {
    bool slack_ok = sf.slack_col[i] >= 0 && sf.A[i][static_cast<size_t>(sf.slack_col[i])] == S(1);
    if (!slack_ok) art_col[i] = static_cast<int>(n_cols + n_art++);
  }

  const size_t total = n_cols + n_art;
  std::vector<std::vector<S>> tab(m + 1, std::vector<S>(total + 1, S(0)));
  std::vector<int> basis(m, -1);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n_cols; ++j) tab[i][j] = sf.A[i][j];
    tab[i][total] = sf.b[i];
    if (art_col[i] >= 0) {
      tab[i][static_cast<size_t>(art_col[i])] = S(1);
      basis[i] = art_col[i];
    } else {
      basis[i] = sf.slack_col[i];
    }
  }

  detail::Tableau<S> T(std::move(tab), basis, total);
  std::vector<int> active_rows(m);
  for (size_t i = 0; i < m; ++i) active_rows[i] = static_cast<int>(i);

  Solution<S> sol;

  if (n_art > 0) {
    std::vector<S> c1(total, S(0));
    for (size_t j = n_cols; j < total; ++j) c1[j] = S(1);
    T.load_costs(c1);
    T.optimize();  // bounded below by 0, never unbounded
    S p1 = S(0) - T.objective_cell();
    if (Ops::phase1_positive(p1)) {
      sol.status = Status::Infeasible;
      return sol;
    }
    // Pivot remaining artificials out; a row with no eligible pivot is a
    // redundant constraint and is dropped.
    for (size_t i = T.rows(); i-- > 0;) {
      int bi = T.basis()[i];
      if (bi < static_cast<int>(n_cols)) continue;
      int col = -1;
      for (size_t j = 0; j < n_cols; ++j) {
        if (Ops::nonzero(T.data()[i][j])) {
          col = static_cast<int>(j);
          break;
        }
      }
      if (col >= 0) {
        T.pivot(i, static_cast<size_t>(col));
      } else {
        T.data().erase(T.data().begin() + static_cast<long>(i));
        auto b2 = T.basis();
        b2.erase(b2.begin() + static_cast<long>(i));
        active_rows.erase(active_rows.begin() + static_cast<long>(i));
        T = detail::Tableau<S>(std::move(T.data()), std::move(b2), total);
      }
    }
    T.set_n_active(n_cols);  // artificial columns retired
  }

  T.load_costs(sf.c);
  if (T.optimize() == detail::Tableau<S>::Result::Unbounded) {
    sol.status = Status::Unbounded;
    return sol;
  }

  sol.status = Status::Optimal;
  sol.values.assign(p.num_vars(), S(0));
  for (size_t i = 0; i < T.rows(); ++i) {
    int bj = T.basis()[i];
    if (bj >= 0 && bj < static_cast<int>(p.num_vars())) sol.values[static_cast<size_t>(bj)] = T.rhs(i);
  }
  S internal_obj = S(0) - T.objective_cell();
  sol.objective = (p.sense == Sense::Minimize) ? internal_obj : S(0) - internal_obj;
  sol.basis = T.basis();
  sol.active_rows = std::move(active_rows);
  return sol;
}

namespace detail {

// Dense exact/tolerant solve of M y = rhs used only for the dual extraction.
template <class S>
std::vector<S> solve_square(std::vector<std::vector<S>> M, std::vector<S> rhs) {
  const size_t n = M.size();
  std::vector<S> x(n, S(0));
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    if constexpr (ScalarOps<S>::bland) {
      while (piv < n && !ScalarOps<S>::nonzero(M[piv][k])) ++piv;
      if (piv == n) throw SingularMatrix("degenerate basis matrix");
    } else {
      for (size_t i = k + 1; i < n; ++i)
        if (std::abs(M[i][k]) > std::abs(M[piv][k])) piv = i;
      if (!ScalarOps<S>::nonzero(M[piv][k])) throw SingularMatrix("degenerate basis matrix");
    }
    std::swap(M[piv], M[k]);
    std::swap(rhs[piv], rhs[k]);
    for (size_t i = k + 1; i < n; ++i) {
      if (M[i][k] == S(0)) continue;
      S f = M[i][k] / M[k][k];
      for (size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  for (size_t i = n; i-- > 0;) {
    S acc = rhs[i];
    for (size_t j = i + 1; j < n; ++j) acc -= M[i][j] * x[j];
    x[i] = acc / M[i][i];
  }
  return x;
}

}  // namespace detail

// Certifies optimality: primal feasibility of the stored values plus a dual
// solution extracted from the final basis (reduced costs nonnegative and
// matching objectives, i.e. complementary slackness in aggregate).
template <class S>
bool check_optimality(const Problem<S>& p, const Solution<S>& sol) {
  using Ops = detail::ScalarOps<S>;
  if (sol.status != Status::Optimal) throw DomainError("check_optimality: solution not Optimal");
  if (sol.values.size() != p.num_vars()) return false;

  for (const auto& v : sol.values)
    if (!Ops::feas_le(S(0), v)) return false;
  for (const auto& r : p.rows) {
    S lhs = S(0);
    for (size_t j = 0; j < r.coeffs.size(); ++j) lhs += r.coeffs[j] * sol.values[j];
    switch (r.rel) {
      case Relation::LessEq:
        if (!Ops::feas_le(lhs, r.rhs)) return false;
        break;
      case Relation::GreaterEq:
        if (!Ops::feas_le(r.rhs, lhs)) return false;
        break;
      case Relation::Eq:
        if (!Ops::feas_eq(lhs, r.rhs)) return false;
        break;
    }
  }
  S user_obj = S(0);
  for (size_t j = 0; j < p.num_vars(); ++j) user_obj += p.costs[j] * sol.values[j];
  if (!Ops::feas_eq(user_obj, sol.objective)) return false;

  auto sf = detail::build_standard(p);
  const size_t mm = sol.basis.size();
  if (sol.active_rows.size() != mm) return false;
  for (int bj : sol.basis)
    if (bj < 0 || bj >= static_cast<int>(sf.n_cols)) return false;

  // Solve B^T y = c_B, then require reduced costs c_j - y.A_j >= 0 and
  // y.b equal to the optimum.
  std::vector<std::vector<S>> Bt(mm, std::vector<S>(mm, S(0)));
  std::vector<S> cb(mm, S(0));
  for (size_t k = 0; k < mm; ++k) {
    size_t col = static_cast<size_t>(sol.basis[k]);
    for (size_t i = 0; i < mm; ++i)
      Bt[k][i] = sf.A[static_cast<size_t>(sol.active_rows[i])][col];
    cb[k] = sf.c[col];
  }
  std::vector<S> y;
  try {
    y = detail::solve_square(std::move(Bt), std::move(cb));
  } catch (const SingularMatrix&) {
    return false;
  }
  for (size_t j = 0; j < sf.n_cols; ++j) {
    S red = sf.c[j];
    for (size_t i = 0; i < mm; ++i)
      red -= y[i] * sf.A[static_cast<size_t>(sol.active_rows[i])][j];
    if (!Ops::dual_feasible(red)) return false;
  }
  S dual_obj = S(0);
  for (size_t i = 0; i < mm; ++i) dual_obj += y[i] * sf.b[static_cast<size_t>(sol.active_rows[i])];
  S internal_obj = (p.sense == Sense::Minimize) ? sol.objective : S(0) - sol.objective;
  return Ops::feas_eq(dual_obj, internal_obj);
}

// Exact solve that keeps the working tableau small: a float presolve ranks
// rows by slack, the exact simplex runs on the likely-active subset, and
// exact re-substitution over every remaining row either certifies the
// solution (feasible for the full LP at the subset's optimum, hence
// optimal) or grows the subset. Falls back to the plain exact solve when
// the float pass breaks down.
Solution<Rational> solve_active_set(const Problem<Rational>& p);

// Float copy of an exact problem (for cross-mode comparisons). Rows are
// scaled to unit max magnitude so the float pivot thresholds stay
// meaningful for badly scaled inputs; solutions and objective values are
// unaffected.
inline Problem<double> to_float_problem(const Problem<Rational>& p) {
  Problem<double> q;
  q.sense = (p.sense == Sense::Minimize) ? Sense::Minimize : Sense::Maximize;
  q.costs.reserve(p.costs.size());
  for (const auto& c : p.costs) q.costs.push_back(c.to_double());
  for (const auto& r : p.rows) {
    Row<double> rr;
    rr.rel = r.rel;
    rr.rhs = r.rhs.to_double();
    for (const auto& c : r.coeffs) rr.coeffs.push_back(c.to_double());
    double scale = std::abs(rr.rhs);
    for (double c : rr.coeffs) scale = std::max(scale, std::abs(c));
    if (scale > 0) {
      for (auto& c : rr.coeffs) c /= scale;
      rr.rhs /= scale;
    }
    q.rows.push_back(std::move(rr));
  }
  return q;
}

}  // namespace thetab::lp
