#include "thetab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace thetab::lp {

namespace {

// Original standard-form slack column for each row (n-based numbering).
std::vector<int> slack_columns(const Problem<Rational>& p) {
  std::vector<int> cols(p.rows.size(), -1);
  int next = static_cast<int>(p.num_vars());
  for (size_t i = 0; i < p.rows.size(); ++i)
    if (p.rows[i].rel != Relation::Eq) cols[i] = next++;
  return cols;
}

bool row_satisfied(const Row<Rational>& row, const std::vector<Rational>& x) {
  Rational lhs;
  for (size_t j = 0; j < row.coeffs.size(); ++j) lhs += row.coeffs[j] * x[j];
  switch (row.rel) {
    case Relation::LessEq: return lhs <= row.rhs;
    case Relation::GreaterEq: return lhs >= row.rhs;
    case Relation::Eq: return lhs == row.rhs;
  }
  return false;
}

}  // namespace

Solution<Rational> solve_active_set(const Problem<Rational>& p) {
  p.validate();
  const size_t m = p.rows.size();
  const size_t n = p.num_vars();
  if (m <= 16) return simplex_solve(p);

  // Float presolve ranks rows by relative slack and flags the support of
  // the optimum; equality rows are always active.
  std::vector<double> slack(m, 0.0);
  std::vector<char> col_active(n, 0);
  bool ranked = false;
  try {
    auto fp = to_float_problem(p);
    auto fsol = simplex_solve(fp);
    if (fsol.status == Status::Optimal) {
      for (size_t i = 0; i < m; ++i) {
        double lhs = 0;
        double row_scale = std::abs(p.rows[i].rhs.to_double());
        for (size_t j = 0; j < n; ++j) {
          double c = p.rows[i].coeffs[j].to_double();
          lhs += c * fsol.values[j];
          row_scale = std::max(row_scale, std::abs(c));
        }
        slack[i] = std::abs(lhs - p.rows[i].rhs.to_double()) / std::max(1.0, row_scale);
      }
      double xmax = 0.0;
      for (double v : fsol.values) xmax = std::max(xmax, std::abs(v));
      for (size_t j = 0; j < n; ++j)
        if (std::abs(fsol.values[j]) > 1e-12 * std::max(1.0, xmax)) col_active[j] = 1;
      // Float duals flag near-degenerate columns (tiny reduced cost) that
      // the exact solve is likely to need.
      try {
        auto sf = detail::build_standard(fp);
        const size_t mm = fsol.basis.size();
        std::vector<std::vector<double>> Bt(mm, std::vector<double>(mm, 0.0));
        std::vector<double> cb(mm, 0.0);
        for (size_t k = 0; k < mm; ++k) {
          size_t col = static_cast<size_t>(fsol.basis[k]);
          for (size_t i = 0; i < mm; ++i)
            Bt[k][i] = sf.A[static_cast<size_t>(fsol.active_rows[i])][col];
          cb[k] = sf.c[col];
        }
        std::vector<double> y = detail::solve_square(std::move(Bt), std::move(cb));
        for (size_t j = 0; j < n; ++j) {
          if (col_active[j]) continue;
          double red = sf.c[j];
          double scale = std::abs(sf.c[j]);
          for (size_t i = 0; i < mm; ++i) {
            double a = sf.A[static_cast<size_t>(fsol.active_rows[i])][j];
            red -= y[i] * a;
            scale = std::max(scale, std::abs(y[i] * a));
          }
          if (red < 1e-7 * std::max(1.0, scale)) col_active[j] = 1;
        }
      } catch (const SingularMatrix&) {
      }
      ranked = true;
    }
  } catch (const NumericalBreakdown&) {
  }
  if (!ranked) return simplex_solve(p);

  std::vector<size_t> order(m);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return slack[a] < slack[b]; });

  std::vector<char> row_active(m, 0);
  size_t rows_on = 0;
  auto activate_row = [&](size_t i) {
    if (!row_active[i]) {
      row_active[i] = 1;
      ++rows_on;
    }
  };
  size_t cols_on = 0;
  auto activate_col = [&](size_t j) {
    if (!col_active[j]) col_active[j] = 1;
  };
  size_t binding = 0;
  for (size_t i = 0; i < m; ++i) {
    if (p.rows[i].rel == Relation::Eq) activate_row(i);
    if (slack[i] <= 1e-6) ++binding;
  }
  size_t want = std::min(m, std::max<size_t>(binding + 4, 8));
  for (size_t r = 0; r < m && rows_on < want; ++r) activate_row(order[r]);
  for (char c : col_active) cols_on += static_cast<size_t>(c);
  if (cols_on == 0) col_active[0] = 1;

  const auto orig_slack = slack_columns(p);

  for (size_t round = 0; round <= m + n; ++round) {
    std::vector<int> rows_used;
    std::vector<int> cols_used;
    for (size_t j = 0; j < n; ++j)
      if (col_active[j]) cols_used.push_back(static_cast<int>(j));
    Problem<Rational> sub;
    sub.sense = p.sense;
    for (int j : cols_used) sub.costs.push_back(p.costs[static_cast<size_t>(j)]);
    for (size_t i = 0; i < m; ++i) {
      if (!row_active[i]) continue;
      Row<Rational> r;
      r.rel = p.rows[i].rel;
      r.rhs = p.rows[i].rhs;
      for (int j : cols_used) r.coeffs.push_back(p.rows[i].coeffs[static_cast<size_t>(j)]);
      sub.rows.push_back(std::move(r));
      rows_used.push_back(static_cast<int>(i));
    }

    auto sol = simplex_solve(sub);
    if (sol.status == Status::Infeasible) {
      // A column-restricted LP can be infeasible while the full one is
      // not; only a full-column subset is conclusive (fewer rows never
      // help feasibility).
      if (cols_used.size() == n) return sol;
      for (size_t j = 0; j < n; ++j) activate_col(j);
      continue;
    }
    if (sol.status == Status::Unbounded) {
      if (rows_on == m) return sol;
      for (size_t i = 0; i < m; ++i) activate_row(i);
      continue;
    }

    // Exact full-row feasibility of the padded solution.
    std::vector<Rational> full_x(n, Rational(0));
    for (size_t jj = 0; jj < cols_used.size(); ++jj)
      full_x[static_cast<size_t>(cols_used[jj])] = sol.values[jj];
    bool grew = false;
    for (size_t i = 0; i < m; ++i) {
      if (row_active[i]) continue;
      if (!row_satisfied(p.rows[i], full_x)) {
        activate_row(i);
        grew = true;
      }
    }
    if (grew) continue;

    // Exact pricing of the inactive columns: dual y from the final basis
    // of the sub-LP, then reduced costs against the full coefficient
    // matrix. Negative reduced cost means the column was dropped wrongly.
    if (cols_used.size() < n) {
      auto sf = detail::build_standard(sub);
      const size_t mm = sol.basis.size();
      std::vector<std::vector<Rational>> Bt(mm, std::vector<Rational>(mm, Rational(0)));
      std::vector<Rational> cb(mm, Rational(0));
      for (size_t k = 0; k < mm; ++k) {
        size_t col = static_cast<size_t>(sol.basis[k]);
        for (size_t i = 0; i < mm; ++i)
          Bt[k][i] = sf.A[static_cast<size_t>(sol.active_rows[i])][col];
        cb[k] = sf.c[col];
      }
      std::vector<Rational> y;
      try {
        y = detail::solve_square(std::move(Bt), std::move(cb));
      } catch (const SingularMatrix&) {
        for (size_t j = 0; j < n; ++j) activate_col(j);
        continue;
      }
      bool priced_in = false;
      for (size_t j = 0; j < n; ++j) {
        if (col_active[j]) continue;
        Rational red = (p.sense == Sense::Minimize) ? p.costs[j] : -p.costs[j];
        for (size_t i = 0; i < mm; ++i) {
          size_t sub_row = static_cast<size_t>(sol.active_rows[i]);
          size_t full_row = static_cast<size_t>(rows_used[sub_row]);
          Rational a = p.rows[full_row].coeffs[j];
          if (sub.rows[sub_row].rhs < Rational(0)) a = -a;  // same flip as build_standard
          red -= y[i] * a;
        }
        if (red.sign() < 0) {
          activate_col(j);
          priced_in = true;
        }
      }
      if (priced_in) continue;
    }

    // Optimal for the subset, feasible everywhere, no improving column:
    // optimal for the full LP. Remap everything to full numbering.
    Solution<Rational> out;
    out.status = Status::Optimal;
    out.objective = sol.objective;
    out.values = std::move(full_x);
    const auto sub_slack = slack_columns(sub);
    out.basis = sol.basis;
    for (auto& col : out.basis) {
      if (col < static_cast<int>(cols_used.size())) {
        col = cols_used[static_cast<size_t>(col)];
      } else {
        size_t sub_row = 0;
        while (sub_row < sub.rows.size() && sub_slack[sub_row] != col) ++sub_row;
        col = orig_slack[static_cast<size_t>(rows_used[sub_row])];
      }
    }
    out.active_rows = sol.active_rows;
    for (auto& r : out.active_rows) r = rows_used[static_cast<size_t>(r)];
    return out;
  }
  throw Error("active-set refinement failed to settle");  // unreachable
}

}  // namespace thetab::lp
