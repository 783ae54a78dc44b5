// Copyright 2026 The Dressian Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dressian/lp.hpp"

#include "dressian/errors.hpp"

namespace dressian::lp {
namespace {

// Row-major simplex tableau. Rows [0, m) are constraints, row m holds the
// reduced costs; the last column is the right-hand side.
class Tableau {
 public:
  Tableau(std::vector<RationalVector> rows, std::size_t num_cols)
      : rows_(std::move(rows)), cols_(num_cols) {}

  std::size_t m() const { return rows_.size() - 1; }
  RationalVector& cost() { return rows_.back(); }
  const Rational& rhs(std::size_t r) const { return rows_[r][cols_]; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::vector<RationalVector>& rows() { return rows_; }

  void pivot(std::size_t r, std::size_t c) {
    RationalVector& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j : nz) rows_[i][j] -= f * prow[j];
    }
    basis_[r] = c;
  }

  // Bland's rule iterations; returns false when the objective is unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && cost()[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = m();
      for (std::size_t i = 0; i < m(); ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        if (leave == m()) {
          leave = i;
          continue;
        }
        // rhs_i / a  vs  rhs_leave / a_leave
        const Rational lhs = rhs(i) * rows_[leave][enter];
        const Rational rhs_cmp = rhs(leave) * a;
        if (lhs < rhs_cmp || (lhs == rhs_cmp && basis_[i] < basis_[leave])) {
          leave = i;
        }
      }
      if (leave == m()) return false;
      pivot(leave, enter);
    }
  }

  void erase_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<RationalVector> rows_;
  std::size_t cols_;
  std::vector<std::size_t> basis_;
};

}  // namespace

void LinearProgram::add(RationalVector coeffs, Relation relation,
                        Rational rhs) {
  if (coeffs.size() != num_vars_) {
    throw ParameterError("constraint length does not match variable count");
  }
  constraints_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearProgram::minimize(RationalVector objective) {
  if (objective.size() != num_vars_) {
    throw ParameterError("objective length does not match variable count");
  }
  objective_ = std::move(objective);
  maximize_ = false;
}

void LinearProgram::maximize(RationalVector objective) {
  minimize(std::move(objective));
  maximize_ = true;
}

Solution LinearProgram::solve() const {
  // Column layout: structural columns (free variables split in two), then
  // one slack per inequality, then one artificial per row.
  std::vector<std::size_t> pos_col(num_vars_), neg_col(num_vars_);
  std::size_t ncols = 0;
  for (std::size_t v = 0; v < num_vars_; ++v) {
    pos_col[v] = ncols++;
    neg_col[v] = nonneg_[v] ? SIZE_MAX : ncols++;
  }
  const std::size_t m = constraints_.size();
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    if (constraints_[i].relation != Relation::kEqual) slack_col[i] = ncols++;
  }
  const std::size_t first_artificial = ncols;
  ncols += m;

  std::vector<RationalVector> rows(m + 1, RationalVector(ncols + 1));
  for (std::size_t i = 0; i < m; ++i) {
    const Constraint& con = constraints_[i];
    RationalVector& row = rows[i];
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (con.coeffs[v] == 0) continue;
      row[pos_col[v]] = con.coeffs[v];
      if (neg_col[v] != SIZE_MAX) row[neg_col[v]] = -con.coeffs[v];
    }
    if (con.relation == Relation::kLessEqual) row[slack_col[i]] = 1;
    if (con.relation == Relation::kGreaterEqual) row[slack_col[i]] = -1;
    row[ncols] = con.rhs;
    if (con.rhs < 0) {
      for (auto& x : row) x = -x;
    }
    row[first_artificial + i] = 1;
  }
  // Phase one cost: sum of artificials, expressed in nonbasic terms.
  RationalVector& cost = rows[m];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < first_artificial; ++j) cost[j] -= rows[i][j];
    cost[ncols] -= rows[i][ncols];
  }

  Tableau tab(std::move(rows), ncols);
  tab.basis().resize(m);
  for (std::size_t i = 0; i < m; ++i) tab.basis()[i] = first_artificial + i;

  std::vector<bool> allowed(ncols, true);
  tab.optimize(allowed);
  Solution sol;
  if (tab.cost()[ncols] != 0) {
    sol.status = Status::kInfeasible;
    return sol;
  }
  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < tab.m();) {
    if (tab.basis()[r] < first_artificial) {
      ++r;
      continue;
    }
    std::size_t c = 0;
    while (c < first_artificial && tab.rows()[r][c] == 0) ++c;
    if (c == first_artificial) {
      tab.erase_row(r);
    } else {
      tab.pivot(r, c);
      ++r;
    }
  }
  for (std::size_t j = first_artificial; j < ncols; ++j) allowed[j] = false;

  // Phase two cost row.
  RationalVector col_cost(ncols);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    const Rational c = maximize_ ? Rational(-objective_[v]) : objective_[v];
    col_cost[pos_col[v]] = c;
    if (neg_col[v] != SIZE_MAX) col_cost[neg_col[v]] = -c;
  }
  RationalVector& phase2 = tab.cost();
  for (std::size_t j = 0; j <= ncols; ++j) {
    phase2[j] = j < ncols ? col_cost[j] : Rational(0);
  }
  for (std::size_t r = 0; r < tab.m(); ++r) {
    const Rational cb = col_cost[tab.basis()[r]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= ncols; ++j) {
      if (tab.rows()[r][j] != 0) phase2[j] -= cb * tab.rows()[r][j];
    }
  }
  if (!tab.optimize(allowed)) {
    sol.status = Status::kUnbounded;
    return sol;
  }

  RationalVector y(ncols);
  for (std::size_t r = 0; r < tab.m(); ++r) y[tab.basis()[r]] = tab.rhs(r);
  sol.x.assign(num_vars_, Rational(0));
  for (std::size_t v = 0; v < num_vars_; ++v) {
    sol.x[v] = y[pos_col[v]];
    if (neg_col[v] != SIZE_MAX) sol.x[v] -= y[neg_col[v]];
  }
  sol.objective = 0;
  for (std::size_t v = 0; v < num_vars_; ++v) {
    sol.objective += objective_[v] * sol.x[v];
  }
  sol.status = Status::kOptimal;
  return sol;
}

}  // namespace dressian::lp
