#include "abc/lp.hpp"

#include <stdexcept>

namespace abc {

int LinearProgram::add_variable(std::string name, std::optional<Rational> lower, std::optional<Rational> upper) {
  if (lower && upper && *upper < *lower) throw std::invalid_argument("variable upper bound below lower bound");
  variables_.push_back({std::move(name), std::move(lower), std::move(upper)});
  return static_cast<int>(variables_.size()) - 1;
}

void LinearProgram::add_constraint(LinearTerms terms, Relation relation, Rational rhs) {
  for (const auto& [var, coeff] : terms) {
    if (var < 0 || var >= num_variables()) throw std::invalid_argument("constraint references unknown variable");
  }
  constraints_.push_back({std::move(terms), relation, std::move(rhs)});
}

void LinearProgram::set_objective(LinearTerms terms, Sense sense) {
  for (const auto& [var, coeff] : terms) {
    if (var < 0 || var >= num_variables()) throw std::invalid_argument("objective references unknown variable");
  }
  objective_ = std::move(terms);
  sense_ = sense;
}

bool LinearProgram::satisfied_by(const std::vector<Rational>& values) const {
  if (values.size() != variables_.size()) return false;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    if (variables_[j].lower && values[j] < *variables_[j].lower) return false;
    if (variables_[j].upper && values[j] > *variables_[j].upper) return false;
  }
  for (const auto& con : constraints_) {
    Rational lhs = 0;
    for (const auto& [var, coeff] : con.terms) lhs += coeff * values[var];
    switch (con.relation) {
      case Relation::less_equal:
        if (lhs > con.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != con.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < con.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// Original variable x = offset + sum(sign * column).
struct Substitution {
  Rational offset;
  std::vector<std::pair<int, int>> columns;
};

struct Row {
  std::vector<Rational> coeffs;  // structural columns only
  Relation relation;
  Rational rhs;
};

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<int> basis, int cols)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)), cols_(cols), allowed_(cols, true) {}

  // Minimizes cost over the current basis. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost) {
    const std::size_t rows = a_.size();
    std::vector<Rational> reduced(cost);
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (int j = 0; j < cols_; ++j) {
        if (a_[r][j] != 0) reduced[j] -= cb * a_[r][j];
      }
    }
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (allowed_[j] && reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows; ++r) {
        if (a_[r][enter] <= 0) continue;
        Rational ratio = b_[r] / a_[r][enter];
        if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = static_cast<int>(r);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      Rational factor = reduced[enter];
      for (int j = 0; j < cols_; ++j) {
        if (a_[leave][j] != 0) reduced[j] -= factor * a_[leave][j];
      }
    }
  }

  void pivot(int row, int col) {
    Rational inv = 1 / a_[row][col];
    for (int j = 0; j < cols_; ++j) {
      if (a_[row][j] != 0) a_[row][j] *= inv;
    }
    b_[row] *= inv;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (static_cast<int>(r) == row || a_[r][col] == 0) continue;
      Rational factor = a_[r][col];
      for (int j = 0; j < cols_; ++j) {
        if (a_[row][j] != 0) a_[r][j] -= factor * a_[row][j];
      }
      b_[r] -= factor * b_[row];
    }
    basis_[row] = col;
  }

  // After phase one: pivots artificial columns out, drops redundant rows.
  void evict(int first_artificial) {
    for (std::size_t r = 0; r < a_.size();) {
      if (basis_[r] < first_artificial) {
        ++r;
        continue;
      }
      int col = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (a_[r][j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(static_cast<int>(r), col);
        ++r;
      } else {
        a_.erase(a_.begin() + static_cast<long>(r));
        b_.erase(b_.begin() + static_cast<long>(r));
        basis_.erase(basis_.begin() + static_cast<long>(r));
      }
    }
    for (int j = first_artificial; j < cols_; ++j) allowed_[j] = false;
  }

  std::vector<Rational> values() const {
    std::vector<Rational> x(cols_, 0);
    for (std::size_t r = 0; r < a_.size(); ++r) x[basis_[r]] = b_[r];
    return x;
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<int> basis_;
  int cols_;
  std::vector<bool> allowed_;
};

}  // namespace

LpSolution lp_solve(const LinearProgram& lp) {
  const auto& vars = lp.variables();
  std::vector<Substitution> subst(vars.size());
  int structural = 0;
  std::vector<std::pair<int, Rational>> upper_rows;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const auto& v = vars[j];
    if (v.lower) {
      subst[j].offset = *v.lower;
      if (v.upper) upper_rows.push_back({structural, *v.upper - *v.lower});
      subst[j].columns.push_back({structural++, 1});
    } else if (v.upper) {
      subst[j].offset = *v.upper;
      subst[j].columns.push_back({structural++, -1});
    } else {
      subst[j].columns.push_back({structural++, 1});
      subst[j].columns.push_back({structural++, -1});
    }
  }
  std::vector<Row> rows;
  for (auto& [col, bound] : upper_rows) {
    Row row{std::vector<Rational>(structural, 0), Relation::less_equal, bound};
    row.coeffs[col] = 1;
    rows.push_back(std::move(row));
  }
  for (const auto& con : lp.constraints()) {
    Row row{std::vector<Rational>(structural, 0), con.relation, con.rhs};
    for (const auto& [var, coeff] : con.terms) {
      row.rhs -= coeff * subst[var].offset;
      for (auto [col, sign] : subst[var].columns) row.coeffs[col] += sign * coeff;
    }
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (row.rhs < 0) {
      for (auto& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
      if (row.relation == Relation::less_equal) {
        row.relation = Relation::greater_equal;
      } else if (row.relation == Relation::greater_equal) {
        row.relation = Relation::less_equal;
      }
    }
  }

  int slacks = 0;
  int artificials = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::equal) ++slacks;
    if (row.relation != Relation::less_equal) ++artificials;
  }
  const int first_slack = structural;
  const int first_artificial = structural + slacks;
  const int cols = first_artificial + artificials;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<int> basis;
  int next_slack = first_slack;
  int next_artificial = first_artificial;
  for (auto& row : rows) {
    std::vector<Rational> line(cols, 0);
    for (int j = 0; j < structural; ++j) line[j] = row.coeffs[j];
    if (row.relation == Relation::less_equal) {
      line[next_slack] = 1;
      basis.push_back(next_slack++);
    } else {
      if (row.relation == Relation::greater_equal) line[next_slack++] = -1;
      line[next_artificial] = 1;
      basis.push_back(next_artificial++);
    }
    a.push_back(std::move(line));
    b.push_back(row.rhs);
  }

  Tableau tab(std::move(a), std::move(b), std::move(basis), cols);
  LpSolution out;
  if (artificials > 0) {
    std::vector<Rational> phase1(cols, 0);
    for (int j = first_artificial; j < cols; ++j) phase1[j] = 1;
    tab.optimize(phase1);
    auto x = tab.values();
    Rational infeasibility = 0;
    for (int j = first_artificial; j < cols; ++j) infeasibility += x[j];
    if (infeasibility > 0) {
      out.status = LpStatus::infeasible;
      return out;
    }
    tab.evict(first_artificial);
  }

  std::vector<Rational> cost(cols, 0);
  const Rational sign = lp.sense() == Sense::maximize ? -1 : 1;
  for (const auto& [var, coeff] : lp.objective()) {
    for (auto [col, s] : subst[var].columns) cost[col] += sign * s * coeff;
  }
  if (!tab.optimize(cost)) {
    out.status = LpStatus::unbounded;
    return out;
  }
  auto x = tab.values();
  out.status = LpStatus::optimal;
  out.values.resize(vars.size());
  for (std::size_t j = 0; j < vars.size(); ++j) {
    Rational value = subst[j].offset;
    for (auto [col, s] : subst[j].columns) value += s * x[col];
    out.values[j] = value;
  }
  out.objective = 0;
  for (const auto& [var, coeff] : lp.objective()) out.objective += coeff * out.values[var];
  return out;
}

}  // namespace abc
