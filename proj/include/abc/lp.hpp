#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abc/rational.hpp"

namespace abc {

enum class Relation { less_equal, equal, greater_equal };
enum class Sense { maximize, minimize };
enum class LpStatus { optimal, infeasible, unbounded };

using LinearTerms = std::vector<std::pair<int, Rational>>;

struct LpVariable {
  std::string name;
  std::optional<Rational> lower;  // nullopt = unbounded below
  std::optional<Rational> upper;
};

struct LpConstraint {
  LinearTerms terms;
  Relation relation;
  Rational rhs;
};

class LinearProgram {
 public:
  int add_variable(std::string name, std::optional<Rational> lower = Rational(0),
                   std::optional<Rational> upper = std::nullopt);
  void add_constraint(LinearTerms terms, Relation relation, Rational rhs);
  void set_objective(LinearTerms terms, Sense sense);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  const std::vector<LpVariable>& variables() const { return variables_; }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }
  const LinearTerms& objective() const { return objective_; }
  Sense sense() const { return sense_; }

  // Exact check of one assignment against bounds and constraints.
  bool satisfied_by(const std::vector<Rational>& values) const;

 private:
  std::vector<LpVariable> variables_;
  std::vector<LpConstraint> constraints_;
  LinearTerms objective_;
  Sense sense_ = Sense::minimize;
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  std::vector<Rational> values;
};

// Two-phase dense tableau simplex over exact rationals, Bland's rule.
LpSolution lp_solve(const LinearProgram& lp);

}  // namespace abc
