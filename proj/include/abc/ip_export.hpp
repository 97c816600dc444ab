#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abc/lp.hpp"
#include "abc/profile.hpp"

namespace abc {

struct IpModel {
  enum class VarKind { binary, integer };
  struct Variable {
    std::string name;
    VarKind kind = VarKind::binary;
  };
  struct Term {
    Rational coeff;
    int var;
  };
  struct Constraint {
    std::vector<Term> terms;
    Relation relation;
    Rational rhs;
  };

  std::vector<Variable> variables;
  Sense sense = Sense::maximize;
  std::vector<Term> objective;
  std::vector<Constraint> constraints;

  int add_variable(std::string name, VarKind kind = VarKind::binary);
  int index_of(std::string_view name) const;  // -1 if absent

  Rational objective_value(const std::vector<Rational>& values) const;
  bool feasible(const std::vector<Rational>& values) const;
};

// rule: "pav" or "mav".
IpModel build_ip_model(const ElectionInstance& inst, std::string_view rule);
std::string render_ip(const IpModel& model);
IpModel parse_ip(std::string_view text);
std::string export_ip(const ElectionInstance& inst, std::string_view rule);

}  // namespace abc
