#include "abc/ip_export.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace abc {

int IpModel::add_variable(std::string name, VarKind kind) {
  if (index_of(name) >= 0) throw std::invalid_argument("duplicate variable " + name);
  variables.push_back({std::move(name), kind});
  return static_cast<int>(variables.size()) - 1;
}

int IpModel::index_of(std::string_view name) const {
  for (std::size_t j = 0; j < variables.size(); ++j) {
    if (variables[j].name == name) return static_cast<int>(j);
  }
  return -1;
}

namespace {

Rational sum_terms(const std::vector<IpModel::Term>& terms, const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& t : terms) total += t.coeff * values[t.var];
  return total;
}

}  // namespace

Rational IpModel::objective_value(const std::vector<Rational>& values) const { return sum_terms(objective, values); }

bool IpModel::feasible(const std::vector<Rational>& values) const {
  if (values.size() != variables.size()) return false;
  for (std::size_t j = 0; j < variables.size(); ++j) {
    if (!is_integer(values[j])) return false;
    if (variables[j].kind == VarKind::binary && values[j] != 0 && values[j] != 1) return false;
  }
  for (const auto& con : constraints) {
    Rational lhs = sum_terms(con.terms, values);
    if (con.relation == Relation::less_equal && lhs > con.rhs) return false;
    if (con.relation == Relation::equal && lhs != con.rhs) return false;
    if (con.relation == Relation::greater_equal && lhs < con.rhs) return false;
  }
  return true;
}

IpModel build_ip_model(const ElectionInstance& inst, std::string_view rule) {
  const int n = inst.num_voters();
  const int m = inst.num_candidates();
  const int k = inst.committee_size();
  IpModel model;
  std::vector<int> y(m);
  if (rule == "pav") {
    std::vector<std::vector<int>> x(n, std::vector<int>(k));
    for (int i = 0; i < n; ++i) {
      for (int l = 1; l <= k; ++l) x[i][l - 1] = model.add_variable("x_" + std::to_string(i) + "_" + std::to_string(l));
    }
    for (int c = 0; c < m; ++c) y[c] = model.add_variable("y_" + std::to_string(c));
    model.sense = Sense::maximize;
    for (int i = 0; i < n; ++i) {
      for (int l = 1; l <= k; ++l) model.objective.push_back({make_rational(1, l), x[i][l - 1]});
    }
    IpModel::Constraint size{{}, Relation::equal, k};
    for (int c = 0; c < m; ++c) size.terms.push_back({1, y[c]});
    model.constraints.push_back(std::move(size));
    for (int i = 0; i < n; ++i) {
      IpModel::Constraint link{{}, Relation::equal, 0};
      for (int l = 1; l <= k; ++l) link.terms.push_back({1, x[i][l - 1]});
      for (int c : inst.approval(i)) link.terms.push_back({-1, y[c]});
      model.constraints.push_back(std::move(link));
    }
  } else if (rule == "mav") {
    std::vector<std::vector<int>> d(n, std::vector<int>(m));
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < m; ++c) d[i][c] = model.add_variable("d_" + std::to_string(i) + "_" + std::to_string(c));
    }
    for (int c = 0; c < m; ++c) y[c] = model.add_variable("y_" + std::to_string(c));
    const int big_d = model.add_variable("D", IpModel::VarKind::integer);
    model.sense = Sense::minimize;
    model.objective.push_back({1, big_d});
    IpModel::Constraint size{{}, Relation::equal, k};
    for (int c = 0; c < m; ++c) size.terms.push_back({1, y[c]});
    model.constraints.push_back(std::move(size));
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < m; ++c) {
        if (inst.approves(i, c)) {
          model.constraints.push_back({{{1, d[i][c]}, {1, y[c]}}, Relation::equal, 1});
        } else {
          model.constraints.push_back({{{1, d[i][c]}, {-1, y[c]}}, Relation::equal, 0});
        }
      }
      IpModel::Constraint cap{{}, Relation::less_equal, 0};
      for (int c = 0; c < m; ++c) cap.terms.push_back({1, d[i][c]});
      cap.terms.push_back({-1, big_d});
      model.constraints.push_back(std::move(cap));
    }
  } else {
    throw std::invalid_argument("integer programs exist for pav and mav only");
  }
  return model;
}

namespace {

void render_terms(std::ostringstream& out, const IpModel& model, const std::vector<IpModel::Term>& terms) {
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t) out << " + ";
    out << to_string(terms[t].coeff) << ' ' << model.variables[terms[t].var].name;
  }
}

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::less_equal:
      return "<=";
    case Relation::equal:
      return "=";
    case Relation::greater_equal:
      return ">=";
  }
  return "=";
}

}  // namespace

std::string render_ip(const IpModel& model) {
  std::ostringstream out;
  out << "IP v1\n";
  for (const auto& v : model.variables) {
    out << "var " << v.name << (v.kind == IpModel::VarKind::binary ? " binary" : " integer") << '\n';
  }
  out << (model.sense == Sense::maximize ? "max: " : "min: ");
  render_terms(out, model, model.objective);
  out << '\n';
  for (const auto& con : model.constraints) {
    render_terms(out, model, con.terms);
    out << ' ' << relation_text(con.relation) << ' ' << to_string(con.rhs) << '\n';
  }
  return out.str();
}

namespace {

std::vector<IpModel::Term> parse_terms(const std::vector<std::string>& toks, std::size_t begin, std::size_t end,
                                       const std::map<std::string, int>& names, int line) {
  std::vector<IpModel::Term> terms;
  std::size_t pos = begin;
  while (pos < end) {
    if (!terms.empty()) {
      if (toks[pos] != "+") throw ParseError(line, "expected '+' between terms");
      ++pos;
    }
    Rational coeff;
    try {
      coeff = parse_rational(toks[pos]);
    } catch (const std::invalid_argument&) {
      throw ParseError(line, "bad coefficient '" + toks[pos] + "'");
    }
    if (pos + 1 >= end) throw ParseError(line, "coefficient without variable");
    auto it = names.find(toks[pos + 1]);
    if (it == names.end()) throw ParseError(line, "undeclared variable '" + toks[pos + 1] + "'");
    terms.push_back({coeff, it->second});
    pos += 2;
  }
  return terms;
}

}  // namespace

IpModel parse_ip(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  IpModel model;
  std::map<std::string, int> names;
  bool header = false;
  bool objective = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream words(raw);
    std::vector<std::string> toks;
    std::string tok;
    while (words >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (!header) {
      if (toks != std::vector<std::string>{"IP", "v1"}) throw ParseError(line_no, "missing 'IP v1' header");
      header = true;
      continue;
    }
    if (toks[0] == "var") {
      if (objective) throw ParseError(line_no, "variables must precede the objective");
      if (toks.size() != 3 || (toks[2] != "binary" && toks[2] != "integer")) {
        throw ParseError(line_no, "expected 'var <name> binary|integer'");
      }
      if (names.count(toks[1])) throw ParseError(line_no, "duplicate variable " + toks[1]);
      names[toks[1]] = model.add_variable(toks[1], toks[2] == "binary" ? IpModel::VarKind::binary
                                                                       : IpModel::VarKind::integer);
      continue;
    }
    if (toks[0] == "max:" || toks[0] == "min:") {
      if (objective) throw ParseError(line_no, "second objective");
      model.sense = toks[0] == "max:" ? Sense::maximize : Sense::minimize;
      model.objective = parse_terms(toks, 1, toks.size(), names, line_no);
      objective = true;
      continue;
    }
    if (!objective) throw ParseError(line_no, "constraint before objective");
    if (toks.size() < 2) throw ParseError(line_no, "malformed constraint");
    const std::string& rel = toks[toks.size() - 2];
    Relation relation;
    if (rel == "<=") {
      relation = Relation::less_equal;
    } else if (rel == "=") {
      relation = Relation::equal;
    } else if (rel == ">=") {
      relation = Relation::greater_equal;
    } else {
      throw ParseError(line_no, "expected <=, = or >=");
    }
    Rational rhs;
    try {
      rhs = parse_rational(toks.back());
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "bad right-hand side");
    }
    model.constraints.push_back({parse_terms(toks, 0, toks.size() - 2, names, line_no), relation, rhs});
  }
  if (!header) throw ParseError(line_no, "empty document");
  if (!objective) throw ParseError(line_no, "missing objective");
  return model;
}

std::string export_ip(const ElectionInstance& inst, std::string_view rule) {
  return render_ip(build_ip_model(inst, rule));
}

}  // namespace abc
