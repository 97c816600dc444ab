#include "abc/phragmen.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "abc/flow.hpp"
#include "abc/lp.hpp"

namespace abc {

PhragmenOutcome seq_phragmen_from(const ElectionInstance& inst, const TieOrder& tie, std::vector<int> selected,
                                  std::vector<Rational> loads) {
  tie.validate(inst.num_candidates(), inst.num_voters());
  if (static_cast<int>(loads.size()) != inst.num_voters()) throw std::invalid_argument("one load per voter");
  const int k = inst.committee_size();
  std::vector<bool> chosen(inst.num_candidates(), false);
  for (int c : selected) chosen.at(c) = true;
  const auto order = tie.candidates_in_order(inst.num_candidates());
  PhragmenOutcome out;
  while (static_cast<int>(selected.size()) < k) {
    int pick = -1;
    Rational best;
    for (int c : order) {
      if (chosen[c] || inst.supporters(c).empty()) continue;
      Rational total = 1;
      for (int i : inst.supporters(c)) total += loads[i];
      Rational load = total / static_cast<long>(inst.supporters(c).size());
      if (pick < 0 || load < best) {
        pick = c;
        best = load;
      }
    }
    PhragmenRound round{pick, best, {}};
    if (pick < 0) {
      for (int c : order) {
        if (!chosen[c]) {
          pick = c;
          break;
        }
      }
      round.candidate = pick;
      round.load.reset();
    } else {
      for (int i : inst.supporters(pick)) loads[i] = best;
    }
    chosen[pick] = true;
    selected.push_back(pick);
    round.voter_loads = loads;
    out.result.trace.push_back("round " + std::to_string(selected.size()) + ": " + inst.label(pick) + " load " +
                               (round.load ? to_string(*round.load) : std::string("-")));
    out.rounds.push_back(std::move(round));
  }
  out.result.committees.emplace_back(std::move(selected));
  return out;
}

PhragmenOutcome seq_phragmen(const ElectionInstance& inst, const TieOrder& tie) {
  return seq_phragmen_from(inst, tie, {}, std::vector<Rational>(inst.num_voters(), Rational(0)));
}

namespace {

// Members of W grouped by identical supporter sets.
struct MemberGroups {
  std::vector<std::vector<int>> positions;  // positions in W
  std::vector<Bitset> voters;
};

MemberGroups group_members(const ElectionInstance& inst, const Committee& w) {
  MemberGroups g;
  std::map<Bitset, int> index;
  for (std::size_t p = 0; p < w.size(); ++p) {
    const Bitset& mask = inst.supporter_mask(w.members[p]);
    auto [it, fresh] = index.emplace(mask, static_cast<int>(g.positions.size()));
    if (fresh) {
      g.positions.emplace_back();
      g.voters.push_back(mask);
    }
    g.positions[it->second].push_back(static_cast<int>(p));
  }
  return g;
}

struct Level {
  Rational load;
  std::vector<int> groups;
  Bitset voters;
};

constexpr std::size_t kMaxGroups = 24;

// Peels maximal densest member sets: density |S| / |N_free(S)|.
std::vector<Level> decompose(const ElectionInstance& inst, const Committee& w, const MemberGroups& g) {
  if (g.positions.size() > kMaxGroups) {
    throw CapExceeded("lexmin load decomposition limited to " + std::to_string(kMaxGroups) + " member groups");
  }
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (inst.supporters(w.members[p]).empty()) {
      throw std::invalid_argument("committee member " + inst.label(w.members[p]) + " has no approver");
    }
  }
  std::vector<int> remaining(g.positions.size());
  for (std::size_t j = 0; j < remaining.size(); ++j) remaining[j] = static_cast<int>(j);
  Bitset free_voters(inst.num_voters());
  for (int i = 0; i < inst.num_voters(); ++i) free_voters.set(i);
  std::vector<Level> levels;
  while (!remaining.empty()) {
    const std::size_t r = remaining.size();
    std::optional<Rational> best;
    std::uint64_t best_union = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
      long members = 0;
      Bitset reach(inst.num_voters());
      for (std::size_t b = 0; b < r; ++b) {
        if (mask >> b & 1U) {
          members += static_cast<long>(g.positions[remaining[b]].size());
          reach |= g.voters[remaining[b]];
        }
      }
      reach &= free_voters;
      auto reached = static_cast<long>(reach.count());
      if (reached == 0) throw std::logic_error("member group lost all free approvers");
      Rational density = make_rational(members, reached);
      if (!best || density > *best) {
        best = density;
        best_union = mask;
      } else if (density == *best) {
        best_union |= mask;
      }
    }
    Level level{*best, {}, Bitset(inst.num_voters())};
    std::vector<int> rest;
    for (std::size_t b = 0; b < r; ++b) {
      if (best_union >> b & 1U) {
        level.groups.push_back(remaining[b]);
        level.voters |= g.voters[remaining[b]];
      } else {
        rest.push_back(remaining[b]);
      }
    }
    level.voters &= free_voters;
    free_voters.subtract(level.voters);
    remaining = std::move(rest);
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<Rational> sorted_descending(std::vector<Rational> v) {
  std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return v;
}

}  // namespace

std::vector<Rational> lexmin_load_vector(const ElectionInstance& inst, const Committee& w) {
  auto g = group_members(inst, w);
  auto levels = decompose(inst, w, g);
  std::vector<Rational> out;
  out.reserve(inst.num_voters());
  std::size_t loaded = 0;
  for (const auto& level : levels) {
    std::size_t count = level.voters.count();
    out.insert(out.end(), count, level.load);
    loaded += count;
  }
  out.insert(out.end(), inst.num_voters() - loaded, Rational(0));
  return out;
}

LoadDistribution lexmin_loads(const ElectionInstance& inst, const Committee& w) {
  auto g = group_members(inst, w);
  auto levels = decompose(inst, w, g);
  const int n = inst.num_voters();
  LoadDistribution d;
  d.voter_loads.assign(n, 0);
  d.share.assign(w.size(), std::vector<Rational>(n, 0));
  for (const auto& level : levels) {
    // Scale by the load denominator q: members supply q, voters absorb p.
    const long p = level.load.get_num().get_si();
    const long q = level.load.get_den().get_si();
    std::vector<int> members;
    for (int grp : level.groups) members.insert(members.end(), g.positions[grp].begin(), g.positions[grp].end());
    std::vector<int> voters;
    for (int i = 0; i < n; ++i) {
      if (level.voters.test(i)) voters.push_back(i);
    }
    FlowNetwork net(2 + static_cast<int>(members.size() + voters.size()), 0, 1);
    std::vector<std::vector<std::pair<int, int>>> arcs(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      net.add_arc(0, 2 + static_cast<int>(a), q);
      for (std::size_t b = 0; b < voters.size(); ++b) {
        if (inst.approves(voters[b], w.members[members[a]])) {
          arcs[a].push_back({voters[b], net.add_arc(2 + static_cast<int>(a),
                                                    2 + static_cast<int>(members.size() + b), q)});
        }
      }
    }
    for (std::size_t b = 0; b < voters.size(); ++b) {
      net.add_arc(2 + static_cast<int>(members.size() + b), 1, p, 0, p);
    }
    auto flow = min_cost_flow(net, q * static_cast<long>(members.size()));
    if (!flow.feasible) throw std::logic_error("densest level admits no balanced split");
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (auto [voter, arc] : arcs[a]) {
        if (flow.flow[arc] == 0) continue;
        Rational part = make_rational(flow.flow[arc], q);
        d.share[members[a]][voter] = part;
        d.voter_loads[voter] += part;
      }
    }
  }
  d.sorted_desc = sorted_descending(d.voter_loads);
  return d;
}

namespace {

struct LoadLp {
  LinearProgram lp;
  int t = -1;
  std::vector<std::vector<std::pair<int, int>>> by_voter;  // (position, variable)
  std::vector<std::vector<int>> by_member;
};

LoadLp build_load_lp(const ElectionInstance& inst, const Committee& w) {
  LoadLp m;
  m.by_voter.assign(inst.num_voters(), {});
  m.by_member.assign(w.size(), {});
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (int i : inst.supporters(w.members[p])) {
      int var = m.lp.add_variable("l_" + std::to_string(p) + "_" + std::to_string(i));
      m.by_voter[i].push_back({static_cast<int>(p), var});
      m.by_member[p].push_back(var);
    }
    LinearTerms terms;
    for (int var : m.by_member[p]) terms.push_back({var, 1});
    m.lp.add_constraint(std::move(terms), Relation::equal, 1);
  }
  m.t = m.lp.add_variable("t", std::nullopt);
  return m;
}

LinearTerms voter_terms(const LoadLp& m, int voter) {
  LinearTerms terms;
  for (auto [pos, var] : m.by_voter[voter]) terms.push_back({var, 1});
  return terms;
}

}  // namespace

LoadDistribution lexmin_loads_lp(const ElectionInstance& inst, const Committee& w) {
  for (int c : w.members) {
    if (inst.supporters(c).empty()) throw std::invalid_argument("committee member " + inst.label(c) + " has no approver");
  }
  const int n = inst.num_voters();
  std::vector<std::optional<Rational>> fixed(n);
  LoadLp base = build_load_lp(inst, w);
  for (int i = 0; i < n; ++i) {
    if (base.by_voter[i].empty()) fixed[i] = Rational(0);
  }
  std::vector<Rational> last_values;
  while (std::any_of(fixed.begin(), fixed.end(), [](const auto& f) { return !f; })) {
    LoadLp round = base;
    for (int i = 0; i < n; ++i) {
      auto terms = voter_terms(round, i);
      if (fixed[i]) {
        round.lp.add_constraint(std::move(terms), Relation::equal, *fixed[i]);
      } else {
        terms.push_back({round.t, -1});
        round.lp.add_constraint(std::move(terms), Relation::less_equal, 0);
      }
    }
    round.lp.set_objective({{round.t, 1}}, Sense::minimize);
    auto sol = lp_solve(round.lp);
    if (sol.status != LpStatus::optimal) throw std::logic_error("minimax load LP failed");
    const Rational t = sol.values[round.t];
    last_values = sol.values;
    std::vector<int> pinned;
    for (int j = 0; j < n; ++j) {
      if (fixed[j]) continue;
      LoadLp probe = round;
      probe.lp.add_constraint({{probe.t, 1}}, Relation::equal, t);
      probe.lp.set_objective(voter_terms(probe, j), Sense::minimize);
      auto low = lp_solve(probe.lp);
      if (low.status != LpStatus::optimal) throw std::logic_error("load probe LP failed");
      if (low.objective == t) pinned.push_back(j);
    }
    if (pinned.empty()) throw std::logic_error("no voter pinned at the minimax load");
    for (int j : pinned) fixed[j] = t;
  }
  LoadDistribution d;
  d.voter_loads.assign(n, 0);
  d.share.assign(w.size(), std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) d.voter_loads[i] = *fixed[i];
  if (!last_values.empty()) {
    // Re-solve once with every load fixed to read off a witness.
    LoadLp final_lp = base;
    for (int i = 0; i < n; ++i) final_lp.lp.add_constraint(voter_terms(final_lp, i), Relation::equal, *fixed[i]);
    auto sol = lp_solve(final_lp.lp);
    if (sol.status != LpStatus::optimal) throw std::logic_error("fixed-load LP failed");
    for (int i = 0; i < n; ++i) {
      for (auto [pos, var] : final_lp.by_voter[i]) d.share[pos][i] = sol.values[var];
    }
  }
  d.sorted_desc = sorted_descending(d.voter_loads);
  return d;
}

bool is_valid_distribution(const ElectionInstance& inst, const Committee& w, const LoadDistribution& d) {
  const int n = inst.num_voters();
  if (d.share.size() != w.size() || static_cast<int>(d.voter_loads.size()) != n) return false;
  std::vector<Rational> totals(n, 0);
  for (std::size_t p = 0; p < w.size(); ++p) {
    Rational column = 0;
    for (int i = 0; i < n; ++i) {
      const Rational& x = d.share[p][i];
      if (x < 0) return false;
      if (x != 0 && !inst.approves(i, w.members[p])) return false;
      column += x;
      totals[i] += x;
    }
    if (column != 1) return false;
  }
  return totals == d.voter_loads;
}

namespace {

struct LexminKey {
  int unapproved = 0;
  std::vector<Rational> loads;
};

struct LexminBetter {
  bool operator()(const LexminKey& a, const LexminKey& b) const {
    if (a.unapproved != b.unapproved) return a.unapproved < b.unapproved;
    return a.loads < b.loads;
  }
};

}  // namespace

RuleResult lexmin_phragmen(const ElectionInstance& inst, const SearchOptions& opts) {
  auto eval = [&](const Committee& w) {
    LexminKey key;
    Committee approved;
    for (int c : w.members) {
      if (inst.supporters(c).empty()) {
        ++key.unapproved;
      } else {
        approved.members.push_back(c);
      }
    }
    if (approved.members.empty()) {
      key.loads.assign(inst.num_voters(), 0);
    } else {
      key.loads = lexmin_load_vector(inst, approved);
    }
    return key;
  };
  auto out = search_optimal<LexminKey>(inst, eval, LexminBetter{}, opts);
  RuleResult r;
  r.committees = std::move(out.committees);
  r.score = out.best.loads.empty() ? Rational(0) : out.best.loads.front();
  r.score_name = "max load";
  r.representatives_only = out.representatives_only;
  return r;
}

namespace {

// Smallest rho with sum_i min(rho, budget_i) = 1, if affordable.
std::optional<Rational> water_level(std::vector<Rational> budgets) {
  std::sort(budgets.begin(), budgets.end());
  Rational spent = 0;
  const auto s = static_cast<long>(budgets.size());
  for (long j = 0; j < s; ++j) {
    if (spent + budgets[j] * (s - j) >= 1) {
      Rational rho = (1 - spent) / (s - j);
      return rho;
    }
    spent += budgets[j];
  }
  return std::nullopt;
}

}  // namespace

RuleXOutcome rule_x(const ElectionInstance& inst, const TieOrder& tie) {
  tie.validate(inst.num_candidates(), inst.num_voters());
  const int n = inst.num_voters();
  const int k = inst.committee_size();
  const Rational share = make_rational(k, n);
  std::vector<Rational> budget(n, make_rational(k, n));
  std::vector<bool> chosen(inst.num_candidates(), false);
  std::vector<int> selected;
  const auto order = tie.candidates_in_order(inst.num_candidates());
  RuleXOutcome out;
  while (static_cast<int>(selected.size()) < k) {
    int pick = -1;
    Rational best;
    for (int c : order) {
      if (chosen[c] || inst.supporters(c).empty()) continue;
      std::vector<Rational> pool;
      for (int i : inst.supporters(c)) pool.push_back(budget[i]);
      auto rho = water_level(std::move(pool));
      if (rho && (pick < 0 || *rho < best)) {
        pick = c;
        best = *rho;
      }
    }
    if (pick < 0) break;
    RuleXRound round{pick, best, std::vector<Rational>(n, Rational(0))};
    for (int i : inst.supporters(pick)) {
      round.payments[i] = std::min(best, budget[i]);
      budget[i] -= round.payments[i];
    }
    chosen[pick] = true;
    selected.push_back(pick);
    out.result.trace.push_back("phase 1: " + inst.label(pick) + " rho " + to_string(best));
    out.phase1.push_back(std::move(round));
  }
  out.budgets = budget;
  if (static_cast<int>(selected.size()) < k) {
    std::vector<Rational> loads(n);
    for (int i = 0; i < n; ++i) loads[i] = share - budget[i];
    auto completion = seq_phragmen_from(inst, tie, selected, std::move(loads));
    for (auto& line : completion.result.trace) out.result.trace.push_back("phase 2: " + line);
    out.phase2 = std::move(completion.rounds);
    out.result.committees = std::move(completion.result.committees);
  } else {
    out.result.committees.emplace_back(selected);
  }
  return out;
}

std::optional<PriceSystem> check_priceability(const ElectionInstance& inst, const Committee& w) {
  const int n = inst.num_voters();
  const int m = inst.num_candidates();
  LinearProgram lp;
  const int p = lp.add_variable("p");
  std::vector<std::vector<std::pair<int, int>>> pay(n);  // (candidate, variable)
  for (int c : w.members) {
    if (inst.supporters(c).empty()) return std::nullopt;
    LinearTerms column;
    for (int i : inst.supporters(c)) {
      int var = lp.add_variable("p_" + std::to_string(i) + "_" + std::to_string(c), Rational(0), Rational(1));
      pay[i].push_back({c, var});
      column.push_back({var, 1});
    }
    lp.add_constraint(std::move(column), Relation::equal, 1);
  }
  for (int i = 0; i < n; ++i) {
    LinearTerms spend{{p, -1}};
    for (auto [c, var] : pay[i]) spend.push_back({var, 1});
    lp.add_constraint(std::move(spend), Relation::less_equal, 0);
  }
  for (int c = 0; c < m; ++c) {
    if (w.contains(c) || inst.supporters(c).empty()) continue;
    LinearTerms leftover{{p, static_cast<long>(inst.supporters(c).size())}};
    for (int i : inst.supporters(c)) {
      for (auto [c2, var] : pay[i]) leftover.push_back({var, -1});
    }
    lp.add_constraint(std::move(leftover), Relation::less_equal, 1);
  }
  lp.set_objective({{p, 1}}, Sense::minimize);
  auto sol = lp_solve(lp);
  if (sol.status != LpStatus::optimal) return std::nullopt;
  PriceSystem ps;
  ps.budget = sol.values[p];
  ps.payments.assign(n, std::vector<Rational>(m, 0));
  for (int i = 0; i < n; ++i) {
    for (auto [c, var] : pay[i]) ps.payments[i][c] = sol.values[var];
  }
  return ps;
}

bool verify_price_system(const ElectionInstance& inst, const Committee& w, const PriceSystem& ps) {
  const int n = inst.num_voters();
  const int m = inst.num_candidates();
  if (ps.budget < 0 || static_cast<int>(ps.payments.size()) != n) return false;
  std::vector<Rational> spent(n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(ps.payments[i].size()) != m) return false;
    for (int c = 0; c < m; ++c) {
      const Rational& x = ps.payments[i][c];
      if (x < 0 || x > 1) return false;
      if (x != 0 && !inst.approves(i, c)) return false;
      spent[i] += x;
    }
    if (spent[i] > ps.budget) return false;
  }
  for (int c = 0; c < m; ++c) {
    Rational column = 0;
    for (int i = 0; i < n; ++i) column += ps.payments[i][c];
    if (column != (w.contains(c) ? 1 : 0)) return false;
    if (!w.contains(c)) {
      Rational leftover = 0;
      for (int i : inst.supporters(c)) leftover += ps.budget - spent[i];
      if (leftover > 1) return false;
    }
  }
  return true;
}

}  // namespace abc
