#pragma once

#include <optional>
#include <vector>

#include "abc/profile.hpp"
#include "abc/search.hpp"

namespace abc {

struct PhragmenRound {
  int candidate;
  // Load l_r(c) of the chosen candidate; nullopt when the seat was filled by
  // tie order because no approved candidate was left.
  std::optional<Rational> load;
  std::vector<Rational> voter_loads;  // y_r after the round
};

struct PhragmenOutcome {
  RuleResult result;
  std::vector<PhragmenRound> rounds;

  const Committee& committee() const { return result.committees.front(); }
};

PhragmenOutcome seq_phragmen(const ElectionInstance& inst, const TieOrder& tie = {});

// Continues from a partial committee with the given starting loads.
PhragmenOutcome seq_phragmen_from(const ElectionInstance& inst, const TieOrder& tie, std::vector<int> selected,
                                  std::vector<Rational> loads);

struct LoadDistribution {
  std::vector<Rational> voter_loads;
  std::vector<Rational> sorted_desc;
  std::vector<std::vector<Rational>> share;  // [position in W][voter]
};

// Lexicographically minimal load vector via the densest-subset decomposition,
// with a flow-based witness per level.
LoadDistribution lexmin_loads(const ElectionInstance& inst, const Committee& w);
// Same optimum through repeated minimax linear programs; slower reference.
LoadDistribution lexmin_loads_lp(const ElectionInstance& inst, const Committee& w);
// Sorted load vector only.
std::vector<Rational> lexmin_load_vector(const ElectionInstance& inst, const Committee& w);
bool is_valid_distribution(const ElectionInstance& inst, const Committee& w, const LoadDistribution& d);

// Committees containing a candidate nobody approves rank after all others.
RuleResult lexmin_phragmen(const ElectionInstance& inst, const SearchOptions& opts = {});

struct RuleXRound {
  int candidate;
  Rational rho;
  std::vector<Rational> payments;  // per voter
};

struct RuleXOutcome {
  RuleResult result;
  std::vector<RuleXRound> phase1;
  std::vector<Rational> budgets;  // x(i) when phase one stops
  std::vector<PhragmenRound> phase2;

  const Committee& committee() const { return result.committees.front(); }
};

RuleXOutcome rule_x(const ElectionInstance& inst, const TieOrder& tie = {});

struct PriceSystem {
  Rational budget;
  std::vector<std::vector<Rational>> payments;  // [voter][candidate]
};

// Feasibility of the price-system conditions as an exact LP; the witness
// uses the smallest feasible budget.
std::optional<PriceSystem> check_priceability(const ElectionInstance& inst, const Committee& w);
bool verify_price_system(const ElectionInstance& inst, const Committee& w, const PriceSystem& ps);

}  // namespace abc
