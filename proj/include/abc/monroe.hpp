#pragma once

#include <vector>

#include "abc/flow.hpp"
#include "abc/profile.hpp"
#include "abc/search.hpp"

namespace abc {

struct MonroeAssignment {
  std::vector<int> representative;  // per voter, a member of W
  std::vector<bool> satisfied;
};

struct MonroeScore {
  int score = 0;
  MonroeAssignment assignment;
};

// Optimal balanced assignment via min-cost flow. Voters with the same
// A(i) ∩ W share one node with capacity equal to their multiplicity.
MonroeScore monroe_score(const ElectionInstance& inst, const Committee& w);
int monroe_score_value(const ElectionInstance& inst, const Committee& w);

// The textbook network with one node per voter: source -> member
// [floor(n/k), ceil(n/k)], member -> voter capacity 1 and cost -1 when
// approved, voter -> sink capacity 1. Nodes: 0 source, 1 sink, then members,
// then voters.
FlowNetwork monroe_network(const ElectionInstance& inst, const Committee& w);

bool is_balanced(const ElectionInstance& inst, const Committee& w, const MonroeAssignment& a);

RuleResult monroe_exact(const ElectionInstance& inst, const SearchOptions& opts = {});

struct GreedyMonroeRound {
  int candidate;
  std::vector<int> group;
  int cap;
};

struct GreedyMonroeOutcome {
  RuleResult result;
  std::vector<GreedyMonroeRound> rounds;

  const Committee& committee() const { return result.committees.front(); }
};

GreedyMonroeOutcome greedy_monroe(const ElectionInstance& inst, const TieOrder& tie = {});

}  // namespace abc
