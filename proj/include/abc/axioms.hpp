#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "abc/profile.hpp"
#include "abc/rules.hpp"
#include "abc/search.hpp"

namespace abc {

enum class Verdict { satisfied, violated, not_applicable };

// First dominating committee in lexicographic order, if any.
std::optional<Committee> check_pareto_optimal(const ElectionInstance& inst, const Committee& w,
                                              std::uint64_t cap = kDefaultCommitteeCap);

bool check_condorcet_committee(const ElectionInstance& inst, const Committee& w,
                               std::uint64_t cap = kDefaultCommitteeCap);
std::optional<Committee> find_condorcet_committee(const ElectionInstance& inst,
                                                  std::uint64_t cap = kDefaultCommitteeCap);

// A group of voters jointly approving T that the committee under-serves.
struct CohesiveWitness {
  int level = 0;
  std::vector<int> candidates;  // T
  std::vector<int> voters;      // V
};

std::optional<CohesiveWitness> check_jr(const ElectionInstance& inst, const Committee& w);
std::optional<CohesiveWitness> check_pjr(const ElectionInstance& inst, const Committee& w);
std::optional<CohesiveWitness> check_ejr(const ElectionInstance& inst, const Committee& w);

struct ProportionalityLevel {
  int level = 0;
  std::optional<Rational> average;       // nullopt: no cohesive group at this level
  std::optional<CohesiveWitness> group;  // a minimizing group
};

std::vector<ProportionalityLevel> proportionality_degree(const ElectionInstance& inst, const Committee& w);

struct CoreParameters {
  Rational gamma = 1;
  Rational eta = 0;
  Rational beta = 1;
};

struct CoreDeviation {
  std::vector<int> voters;
  std::vector<int> candidates;
  CoreParameters params;
};

// First deviation in (|T|, lexicographic T) order.
std::optional<CoreDeviation> find_core_violation(const ElectionInstance& inst, const Committee& w,
                                                 const CoreParameters& params = {});

struct PRPartition {
  std::vector<std::vector<int>> groups;  // one per member of W
  std::vector<int> candidates;
};

struct PRCheck {
  Verdict verdict = Verdict::not_applicable;
  std::optional<PRPartition> partition;
};

PRCheck check_perfect_representation(const ElectionInstance& inst, const Committee& w);

struct PRSearch {
  Verdict verdict = Verdict::not_applicable;  // satisfied: some committee found
  std::optional<Committee> committee;
};

PRSearch exists_pr_committee(const ElectionInstance& inst, std::uint64_t cap = kDefaultCommitteeCap);

struct Ratios {
  Rational utilitarian;
  Rational representation;
};

// Empty denominators count as ratio 1.
Ratios ratios(const ElectionInstance& inst, const Committee& w, const SearchOptions& opts = {});

struct MonotonicityProbe {
  bool holds = true;
  int breaking_k = 0;  // the larger size of the first broken pair
  std::vector<Committee> chain;
};

MonotonicityProbe probe_committee_monotonicity(std::string_view rule_id, const ElectionInstance& inst, int k_max,
                                               const RuleOptions& opts = {});

Verdict check_disjoint_diversity(const ElectionInstance& inst, const RuleResult& result);
Verdict check_disjoint_equality(const ElectionInstance& inst, const RuleResult& result);

}  // namespace abc
