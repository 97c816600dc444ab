#pragma once

#include <vector>

#include "abc/profile.hpp"
#include "abc/search.hpp"

namespace abc {

struct DistanceProfile {
  std::vector<int> distances;    // per voter
  std::vector<int> sorted_desc;  // D_W
};

DistanceProfile distance_profile(const ElectionInstance& inst, const Committee& w);
int mav_score(const ElectionInstance& inst, const Committee& w);

RuleResult mav_exact(const ElectionInstance& inst, const SearchOptions& opts = {});
RuleResult lex_mav_exact(const ElectionInstance& inst, const SearchOptions& opts = {});

// Satisfaction approval voting through the generic scorer.
RuleResult sav_exact(const ElectionInstance& inst, const SearchOptions& opts = {});

}  // namespace abc
