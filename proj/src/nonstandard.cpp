#include "abc/nonstandard.hpp"

#include <algorithm>
#include <functional>

#include "abc/thiele.hpp"

namespace abc {

DistanceProfile distance_profile(const ElectionInstance& inst, const Committee& w) {
  DistanceProfile d;
  d.distances.reserve(inst.num_voters());
  const int k = static_cast<int>(w.size());
  auto overlap = welfare_vector(inst, w);
  for (int i = 0; i < inst.num_voters(); ++i) {
    d.distances.push_back(static_cast<int>(inst.approval(i).size()) + k - 2 * overlap[i]);
  }
  d.sorted_desc = d.distances;
  std::sort(d.sorted_desc.begin(), d.sorted_desc.end(), std::greater<int>());
  return d;
}

int mav_score(const ElectionInstance& inst, const Committee& w) {
  auto d = distance_profile(inst, w);
  return d.sorted_desc.empty() ? 0 : d.sorted_desc.front();
}

RuleResult mav_exact(const ElectionInstance& inst, const SearchOptions& opts) {
  auto eval = [&](const Committee& w) { return mav_score(inst, w); };
  auto out = search_optimal<int>(inst, eval, std::less<int>{}, opts);
  RuleResult r;
  r.committees = std::move(out.committees);
  r.score = Rational(out.best);
  r.score_name = "max distance";
  r.representatives_only = out.representatives_only;
  return r;
}

RuleResult lex_mav_exact(const ElectionInstance& inst, const SearchOptions& opts) {
  auto eval = [&](const Committee& w) { return distance_profile(inst, w).sorted_desc; };
  auto out = search_optimal<std::vector<int>>(inst, eval, std::less<std::vector<int>>{}, opts);
  RuleResult r;
  r.committees = std::move(out.committees);
  r.score = Rational(out.best.empty() ? 0 : out.best.front());
  r.score_name = "max distance";
  r.representatives_only = out.representatives_only;
  return r;
}

RuleResult sav_exact(const ElectionInstance& inst, const SearchOptions& opts) {
  return abc_scoring_exact(inst, ScoringFunction::sav(), opts);
}

}  // namespace abc
