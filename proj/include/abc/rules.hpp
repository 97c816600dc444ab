#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abc/profile.hpp"
#include "abc/search.hpp"

namespace abc {

struct RuleOptions {
  TieOrder tie;
  SearchOptions search;
};

// Rule ids: av, cc, pav, sav, mav, lex-mav, monroe, greedy-monroe,
// seq-phragmen, lexmin-phragmen, rule-x, geom:<p>, custom:<w1,...>, and
// seq-<weights> / revseq-<weights> for any weight kind.
RuleResult compute_rule(std::string_view rule_id, const ElectionInstance& inst, const RuleOptions& opts = {});

// Sequential rules as they are; optimization rules reduced to their
// lexicographically first winner.
Committee compute_resolute(std::string_view rule_id, const ElectionInstance& inst, const RuleOptions& opts = {});

bool is_sequential_rule(std::string_view rule_id);
std::vector<std::string> known_rule_ids();

}  // namespace abc
