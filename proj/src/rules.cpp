#include "abc/rules.hpp"

#include <stdexcept>

#include "abc/monroe.hpp"
#include "abc/nonstandard.hpp"
#include "abc/phragmen.hpp"
#include "abc/thiele.hpp"

namespace abc {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

bool is_sequential_rule(std::string_view id) {
  return starts_with(id, "seq-") || starts_with(id, "revseq-") || id == "greedy-monroe" || id == "rule-x";
}

std::vector<std::string> known_rule_ids() {
  return {"av",  "cc",      "pav",    "seq-pav",       "revseq-pav",   "seq-cc",          "geom:<p>", "custom:<w1,...>",
          "sav", "mav",     "lex-mav", "monroe",       "greedy-monroe", "seq-phragmen",   "lexmin-phragmen",
          "rule-x"};
}

RuleResult compute_rule(std::string_view id, const ElectionInstance& inst, const RuleOptions& opts) {
  const int k = inst.committee_size();
  if (id == "sav") return sav_exact(inst, opts.search);
  if (id == "mav") return mav_exact(inst, opts.search);
  if (id == "lex-mav") return lex_mav_exact(inst, opts.search);
  if (id == "monroe") return monroe_exact(inst, opts.search);
  if (id == "greedy-monroe") return greedy_monroe(inst, opts.tie).result;
  if (id == "seq-phragmen") return seq_phragmen(inst, opts.tie).result;
  if (id == "lexmin-phragmen") return lexmin_phragmen(inst, opts.search);
  if (id == "rule-x") return rule_x(inst, opts.tie).result;
  if (starts_with(id, "seq-")) return seq_thiele(inst, make_weights(id.substr(4), k), opts.tie).result;
  if (starts_with(id, "revseq-")) return revseq_thiele(inst, make_weights(id.substr(7), k), opts.tie).result;
  if (id == "av" || id == "cc" || id == "pav" || starts_with(id, "geom:") || starts_with(id, "custom:")) {
    return thiele_exact(inst, make_weights(id, k), opts.search);
  }
  throw std::invalid_argument("unknown rule '" + std::string(id) + "'");
}

Committee compute_resolute(std::string_view id, const ElectionInstance& inst, const RuleOptions& opts) {
  // The representative of a clone pattern is its lexicographically smallest
  // expansion, so the first representative is the first winner overall.
  RuleOptions reduced = opts;
  reduced.search.expand_clones = false;
  return compute_rule(id, inst, reduced).committees.front();
}

}  // namespace abc
