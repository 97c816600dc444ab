#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "abc/profile.hpp"
#include "abc/search.hpp"

namespace abc {

inline constexpr std::uint64_t kBranchAndBoundThreshold = 100'000;

class ThieleWeights {
 public:
  enum class Kind { av, cc, pav, geometric, custom };

  static ThieleWeights av();
  static ThieleWeights cc();
  static ThieleWeights pav();
  static ThieleWeights geometric(Rational p);
  static ThieleWeights custom(std::vector<Rational> marginals);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  // w(x) - w(x-1) for x >= 1. Custom weights throw beyond their list.
  Rational marginal(int x) const;
  Rational cumulative(int x) const;
  std::vector<Rational> marginals(int count) const;
  // True when marginal(x) is defined for all x <= count.
  bool covers(int count) const;

 private:
  ThieleWeights(Kind kind, std::string label, Rational param, std::vector<Rational> marginals);

  Kind kind_;
  std::string label_;
  Rational param_;
  std::vector<Rational> custom_;
};

// kind: "av", "cc", "pav", "geom:<p>", "custom:<w1,w2,...>". The result covers
// at least k marginals.
ThieleWeights make_weights(std::string_view kind, int k);

Rational thiele_score(const ElectionInstance& inst, const Committee& w, const ThieleWeights& weights);

// All maximizers. Switches to branch-and-bound once the clone-reduced search
// space exceeds bnb_threshold.
RuleResult thiele_exact(const ElectionInstance& inst, const ThieleWeights& weights, const SearchOptions& opts = {},
                        std::uint64_t bnb_threshold = kBranchAndBoundThreshold);
RuleResult thiele_branch_and_bound(const ElectionInstance& inst, const ThieleWeights& weights,
                                   const SearchOptions& opts = {});

struct SelectionStep {
  int candidate;
  Rational value;  // marginal gain (seq) or score loss (revseq)
};

struct SequentialOutcome {
  RuleResult result;
  std::vector<SelectionStep> steps;

  const Committee& committee() const { return result.committees.front(); }
};

SequentialOutcome seq_thiele(const ElectionInstance& inst, const ThieleWeights& weights, const TieOrder& tie = {});
// Ties between equally cheap removals drop the candidate ranked last in tie.
SequentialOutcome revseq_thiele(const ElectionInstance& inst, const ThieleWeights& weights,
                                const TieOrder& tie = {});

class ScoringFunction {
 public:
  using Fn = std::function<Rational(int x, int y)>;

  ScoringFunction(std::string label, Fn f);

  static ScoringFunction sav();
  static ScoringFunction thiele(ThieleWeights weights);

  Rational operator()(int x, int y) const { return f_(x, y); }
  const std::string& label() const { return label_; }
  // Throws std::invalid_argument unless f(x, y) >= f(x', y) for x >= x',
  // checked over 0 <= x <= min(y, k), y <= m.
  void validate(int m, int k) const;

 private:
  std::string label_;
  Fn f_;
};

Rational abc_scoring_score(const ElectionInstance& inst, const Committee& w, const ScoringFunction& f);
RuleResult abc_scoring_exact(const ElectionInstance& inst, const ScoringFunction& f, const SearchOptions& opts = {});

}  // namespace abc
