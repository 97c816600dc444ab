#include "abc/thiele.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace abc {

ThieleWeights::ThieleWeights(Kind kind, std::string label, Rational param, std::vector<Rational> marginals)
    : kind_(kind), label_(std::move(label)), param_(std::move(param)), custom_(std::move(marginals)) {}

ThieleWeights ThieleWeights::av() { return {Kind::av, "av", 0, {}}; }
ThieleWeights ThieleWeights::cc() { return {Kind::cc, "cc", 0, {}}; }
ThieleWeights ThieleWeights::pav() { return {Kind::pav, "pav", 0, {}}; }

ThieleWeights ThieleWeights::geometric(Rational p) {
  if (p <= 1) throw std::invalid_argument("geometric weights need p > 1");
  return {Kind::geometric, "geom:" + to_string(p), std::move(p), {}};
}

ThieleWeights ThieleWeights::custom(std::vector<Rational> marginals) {
  std::string label = "custom:";
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    if (marginals[i] < 0) throw std::invalid_argument("custom Thiele marginals must be non-negative");
    label += (i ? "," : "") + to_string(marginals[i]);
  }
  return {Kind::custom, std::move(label), 0, std::move(marginals)};
}

Rational ThieleWeights::marginal(int x) const {
  if (x < 1) throw std::invalid_argument("marginal index starts at 1");
  switch (kind_) {
    case Kind::av:
      return 1;
    case Kind::cc:
      return x == 1 ? 1 : 0;
    case Kind::pav:
      return make_rational(1, x);
    case Kind::geometric: {
      mpz_class den;
      mpz_pow_ui(den.get_mpz_t(), param_.get_num_mpz_t(), static_cast<unsigned long>(x));
      mpz_class num;
      mpz_pow_ui(num.get_mpz_t(), param_.get_den_mpz_t(), static_cast<unsigned long>(x));
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    case Kind::custom:
      if (x > static_cast<int>(custom_.size())) {
        throw std::out_of_range(label_ + " has no marginal for position " + std::to_string(x));
      }
      return custom_[x - 1];
  }
  return 0;
}

Rational ThieleWeights::cumulative(int x) const {
  Rational total = 0;
  for (int t = 1; t <= x; ++t) total += marginal(t);
  return total;
}

std::vector<Rational> ThieleWeights::marginals(int count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (int t = 1; t <= count; ++t) out.push_back(marginal(t));
  return out;
}

bool ThieleWeights::covers(int count) const {
  return kind_ != Kind::custom || count <= static_cast<int>(custom_.size());
}

ThieleWeights make_weights(std::string_view kind, int k) {
  ThieleWeights w = ThieleWeights::av();
  if (kind == "av") {
    w = ThieleWeights::av();
  } else if (kind == "cc") {
    w = ThieleWeights::cc();
  } else if (kind == "pav") {
    w = ThieleWeights::pav();
  } else if (kind.rfind("geom:", 0) == 0) {
    w = ThieleWeights::geometric(parse_rational(kind.substr(5)));
  } else if (kind.rfind("custom:", 0) == 0) {
    std::vector<Rational> marginals;
    std::string body(kind.substr(7));
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) marginals.push_back(parse_rational(tok));
    w = ThieleWeights::custom(std::move(marginals));
  } else {
    throw std::invalid_argument("unknown weight kind '" + std::string(kind) + "'");
  }
  if (!w.covers(k)) throw std::invalid_argument(w.label() + " lists fewer than k marginals");
  return w;
}

namespace {

int max_ballot(const ElectionInstance& inst) {
  int best = 0;
  for (const auto& b : inst.ballots()) best = std::max(best, static_cast<int>(b.size()));
  return best;
}

// Cumulative weights w(0..limit).
std::vector<Rational> cumulative_table(const ThieleWeights& weights, int limit) {
  if (!weights.covers(limit)) throw std::invalid_argument(weights.label() + " lists too few marginals");
  std::vector<Rational> table(limit + 1, 0);
  for (int x = 1; x <= limit; ++x) table[x] = table[x - 1] + weights.marginal(x);
  return table;
}

Rational score_with_table(const ElectionInstance& inst, const Committee& w, const std::vector<Rational>& table) {
  std::vector<int> count(inst.num_voters(), 0);
  for (int c : w.members) {
    for (int i : inst.supporters(c)) ++count[i];
  }
  Rational total = 0;
  for (int x : count) {
    if (x) total += table[x];
  }
  return total;
}

struct Greater {
  bool operator()(const Rational& a, const Rational& b) const { return a > b; }
};

class ThieleBranchAndBound {
 public:
  ThieleBranchAndBound(const ElectionInstance& inst, const ThieleWeights& weights, const SearchOptions& opts)
      : inst_(inst), cc_(clone_classes(inst, opts.merge_clones)), k_(inst.committee_size()) {
    detail::check_space(cc_, k_, opts.cap);
    int limit = std::min(k_, max_ballot(inst));
    if (!weights.covers(limit)) throw std::invalid_argument(weights.label() + " lists too few marginals");
    marginal_.assign(k_ + 2, 0);
    for (int x = 1; x <= limit; ++x) marginal_[x] = weights.marginal(x);
    best_marginal_.assign(k_ + 1, 0);
    for (int x = k_ - 1; x >= 0; --x) best_marginal_[x] = std::max(best_marginal_[x + 1], marginal_[x + 1]);
    voter_count_.assign(inst.num_voters(), 0);
    counts_.assign(cc_.classes.size(), 0);
    order_.resize(cc_.classes.size());
    std::vector<Rational> root_bound(cc_.classes.size());
    for (std::size_t j = 0; j < cc_.classes.size(); ++j) {
      order_[j] = static_cast<int>(j);
      root_bound[j] = bound_of(static_cast<int>(j));
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return root_bound[a] > root_bound[b]; });
    suffix_capacity_.assign(order_.size() + 1, 0);
    for (std::size_t p = order_.size(); p-- > 0;) {
      suffix_capacity_[p] = suffix_capacity_[p + 1] + static_cast<int>(cc_.classes[order_[p]].size());
    }
  }

  detail::Leader<Rational, Greater> run() {
    dfs(0, k_);
    return std::move(leader_);
  }

  const CloneClasses& classes() const { return cc_; }

 private:
  Rational bound_of(int cls) const {
    Rational total = 0;
    for (int i : inst_.supporters(cc_.classes[cls].front())) total += best_marginal_[voter_count_[i]];
    return total;
  }

  void add(int cls, int delta) {
    for (int i : inst_.supporters(cc_.classes[cls].front())) {
      if (delta > 0) {
        score_ += marginal_[voter_count_[i] + 1];
        ++voter_count_[i];
      } else {
        score_ -= marginal_[voter_count_[i]];
        --voter_count_[i];
      }
    }
  }

  void dfs(std::size_t pos, int remaining) {
    if (remaining == 0) {
      leader_.offer(score_, counts_, greater_);
      return;
    }
    if (pos == order_.size() || suffix_capacity_[pos] < remaining) return;
    if (leader_.best) {
      std::vector<std::pair<Rational, int>> ub;
      for (std::size_t p = pos; p < order_.size(); ++p) {
        ub.emplace_back(bound_of(order_[p]), static_cast<int>(cc_.classes[order_[p]].size()));
      }
      std::sort(ub.begin(), ub.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      Rational optimistic = score_;
      int left = remaining;
      for (const auto& [u, size] : ub) {
        int take = std::min(left, size);
        optimistic += u * take;
        left -= take;
        if (!left) break;
      }
      if (optimistic < *leader_.best) return;
    }
    const int cls = order_[pos];
    const int size = static_cast<int>(cc_.classes[cls].size());
    const int most = std::min(size, remaining);
    const int least = std::max(0, remaining - suffix_capacity_[pos + 1]);
    for (int s = 0; s < most; ++s) add(cls, +1);
    for (int s = most; s >= least; --s) {
      counts_[cls] = s;
      dfs(pos + 1, remaining - s);
      if (s > least) add(cls, -1);
    }
    for (int s = 0; s < least; ++s) add(cls, -1);
    counts_[cls] = 0;
  }

  const ElectionInstance& inst_;
  CloneClasses cc_;
  int k_;
  std::vector<Rational> marginal_;
  std::vector<Rational> best_marginal_;
  std::vector<int> voter_count_;
  std::vector<int> counts_;
  std::vector<int> order_;
  std::vector<int> suffix_capacity_;
  Rational score_ = 0;
  Greater greater_;
  detail::Leader<Rational, Greater> leader_;
};

RuleResult to_result(SearchOutcome<Rational>&& out) {
  RuleResult r;
  r.committees = std::move(out.committees);
  r.score = std::move(out.best);
  r.representatives_only = out.representatives_only;
  return r;
}

}  // namespace

Rational thiele_score(const ElectionInstance& inst, const Committee& w, const ThieleWeights& weights) {
  int limit = std::min(static_cast<int>(w.size()), max_ballot(inst));
  return score_with_table(inst, w, cumulative_table(weights, limit));
}

RuleResult thiele_branch_and_bound(const ElectionInstance& inst, const ThieleWeights& weights,
                                   const SearchOptions& opts) {
  ThieleBranchAndBound bnb(inst, weights, opts);
  auto leader = bnb.run();
  return to_result(detail::finish(bnb.classes(), leader, 0, opts));
}

RuleResult thiele_exact(const ElectionInstance& inst, const ThieleWeights& weights, const SearchOptions& opts,
                        std::uint64_t bnb_threshold) {
  CloneClasses cc = clone_classes(inst, opts.merge_clones);
  if (count_vector_space(cc, inst.committee_size()) > bnb_threshold) {
    return thiele_branch_and_bound(inst, weights, opts);
  }
  auto table = cumulative_table(weights, std::min(inst.committee_size(), max_ballot(inst)));
  auto eval = [&](const Committee& w) { return score_with_table(inst, w, table); };
  return to_result(search_optimal<Rational>(inst, eval, Greater{}, opts));
}

SequentialOutcome seq_thiele(const ElectionInstance& inst, const ThieleWeights& weights, const TieOrder& tie) {
  tie.validate(inst.num_candidates(), inst.num_voters());
  const int k = inst.committee_size();
  const int limit = std::min(k, max_ballot(inst));
  if (!weights.covers(limit)) throw std::invalid_argument(weights.label() + " lists too few marginals");
  std::vector<Rational> marginal(k + 1, 0);
  for (int x = 1; x <= limit; ++x) marginal[x] = weights.marginal(x);
  std::vector<int> count(inst.num_voters(), 0);
  std::vector<bool> chosen(inst.num_candidates(), false);
  const auto order = tie.candidates_in_order(inst.num_candidates());
  SequentialOutcome out;
  std::vector<int> members;
  for (int round = 1; round <= k; ++round) {
    int pick = -1;
    Rational best;
    for (int c : order) {
      if (chosen[c]) continue;
      Rational gain = 0;
      for (int i : inst.supporters(c)) gain += marginal[count[i] + 1];
      if (pick < 0 || gain > best) {
        pick = c;
        best = gain;
      }
    }
    chosen[pick] = true;
    members.push_back(pick);
    for (int i : inst.supporters(pick)) ++count[i];
    out.steps.push_back({pick, best});
    out.result.trace.push_back("round " + std::to_string(round) + ": add " + inst.label(pick) + " gain " +
                               to_string(best));
  }
  Committee w(std::move(members));
  out.result.score = thiele_score(inst, w, weights);
  out.result.committees.push_back(std::move(w));
  return out;
}

SequentialOutcome revseq_thiele(const ElectionInstance& inst, const ThieleWeights& weights, const TieOrder& tie) {
  tie.validate(inst.num_candidates(), inst.num_voters());
  const int m = inst.num_candidates();
  const int limit = std::min(m, max_ballot(inst));
  if (!weights.covers(limit)) throw std::invalid_argument(weights.label() + " lists too few marginals");
  std::vector<Rational> marginal(limit + 1, 0);
  for (int x = 1; x <= limit; ++x) marginal[x] = weights.marginal(x);
  std::vector<int> count(inst.num_voters(), 0);
  for (int i = 0; i < inst.num_voters(); ++i) count[i] = static_cast<int>(inst.approval(i).size());
  std::vector<bool> present(m, true);
  const auto order = tie.candidates_in_order(m);
  SequentialOutcome out;
  for (int round = m - 1; round >= inst.committee_size(); --round) {
    int drop = -1;
    Rational least;
    for (int c : order) {
      if (!present[c]) continue;
      Rational loss = 0;
      for (int i : inst.supporters(c)) loss += marginal[count[i]];
      if (drop < 0 || loss <= least) {
        drop = c;
        least = loss;
      }
    }
    present[drop] = false;
    for (int i : inst.supporters(drop)) --count[i];
    out.steps.push_back({drop, least});
    out.result.trace.push_back("size " + std::to_string(round) + ": remove " + inst.label(drop) + " loss " +
                               to_string(least));
  }
  std::vector<int> members;
  for (int c = 0; c < m; ++c) {
    if (present[c]) members.push_back(c);
  }
  Committee w(std::move(members));
  out.result.score = thiele_score(inst, w, weights);
  out.result.committees.push_back(std::move(w));
  return out;
}

ScoringFunction::ScoringFunction(std::string label, Fn f) : label_(std::move(label)), f_(std::move(f)) {}

ScoringFunction ScoringFunction::sav() {
  return {"sav", [](int x, int y) { return y == 0 ? Rational(0) : make_rational(x, y); }};
}

ScoringFunction ScoringFunction::thiele(ThieleWeights weights) {
  std::string label = weights.label();
  return {std::move(label), [w = std::move(weights)](int x, int) { return w.cumulative(x); }};
}

void ScoringFunction::validate(int m, int k) const {
  for (int y = 0; y <= m; ++y) {
    for (int x = 1; x <= std::min(y, k); ++x) {
      if (f_(x, y) < f_(x - 1, y)) {
        throw std::invalid_argument("scoring function " + label_ + " is not monotone in its first argument");
      }
    }
  }
}

namespace {

// f(x, y) for 0 <= y <= m and 0 <= x <= min(y, k).
std::vector<std::vector<Rational>> scoring_table(const ElectionInstance& inst, const ScoringFunction& f, int k) {
  const int m = inst.num_candidates();
  std::vector<std::vector<Rational>> table(m + 1);
  std::vector<bool> used(m + 1, false);
  for (const auto& b : inst.ballots()) used[b.size()] = true;
  for (int y = 0; y <= m; ++y) {
    if (!used[y]) continue;
    for (int x = 0; x <= std::min(y, k); ++x) table[y].push_back(f(x, y));
  }
  return table;
}

Rational score_with_scoring_table(const ElectionInstance& inst, const Committee& w,
                                  const std::vector<std::vector<Rational>>& table) {
  std::vector<int> count(inst.num_voters(), 0);
  for (int c : w.members) {
    for (int i : inst.supporters(c)) ++count[i];
  }
  Rational total = 0;
  for (int i = 0; i < inst.num_voters(); ++i) total += table[inst.approval(i).size()][count[i]];
  return total;
}

}  // namespace

Rational abc_scoring_score(const ElectionInstance& inst, const Committee& w, const ScoringFunction& f) {
  return score_with_scoring_table(inst, w, scoring_table(inst, f, static_cast<int>(w.size())));
}

RuleResult abc_scoring_exact(const ElectionInstance& inst, const ScoringFunction& f, const SearchOptions& opts) {
  f.validate(inst.num_candidates(), inst.committee_size());
  auto table = scoring_table(inst, f, inst.committee_size());
  auto eval = [&](const Committee& w) { return score_with_scoring_table(inst, w, table); };
  return to_result(search_optimal<Rational>(inst, eval, Greater{}, opts));
}

}  // namespace abc
