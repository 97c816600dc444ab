#include "abc/monroe.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace abc {

namespace {

std::int64_t lower_quota(const ElectionInstance& inst, int k) { return inst.num_voters() / k; }
std::int64_t upper_quota(const ElectionInstance& inst, int k) { return (inst.num_voters() + k - 1) / k; }

struct VoterTypes {
  std::vector<std::vector<int>> voters;       // voters sharing a type, ascending
  std::vector<std::vector<bool>> approves;    // per type, per committee position
};

VoterTypes group_voters(const ElectionInstance& inst, const Committee& w) {
  VoterTypes t;
  std::map<std::vector<bool>, int> index;
  for (int i = 0; i < inst.num_voters(); ++i) {
    std::vector<bool> key(w.size());
    for (std::size_t p = 0; p < w.size(); ++p) key[p] = inst.approves(i, w.members[p]);
    auto [it, fresh] = index.emplace(key, static_cast<int>(t.voters.size()));
    if (fresh) {
      t.voters.emplace_back();
      t.approves.push_back(key);
    }
    t.voters[it->second].push_back(i);
  }
  return t;
}

}  // namespace

FlowNetwork monroe_network(const ElectionInstance& inst, const Committee& w) {
  const int k = static_cast<int>(w.size());
  const int n = inst.num_voters();
  FlowNetwork net(2 + k + n, 0, 1);
  for (int p = 0; p < k; ++p) net.add_arc(0, 2 + p, upper_quota(inst, k), 0, lower_quota(inst, k));
  for (int p = 0; p < k; ++p) {
    for (int i = 0; i < n; ++i) net.add_arc(2 + p, 2 + k + i, 1, inst.approves(i, w.members[p]) ? -1 : 0);
  }
  for (int i = 0; i < n; ++i) net.add_arc(2 + k + i, 1, 1);
  return net;
}

MonroeScore monroe_score(const ElectionInstance& inst, const Committee& w) {
  const int k = static_cast<int>(w.size());
  if (k < 1) throw std::invalid_argument("Monroe score needs a non-empty committee");
  VoterTypes types = group_voters(inst, w);
  const int t = static_cast<int>(types.voters.size());
  FlowNetwork net(2 + k + t, 0, 1);
  for (int p = 0; p < k; ++p) net.add_arc(0, 2 + p, upper_quota(inst, k), 0, lower_quota(inst, k));
  std::vector<std::vector<int>> arc_of(k, std::vector<int>(t));
  for (int p = 0; p < k; ++p) {
    for (int g = 0; g < t; ++g) {
      auto size = static_cast<std::int64_t>(types.voters[g].size());
      arc_of[p][g] = net.add_arc(2 + p, 2 + k + g, size, types.approves[g][p] ? -1 : 0);
    }
  }
  for (int g = 0; g < t; ++g) net.add_arc(2 + k + g, 1, static_cast<std::int64_t>(types.voters[g].size()));
  FlowResult flow = min_cost_flow(net, inst.num_voters());
  if (!flow.feasible) throw std::logic_error("Monroe network has no balanced assignment");

  MonroeScore out;
  out.score = static_cast<int>(-flow.cost);
  out.assignment.representative.assign(inst.num_voters(), -1);
  out.assignment.satisfied.assign(inst.num_voters(), false);
  for (int g = 0; g < t; ++g) {
    std::size_t next = 0;
    for (int p = 0; p < k; ++p) {
      for (std::int64_t u = 0; u < flow.flow[arc_of[p][g]]; ++u) {
        int voter = types.voters[g][next++];
        out.assignment.representative[voter] = w.members[p];
        out.assignment.satisfied[voter] = types.approves[g][p];
      }
    }
  }
  return out;
}

int monroe_score_value(const ElectionInstance& inst, const Committee& w) { return monroe_score(inst, w).score; }

bool is_balanced(const ElectionInstance& inst, const Committee& w, const MonroeAssignment& a) {
  const int k = static_cast<int>(w.size());
  if (static_cast<int>(a.representative.size()) != inst.num_voters()) return false;
  std::map<int, std::int64_t> load;
  for (int c : w.members) load[c] = 0;
  for (int i = 0; i < inst.num_voters(); ++i) {
    auto it = load.find(a.representative[i]);
    if (it == load.end()) return false;
    ++it->second;
    if (a.satisfied[i] != inst.approves(i, a.representative[i])) return false;
  }
  return std::all_of(load.begin(), load.end(), [&](const auto& kv) {
    return kv.second >= lower_quota(inst, k) && kv.second <= upper_quota(inst, k);
  });
}

RuleResult monroe_exact(const ElectionInstance& inst, const SearchOptions& opts) {
  auto eval = [&](const Committee& w) { return monroe_score_value(inst, w); };
  auto out = search_optimal<int>(inst, eval, std::greater<int>{}, opts);
  RuleResult r;
  r.committees = std::move(out.committees);
  r.score = Rational(out.best);
  r.representatives_only = out.representatives_only;
  return r;
}

GreedyMonroeOutcome greedy_monroe(const ElectionInstance& inst, const TieOrder& tie) {
  tie.validate(inst.num_candidates(), inst.num_voters());
  const int n = inst.num_voters();
  const int k = inst.committee_size();
  const int big_rounds = n % k;
  const auto cand_order = tie.candidates_in_order(inst.num_candidates());
  const auto voter_order = tie.voters_in_order(n);
  std::vector<bool> assigned(n, false);
  std::vector<bool> chosen(inst.num_candidates(), false);
  std::vector<int> members;
  GreedyMonroeOutcome out;
  for (int round = 0; round < k; ++round) {
    const int cap = n / k + (round < big_rounds ? 1 : 0);
    int pick = -1;
    int support = -1;
    for (int c : cand_order) {
      if (chosen[c]) continue;
      int s = 0;
      for (int i : inst.supporters(c)) s += assigned[i] ? 0 : 1;
      if (s > support) {
        pick = c;
        support = s;
      }
    }
    GreedyMonroeRound r{pick, {}, cap};
    for (int i : voter_order) {
      if (static_cast<int>(r.group.size()) == cap) break;
      if (!assigned[i] && inst.approves(i, pick)) r.group.push_back(i);
    }
    for (int i : r.group) assigned[i] = true;
    chosen[pick] = true;
    members.push_back(pick);
    std::string line = "round " + std::to_string(round + 1) + ": " + inst.label(pick) + " cap " +
                       std::to_string(cap) + " group {";
    for (std::size_t g = 0; g < r.group.size(); ++g) line += (g ? "," : "") + std::to_string(r.group[g] + 1);
    out.result.trace.push_back(line + "}");
    out.rounds.push_back(std::move(r));
  }
  Committee w(std::move(members));
  out.result.score = Rational(monroe_score_value(inst, w));
  out.result.committees.push_back(std::move(w));
  return out;
}

}  // namespace abc
