#include "abc/axioms.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "abc/apportionment.hpp"
#include "abc/flow.hpp"
#include "abc/thiele.hpp"

namespace abc {

std::optional<Committee> check_pareto_optimal(const ElectionInstance& inst, const Committee& w, std::uint64_t cap) {
  const auto base = welfare_vector(inst, w);
  CommitteeEnumerator it(inst.num_candidates(), static_cast<int>(w.size()), cap);
  Committee other;
  while (it.next(other)) {
    auto v = welfare_vector(inst, other);
    bool weakly = true;
    bool strict = false;
    for (std::size_t i = 0; i < v.size() && weakly; ++i) {
      weakly = v[i] >= base[i];
      strict = strict || v[i] > base[i];
    }
    if (weakly && strict) return other;
  }
  return std::nullopt;
}

bool check_condorcet_committee(const ElectionInstance& inst, const Committee& w, std::uint64_t cap) {
  const auto base = welfare_vector(inst, w);
  const long n = inst.num_voters();
  CommitteeEnumerator it(inst.num_candidates(), static_cast<int>(w.size()), cap);
  Committee other;
  while (it.next(other)) {
    if (other == w) continue;
    auto v = welfare_vector(inst, other);
    long prefer = 0;
    for (std::size_t i = 0; i < v.size(); ++i) prefer += base[i] > v[i] ? 1 : 0;
    if (2 * prefer <= n) return false;
  }
  return true;
}

std::optional<Committee> find_condorcet_committee(const ElectionInstance& inst, std::uint64_t cap) {
  CommitteeEnumerator it(inst.num_candidates(), inst.committee_size(), cap);
  Committee w;
  while (it.next(w)) {
    if (check_condorcet_committee(inst, w, cap)) return w;
  }
  return std::nullopt;
}

namespace {

// Visits, in lexicographic order, every T of the given size whose common
// approvers S satisfy |S| * k >= size * n. The visitor returns true to stop.
bool for_each_cohesive(const ElectionInstance& inst, int size,
                       const std::function<bool(const std::vector<int>&, const Bitset&)>& visit) {
  const long n = inst.num_voters();
  const long k = inst.committee_size();
  std::vector<int> t;
  Bitset all(inst.num_voters());
  for (int i = 0; i < inst.num_voters(); ++i) all.set(i);
  std::function<bool(int, const Bitset&)> rec = [&](int start, const Bitset& common) {
    for (int c = start; c < inst.num_candidates(); ++c) {
      Bitset next = common;
      next &= inst.supporter_mask(c);
      if (static_cast<long>(next.count()) * k < size * n) continue;
      t.push_back(c);
      bool stop = static_cast<int>(t.size()) == size ? visit(t, next) : rec(c + 1, next);
      t.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return rec(0, all);
}

std::vector<int> members_of(const Bitset& set) {
  std::vector<int> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.test(i)) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

std::optional<CohesiveWitness> check_jr(const ElectionInstance& inst, const Committee& w) {
  const auto rep = welfare_vector(inst, w);
  const long n = inst.num_voters();
  const long k = inst.committee_size();
  for (int c = 0; c < inst.num_candidates(); ++c) {
    if (w.contains(c)) continue;
    std::vector<int> voters;
    for (int i : inst.supporters(c)) {
      if (rep[i] == 0) voters.push_back(i);
    }
    if (static_cast<long>(voters.size()) * k >= n) return CohesiveWitness{1, {c}, std::move(voters)};
  }
  return std::nullopt;
}

std::optional<CohesiveWitness> check_ejr(const ElectionInstance& inst, const Committee& w) {
  const auto rep = welfare_vector(inst, w);
  const long n = inst.num_voters();
  const long k = inst.committee_size();
  std::optional<CohesiveWitness> found;
  for (int level = 1; level <= k && !found; ++level) {
    for_each_cohesive(inst, level, [&](const std::vector<int>& t, const Bitset& common) {
      std::vector<int> voters;
      for (int i : members_of(common)) {
        if (rep[i] < level) voters.push_back(i);
      }
      if (static_cast<long>(voters.size()) * k < level * n) return false;
      found = CohesiveWitness{level, t, std::move(voters)};
      return true;
    });
  }
  return found;
}

std::optional<CohesiveWitness> check_pjr(const ElectionInstance& inst, const Committee& w) {
  const long n = inst.num_voters();
  const long k = inst.committee_size();
  std::optional<CohesiveWitness> found;
  for (int level = 1; level <= k && !found; ++level) {
    for_each_cohesive(inst, level, [&](const std::vector<int>& t, const Bitset& common) {
      const auto voters = members_of(common);
      std::set<int> pool_set;
      for (int i : voters) {
        for (int c : inst.approval(i)) {
          if (w.contains(c)) pool_set.insert(c);
        }
      }
      std::vector<int> pool(pool_set.begin(), pool_set.end());
      // Voters whose represented members all fit into some U of size level-1.
      auto qualifying = [&](const std::vector<bool>& in_u) {
        std::vector<int> out;
        for (int i : voters) {
          bool inside = true;
          for (int c : inst.approval(i)) {
            if (!w.contains(c)) continue;
            auto pos = std::lower_bound(pool.begin(), pool.end(), c) - pool.begin();
            if (!in_u[pos]) {
              inside = false;
              break;
            }
          }
          if (inside) out.push_back(i);
        }
        return out;
      };
      const int u_size = std::min<int>(level - 1, static_cast<int>(pool.size()));
      std::vector<bool> in_u(pool.size(), false);
      std::fill(in_u.begin(), in_u.begin() + u_size, true);
      do {
        auto group = qualifying(in_u);
        if (static_cast<long>(group.size()) * k >= level * n) {
          found = CohesiveWitness{level, t, std::move(group)};
          return true;
        }
      } while (std::prev_permutation(in_u.begin(), in_u.end()));
      return false;
    });
  }
  return found;
}

std::vector<ProportionalityLevel> proportionality_degree(const ElectionInstance& inst, const Committee& w) {
  const auto rep = welfare_vector(inst, w);
  const long n = inst.num_voters();
  const long k = inst.committee_size();
  std::vector<ProportionalityLevel> out;
  for (int level = 1; level <= k; ++level) {
    ProportionalityLevel entry;
    entry.level = level;
    const long quota = (level * n + k - 1) / k;
    for_each_cohesive(inst, level, [&](const std::vector<int>& t, const Bitset& common) {
      auto voters = members_of(common);
      std::stable_sort(voters.begin(), voters.end(), [&](int a, int b) { return rep[a] < rep[b]; });
      voters.resize(quota);
      long total = 0;
      for (int i : voters) total += rep[i];
      Rational avg = make_rational(total, quota);
      if (!entry.average || avg < *entry.average) {
        entry.average = avg;
        std::sort(voters.begin(), voters.end());
        entry.group = CohesiveWitness{level, t, std::move(voters)};
      }
      return false;
    });
    out.push_back(std::move(entry));
  }
  return out;
}

std::optional<CoreDeviation> find_core_violation(const ElectionInstance& inst, const Committee& w,
                                                 const CoreParameters& params) {
  const auto rep = welfare_vector(inst, w);
  const int m = inst.num_candidates();
  const long n = inst.num_voters();
  const long k = inst.committee_size();
  int max_size = m;
  if (params.beta > 0) {
    Rational limit = Rational(k) / params.beta;
    max_size = static_cast<int>(std::min<long>(m, floor_of(limit).get_si()));
  }
  std::vector<Rational> threshold(inst.num_voters());
  for (int i = 0; i < inst.num_voters(); ++i) threshold[i] = params.gamma * rep[i] + params.eta;
  std::vector<int> overlap(inst.num_voters());
  for (int size = 1; size <= max_size; ++size) {
    CommitteeEnumerator it(m, size, std::numeric_limits<std::uint64_t>::max());
    Committee t;
    const Rational needed = params.beta * size * n;
    while (it.next(t)) {
      std::fill(overlap.begin(), overlap.end(), 0);
      for (int c : t.members) {
        for (int i : inst.supporters(c)) ++overlap[i];
      }
      std::vector<int> voters;
      for (int i = 0; i < inst.num_voters(); ++i) {
        if (overlap[i] > threshold[i]) voters.push_back(i);
      }
      if (needed <= Rational(static_cast<long>(voters.size()) * k)) {
        return CoreDeviation{std::move(voters), t.members, params};
      }
    }
  }
  return std::nullopt;
}

PRCheck check_perfect_representation(const ElectionInstance& inst, const Committee& w) {
  const int n = inst.num_voters();
  const int k = static_cast<int>(w.size());
  PRCheck out;
  if (n % k != 0) return out;
  const int share = n / k;
  FlowNetwork net(2 + k + n, 0, 1);
  std::vector<std::vector<std::pair<int, int>>> arcs(k);
  for (int p = 0; p < k; ++p) {
    net.add_arc(0, 2 + p, share, 0, share);
    for (int i : inst.supporters(w.members[p])) arcs[p].push_back({i, net.add_arc(2 + p, 2 + k + i, 1)});
  }
  for (int i = 0; i < n; ++i) net.add_arc(2 + k + i, 1, 1);
  auto flow = min_cost_flow(net, n);
  if (!flow.feasible) {
    out.verdict = Verdict::violated;
    return out;
  }
  PRPartition part;
  part.candidates = w.members;
  part.groups.assign(k, {});
  for (int p = 0; p < k; ++p) {
    for (auto [voter, arc] : arcs[p]) {
      if (flow.flow[arc] > 0) part.groups[p].push_back(voter);
    }
  }
  out.verdict = Verdict::satisfied;
  out.partition = std::move(part);
  return out;
}

PRSearch exists_pr_committee(const ElectionInstance& inst, std::uint64_t cap) {
  PRSearch out;
  if (inst.num_voters() % inst.committee_size() != 0) return out;
  CommitteeEnumerator it(inst.num_candidates(), inst.committee_size(), cap);
  Committee w;
  out.verdict = Verdict::violated;
  while (it.next(w)) {
    if (check_perfect_representation(inst, w).verdict == Verdict::satisfied) {
      out.verdict = Verdict::satisfied;
      out.committee = w;
      break;
    }
  }
  return out;
}

Ratios ratios(const ElectionInstance& inst, const Committee& w, const SearchOptions& opts) {
  const int k = static_cast<int>(w.size());
  std::vector<long> approvals;
  for (int c = 0; c < inst.num_candidates(); ++c) approvals.push_back(static_cast<long>(inst.supporters(c).size()));
  std::sort(approvals.begin(), approvals.end(), std::greater<long>());
  long best_av = 0;
  for (int j = 0; j < k; ++j) best_av += approvals[j];
  long av = 0;
  for (int c : w.members) av += static_cast<long>(inst.supporters(c).size());
  long coverage = 0;
  for (int x : welfare_vector(inst, w)) coverage += x > 0 ? 1 : 0;
  const ElectionInstance sized = inst.with_committee_size(k);
  Rational best_cover = *thiele_exact(sized, ThieleWeights::cc(), opts).score;
  auto ratio = [](const Rational& num, const Rational& den) { return den == 0 ? Rational(1) : num / den; };
  return {ratio(Rational(av), Rational(best_av)), ratio(Rational(coverage), best_cover)};
}

MonotonicityProbe probe_committee_monotonicity(std::string_view rule_id, const ElectionInstance& inst, int k_max,
                                               const RuleOptions& opts) {
  if (k_max < 1 || k_max > inst.num_candidates()) throw std::invalid_argument("k_max must lie in 1..m");
  MonotonicityProbe out;
  for (int k = 1; k <= k_max; ++k) {
    out.chain.push_back(compute_resolute(rule_id, inst.with_committee_size(k), opts));
    if (k > 1 && out.holds && !out.chain[k - 2].is_subset_of(out.chain[k - 1])) {
      out.holds = false;
      out.breaking_k = k;
    }
  }
  return out;
}

Verdict check_disjoint_diversity(const ElectionInstance& inst, const RuleResult& result) {
  auto parties = as_party_list(inst);
  if (!parties) return Verdict::not_applicable;
  std::vector<int> order;
  for (std::size_t p = 0; p < parties->ballots.size(); ++p) {
    if (!parties->ballots[p].empty()) order.push_back(static_cast<int>(p));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return parties->voters[a].size() > parties->voters[b].size(); });
  order.resize(std::min<std::size_t>(order.size(), inst.committee_size()));
  for (const auto& w : result.committees) {
    auto seats = seat_counts(*parties, w);
    if (std::all_of(order.begin(), order.end(), [&](int p) { return seats[p] > 0; })) return Verdict::satisfied;
  }
  return Verdict::violated;
}

Verdict check_disjoint_equality(const ElectionInstance& inst, const RuleResult& result) {
  std::vector<int> approved;
  for (int c = 0; c < inst.num_candidates(); ++c) {
    if (inst.supporters(c).size() > 1) return Verdict::not_applicable;
    if (!inst.supporters(c).empty()) approved.push_back(c);
  }
  const int k = inst.committee_size();
  if (static_cast<int>(approved.size()) < k) return Verdict::not_applicable;
  if (result.representatives_only) throw std::invalid_argument("disjoint equality needs fully expanded winners");
  std::set<Committee> winners(result.committees.begin(), result.committees.end());
  std::set<Committee> expected;
  std::vector<bool> pick(approved.size(), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> members;
    for (std::size_t j = 0; j < approved.size(); ++j) {
      if (pick[j]) members.push_back(approved[j]);
    }
    expected.insert(Committee(std::move(members)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return winners == expected ? Verdict::satisfied : Verdict::violated;
}

}  // namespace abc
