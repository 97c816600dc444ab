#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "abc/profile.hpp"
#include "abc/rational.hpp"
#include "abc/thiele.hpp"

namespace oracle {

using abc::Committee;
using abc::ElectionInstance;
using abc::Rational;

inline int overlap(const ElectionInstance& inst, int voter, const std::vector<int>& set) {
  int n = 0;
  for (int c : set) n += inst.approves(voter, c) ? 1 : 0;
  return n;
}

inline std::vector<std::vector<int>> subsets(int size) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1U << size); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < size; ++i) {
      if (mask & (1U << i)) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

inline std::vector<int> common_candidates(const ElectionInstance& inst, const std::vector<int>& voters) {
  std::vector<int> out;
  for (int c = 0; c < inst.num_candidates(); ++c) {
    bool all = true;
    for (int v : voters) all = all && inst.approves(v, c);
    if (all) out.push_back(c);
  }
  return out;
}

// Thiele score from the harmonic-style definition w(x) = sum of marginals.
inline Rational naive_thiele_score(const ElectionInstance& inst, const Committee& w, const abc::ThieleWeights& weights) {
  Rational total = 0;
  for (int i = 0; i < inst.num_voters(); ++i) {
    const int x = overlap(inst, i, w.members);
    for (int j = 1; j <= x; ++j) total += weights.marginal(j);
  }
  return total;
}

// Every committee scored independently; returns the maximizers.
inline std::pair<Rational, std::vector<Committee>> thiele_all(const ElectionInstance& inst,
                                                              const abc::ThieleWeights& weights) {
  std::vector<Committee> best;
  Rational top = -1;
  for (const Committee& w : abc::enumerate_committees(inst.num_candidates(), inst.committee_size())) {
    Rational s = naive_thiele_score(inst, w, weights);
    if (s > top) {
      top = s;
      best.clear();
    }
    if (s == top) best.push_back(w);
  }
  return {top, best};
}

// Monroe score by enumerating every balanced voter-to-member assignment.
inline int monroe_brute(const ElectionInstance& inst, const Committee& w) {
  const int n = inst.num_voters();
  const int k = static_cast<int>(w.size());
  const int lo = n / k;
  const int hi = (n + k - 1) / k;
  std::vector<int> load(k, 0);
  int best = -1;
  std::function<void(int, int)> go = [&](int voter, int sat) {
    if (voter == n) {
      for (int j = 0; j < k; ++j) {
        if (load[j] < lo) return;
      }
      best = std::max(best, sat);
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (load[j] == hi) continue;
      ++load[j];
      go(voter + 1, sat + (inst.approves(voter, w.members[j]) ? 1 : 0));
      --load[j];
    }
  };
  go(0, 0);
  return best;
}

// Cohesive-group oracles: every voter subset V and every level l with
// |V| k >= l n and at least l commonly approved candidates.
template <class Visit>
void for_each_cohesive(const ElectionInstance& inst, Visit&& visit) {
  const int n = inst.num_voters();
  const int k = inst.committee_size();
  for (const auto& group : subsets(n)) {
    const int common = static_cast<int>(common_candidates(inst, group).size());
    for (int l = 1; l <= std::min(common, k); ++l) {
      if (static_cast<long long>(group.size()) * k >= static_cast<long long>(l) * n) visit(group, l);
    }
  }
}

inline bool jr_holds(const ElectionInstance& inst, const Committee& w) {
  bool ok = true;
  for_each_cohesive(inst, [&](const std::vector<int>& group, int l) {
    if (l != 1) return;
    bool any = false;
    for (int v : group) any = any || overlap(inst, v, w.members) > 0;
    ok = ok && any;
  });
  return ok;
}

inline bool pjr_holds(const ElectionInstance& inst, const Committee& w) {
  bool ok = true;
  for_each_cohesive(inst, [&](const std::vector<int>& group, int l) {
    int covered = 0;
    for (int c : w.members) {
      bool hit = false;
      for (int v : group) hit = hit || inst.approves(v, c);
      covered += hit ? 1 : 0;
    }
    ok = ok && covered >= l;
  });
  return ok;
}

inline bool ejr_holds(const ElectionInstance& inst, const Committee& w) {
  bool ok = true;
  for_each_cohesive(inst, [&](const std::vector<int>& group, int l) {
    bool any = false;
    for (int v : group) any = any || overlap(inst, v, w.members) >= l;
    ok = ok && any;
  });
  return ok;
}

// Minimal average representation over l-cohesive groups; nullopt if none.
inline std::vector<std::optional<Rational>> proportionality(const ElectionInstance& inst, const Committee& w) {
  std::vector<std::optional<Rational>> out(inst.committee_size() + 1);
  for_each_cohesive(inst, [&](const std::vector<int>& group, int l) {
    int total = 0;
    for (int v : group) total += overlap(inst, v, w.members);
    Rational avg = abc::make_rational(total, static_cast<std::int64_t>(group.size()));
    if (!out[l] || avg < *out[l]) out[l] = avg;
  });
  return out;
}

// Core deviation over all (V, T) pairs with T non-empty.
inline bool core_deviation_exists(const ElectionInstance& inst, const Committee& w, const Rational& gamma = 1,
                                  const Rational& eta = 0, const Rational& beta = 1) {
  const int n = inst.num_voters();
  const int k = inst.committee_size();
  const auto voter_sets = subsets(n);
  for (const auto& t : subsets(inst.num_candidates())) {
    for (const auto& group : voter_sets) {
      if (beta * static_cast<long>(t.size()) * n > Rational(static_cast<long>(group.size()) * k)) continue;
      bool all = true;
      for (int v : group) {
        all = all && Rational(overlap(inst, v, t)) > gamma * overlap(inst, v, w.members) + eta;
      }
      if (all) return true;
    }
  }
  return false;
}

struct Generator {
  std::mt19937_64 rng;

  explicit Generator(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }

  ElectionInstance instance(int n, int m, int k, double density = 0.4) {
    std::vector<std::vector<int>> ballots(n);
    for (auto& b : ballots) {
      for (int c = 0; c < m; ++c) {
        if (coin(density)) b.push_back(c);
      }
      if (b.empty()) b.push_back(uniform(0, m - 1));
    }
    return ElectionInstance(m, k, ballots);
  }

  ElectionInstance instance_upto(int n_max, int m_max, int k_max) {
    const int m = uniform(2, m_max);
    const int n = uniform(1, n_max);
    const int k = uniform(1, std::min(k_max, m));
    return instance(n, m, k, 0.2 + 0.1 * uniform(0, 4));
  }

  // Parties with |C_j| = k, votes >= 1.
  ElectionInstance party_list(int parties, int k, int max_votes, std::vector<int>* votes_out = nullptr) {
    std::vector<int> votes;
    for (int p = 0; p < parties; ++p) votes.push_back(uniform(1, max_votes));
    if (votes_out) *votes_out = votes;
    std::vector<std::vector<int>> ballots;
    int next = 0;
    for (int v : votes) {
      std::vector<int> b;
      for (int j = 0; j < k; ++j) b.push_back(next++);
      for (int i = 0; i < v; ++i) ballots.push_back(b);
    }
    std::shuffle(ballots.begin(), ballots.end(), rng);
    return ElectionInstance(next, k, ballots);
  }
};

}  // namespace oracle
