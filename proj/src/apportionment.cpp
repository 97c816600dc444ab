#include "abc/apportionment.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace abc {

void ApportionmentInstance::validate() const {
  if (votes.empty()) throw std::invalid_argument("need at least one party");
  if (seats < 1) throw std::invalid_argument("need at least one seat");
  std::int64_t total = 0;
  for (auto v : votes) {
    if (v < 0) throw std::invalid_argument("votes must be non-negative");
    total += v;
  }
  if (total <= 0) throw std::invalid_argument("need at least one vote");
}

std::vector<int> default_party_priority(const ApportionmentInstance& inst) {
  std::vector<int> order(inst.votes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inst.votes[a] > inst.votes[b]; });
  return order;
}

namespace {

std::vector<int> resolve_priority(const ApportionmentInstance& inst, std::vector<int> priority) {
  if (priority.empty()) return default_party_priority(inst);
  std::vector<int> check = priority;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != static_cast<int>(i) || check.size() != inst.votes.size()) {
      throw std::invalid_argument("party priority is not a permutation");
    }
  }
  return priority;
}

Rational quotient(std::int64_t votes, std::int64_t divisor) {
  return make_rational(votes, divisor);
}

template <class Divisor>
Apportionment divisor_method(const ApportionmentInstance& inst, std::vector<int> priority, Divisor divisor) {
  inst.validate();
  priority = resolve_priority(inst, std::move(priority));
  Apportionment out;
  out.seats.assign(inst.votes.size(), 0);
  for (int r = 0; r < inst.seats; ++r) {
    int pick = -1;
    Rational best;
    for (int party : priority) {
      Rational q = quotient(inst.votes[party], divisor(out.seats[party]));
      if (pick < 0 || q > best) {
        pick = party;
        best = q;
      }
    }
    ++out.seats[pick];
    out.rounds.push_back({pick, best});
  }
  return out;
}

}  // namespace

Apportionment dhondt(const ApportionmentInstance& inst, std::vector<int> party_priority) {
  return divisor_method(inst, std::move(party_priority), [](int s) { return std::int64_t{s} + 1; });
}

Apportionment sainte_lague(const ApportionmentInstance& inst, std::vector<int> party_priority) {
  return divisor_method(inst, std::move(party_priority), [](int s) { return 2 * std::int64_t{s} + 1; });
}

Apportionment largest_remainder(const ApportionmentInstance& inst, std::vector<int> party_priority) {
  inst.validate();
  auto priority = resolve_priority(inst, std::move(party_priority));
  const std::int64_t total = std::accumulate(inst.votes.begin(), inst.votes.end(), std::int64_t{0});
  Apportionment out;
  out.seats.assign(inst.votes.size(), 0);
  out.remainders.assign(inst.votes.size(), 0);
  int given = 0;
  for (std::size_t p = 0; p < inst.votes.size(); ++p) {
    Rational quota = quotient(inst.votes[p] * inst.seats, total);
    auto whole = floor_of(quota);
    out.seats[p] = static_cast<int>(whole.get_si());
    out.remainders[p] = quota - Rational(whole);
    given += out.seats[p];
  }
  std::vector<int> order = priority;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return out.remainders[a] > out.remainders[b]; });
  for (int r = 0; r < inst.seats - given; ++r) ++out.seats[order[r]];
  return out;
}

std::vector<std::vector<int>> dhondt_outcomes(const ApportionmentInstance& inst) {
  inst.validate();
  std::set<std::vector<int>> found;
  std::vector<int> seats(inst.votes.size(), 0);
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      found.insert(seats);
      return;
    }
    std::optional<Rational> best;
    for (std::size_t p = 0; p < seats.size(); ++p) {
      Rational q = quotient(inst.votes[p], seats[p] + 1);
      if (!best || q > *best) best = q;
    }
    for (std::size_t p = 0; p < seats.size(); ++p) {
      if (quotient(inst.votes[p], seats[p] + 1) != *best) continue;
      ++seats[p];
      self(self, left - 1);
      --seats[p];
    }
  };
  rec(rec, inst.seats);
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> largest_remainder_outcomes(const ApportionmentInstance& inst) {
  auto base = largest_remainder(inst);
  const std::int64_t total = std::accumulate(inst.votes.begin(), inst.votes.end(), std::int64_t{0});
  std::vector<int> floors(inst.votes.size());
  int given = 0;
  for (std::size_t p = 0; p < floors.size(); ++p) {
    floors[p] = static_cast<int>(floor_of(quotient(inst.votes[p] * inst.seats, total)).get_si());
    given += floors[p];
  }
  const int extra = inst.seats - given;
  std::vector<int> order(floors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return base.remainders[a] > base.remainders[b]; });
  std::set<std::vector<int>> found;
  if (extra == 0) return {floors};
  const Rational cut = base.remainders[order[extra - 1]];
  std::vector<int> sure;
  std::vector<int> tied;
  for (int p : order) {
    if (base.remainders[p] > cut) sure.push_back(p);
    if (base.remainders[p] == cut) tied.push_back(p);
  }
  const int need = extra - static_cast<int>(sure.size());
  std::vector<bool> pick(tied.size(), false);
  std::fill(pick.begin(), pick.begin() + need, true);
  do {
    auto seats = floors;
    for (int p : sure) ++seats[p];
    for (std::size_t t = 0; t < tied.size(); ++t) {
      if (pick[t]) ++seats[tied[t]];
    }
    found.insert(seats);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

std::vector<std::int64_t> PartyStructure::votes() const {
  std::vector<std::int64_t> out;
  for (const auto& group : voters) out.push_back(static_cast<std::int64_t>(group.size()));
  return out;
}

std::optional<PartyStructure> as_party_list(const ElectionInstance& inst) {
  PartyStructure ps;
  std::map<std::vector<int>, int> index;
  std::vector<int> owner(inst.num_candidates(), -1);
  ps.ballots_cover_k = true;
  for (int i = 0; i < inst.num_voters(); ++i) {
    std::vector<int> ballot(inst.approval(i).begin(), inst.approval(i).end());
    if (static_cast<int>(ballot.size()) < inst.committee_size()) ps.ballots_cover_k = false;
    auto [it, fresh] = index.emplace(ballot, static_cast<int>(ps.ballots.size()));
    if (fresh) {
      for (int c : ballot) {
        if (owner[c] != -1) return std::nullopt;
        owner[c] = it->second;
      }
      ps.ballots.push_back(ballot);
      ps.voters.emplace_back();
    }
    ps.voters[it->second].push_back(i);
  }
  return ps;
}

std::vector<int> seat_counts(const PartyStructure& parties, const Committee& w) {
  std::vector<int> seats(parties.ballots.size(), 0);
  for (std::size_t p = 0; p < parties.ballots.size(); ++p) {
    for (int c : parties.ballots[p]) seats[p] += w.contains(c) ? 1 : 0;
  }
  return seats;
}

}  // namespace abc
