#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abc/profile.hpp"

namespace abc {

struct ApportionmentInstance {
  std::vector<std::int64_t> votes;
  int seats = 0;

  void validate() const;
};

struct ApportionmentRound {
  int party;
  Rational quotient;
};

struct Apportionment {
  std::vector<int> seats;
  std::vector<ApportionmentRound> rounds;  // divisor methods
  std::vector<Rational> remainders;        // largest remainder method
};

// Parties in tie-break order: descending votes, then input order.
std::vector<int> default_party_priority(const ApportionmentInstance& inst);

Apportionment dhondt(const ApportionmentInstance& inst, std::vector<int> party_priority = {});
Apportionment sainte_lague(const ApportionmentInstance& inst, std::vector<int> party_priority = {});
Apportionment largest_remainder(const ApportionmentInstance& inst, std::vector<int> party_priority = {});

// Every seat vector reachable under some tie-breaking, sorted.
std::vector<std::vector<int>> dhondt_outcomes(const ApportionmentInstance& inst);
std::vector<std::vector<int>> largest_remainder_outcomes(const ApportionmentInstance& inst);

struct PartyStructure {
  std::vector<std::vector<int>> ballots;  // C_j
  std::vector<std::vector<int>> voters;   // N_j, parties ordered by first voter
  bool ballots_cover_k = false;           // |A(i)| >= k for every voter

  std::vector<std::int64_t> votes() const;
};

std::optional<PartyStructure> as_party_list(const ElectionInstance& inst);
// Members of W per party; candidates outside every ballot are not counted.
std::vector<int> seat_counts(const PartyStructure& parties, const Committee& w);

}  // namespace abc
