#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abc/rational.hpp"

namespace abc {

inline constexpr std::uint64_t kDefaultCommitteeCap = 100'000'000;

// Raised when an exhaustive scan would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Fixed-width set over 0..size-1, used for voter sets and ballots.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const;
  bool any() const;
  bool is_subset_of(const Bitset& other) const;
  std::size_t intersection_count(const Bitset& other) const;

  Bitset& operator|=(const Bitset& other);
  Bitset& operator&=(const Bitset& other);
  Bitset& subtract(const Bitset& other);

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend auto operator<=>(const Bitset& a, const Bitset& b) { return a.words_ <=> b.words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Sorted, duplicate-free set of candidate indices.
struct Committee {
  std::vector<int> members;

  Committee() = default;
  explicit Committee(std::vector<int> ms);

  std::size_t size() const { return members.size(); }
  bool contains(int candidate) const;
  bool is_subset_of(const Committee& other) const;

  friend bool operator==(const Committee&, const Committee&) = default;
  friend auto operator<=>(const Committee&, const Committee&) = default;
};

// Approval profile plus committee size. Immutable after construction.
class ElectionInstance {
 public:
  ElectionInstance(int num_candidates, int committee_size,
                   std::vector<std::vector<int>> approvals,
                   std::vector<std::string> names = {});

  int num_candidates() const { return m_; }
  int num_voters() const { return static_cast<int>(approvals_.size()); }
  int committee_size() const { return k_; }

  std::span<const int> approval(int voter) const { return approvals_[voter]; }
  const Bitset& approval_mask(int voter) const { return ballot_masks_[voter]; }
  std::span<const int> supporters(int candidate) const { return supporters_[candidate]; }
  const Bitset& supporter_mask(int candidate) const { return supporter_masks_[candidate]; }
  bool approves(int voter, int candidate) const { return ballot_masks_[voter].test(candidate); }

  const std::vector<std::vector<int>>& ballots() const { return approvals_; }
  const std::vector<std::string>& names() const { return names_; }
  bool has_names() const { return !names_.empty(); }
  std::string label(int candidate) const;
  int empty_ballot_count() const { return empty_ballots_; }

  ElectionInstance with_committee_size(int k) const;
  ElectionInstance with_ballot(int voter, std::vector<int> ballot) const;
  ElectionInstance with_extra_voters(const std::vector<std::vector<int>>& ballots) const;

 private:
  int m_;
  int k_;
  std::vector<std::vector<int>> approvals_;
  std::vector<std::string> names_;
  std::vector<Bitset> ballot_masks_;
  std::vector<std::vector<int>> supporters_;
  std::vector<Bitset> supporter_masks_;
  int empty_ballots_ = 0;
};

// Candidate and voter priorities used whenever a resolute rule has to break a
// tie. Position 0 is the most preferred.
class TieOrder {
 public:
  TieOrder() = default;
  TieOrder(std::vector<int> candidate_priority, std::vector<int> voter_priority = {});

  static TieOrder ascending() { return {}; }

  // True when a is preferred over b. Empty priority lists mean ascending index.
  bool candidate_before(int a, int b) const;
  bool voter_before(int a, int b) const;
  std::vector<int> candidates_in_order(int m) const;
  std::vector<int> voters_in_order(int n) const;

  void validate(int m, int n) const;

 private:
  std::vector<int> candidate_priority_;
  std::vector<int> candidate_rank_;
  std::vector<int> voter_priority_;
  std::vector<int> voter_rank_;
};

struct RuleResult {
  std::vector<Committee> committees;
  std::optional<Rational> score;
  std::string score_name = "score";
  std::vector<std::string> trace;
  // True when committees holds one representative per clone pattern instead
  // of the full expansion (see SearchOptions::expand_clones).
  bool representatives_only = false;

  const Committee& front() const { return committees.front(); }
  bool contains(const Committee& w) const;
};

struct ParseDiagnostics {
  int empty_ballots = 0;
};

ElectionInstance parse_profile(std::string_view text, ParseDiagnostics* diagnostics = nullptr);
std::string serialize_profile(const ElectionInstance& inst);
ElectionInstance load_profile(const std::string& path);

std::string format_committee(const ElectionInstance& inst, const Committee& w);
std::string format_committee(const Committee& w);
// "{a,b}" with labels, "{0,1}" with indices; braces optional.
Committee parse_committee(const ElectionInstance& inst, std::string_view text);

std::vector<int> welfare_vector(const ElectionInstance& inst, const Committee& w);
bool dominates(const ElectionInstance& inst, const Committee& w1, const Committee& w2);
int hamming(std::span<const int> x, std::span<const int> y);

// Binomial coefficient saturated at UINT64_MAX.
std::uint64_t binomial(int m, int k);

// Lexicographic stream of all k-subsets of 0..m-1.
class CommitteeEnumerator {
 public:
  CommitteeEnumerator(int m, int k, std::uint64_t cap = kDefaultCommitteeCap);

  std::uint64_t total() const { return total_; }
  // Writes the next committee into out; false once exhausted.
  bool next(Committee& out);

 private:
  int m_;
  int k_;
  std::uint64_t total_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Committee> enumerate_committees(int m, int k, std::uint64_t cap = kDefaultCommitteeCap);

}  // namespace abc
