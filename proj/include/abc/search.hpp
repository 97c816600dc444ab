#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "abc/profile.hpp"

namespace abc {

enum class Execution { parallel, serial };

struct SearchOptions {
  std::uint64_t cap = kDefaultCommitteeCap;
  Execution execution = Execution::parallel;
  // Candidates with identical supporter sets are interchangeable for every
  // approval-based score, so only one committee per count vector is scored.
  bool merge_clones = true;
  // When false, winners are reported as one representative per count vector.
  bool expand_clones = true;
  std::size_t chunk = 4096;
};

struct CloneClasses {
  std::vector<std::vector<int>> classes;  // sorted members, classes ordered by first member
  std::vector<int> class_of;
};

CloneClasses clone_classes(const ElectionInstance& inst, bool merge = true);

// Number of count vectors s with 0 <= s_j <= size_j and sum k (saturating).
std::uint64_t count_vector_space(const CloneClasses& cc, int k);

// Bounded compositions of k over the clone classes, largest-first order.
class CountVectorCursor {
 public:
  CountVectorCursor(const CloneClasses& cc, int k);
  bool next(std::vector<int>& counts);

 private:
  void fill_from(std::size_t pos, int amount);

  std::vector<int> sizes_;
  std::vector<int> suffix_capacity_;
  std::vector<int> counts_;
  bool started_ = false;
  bool done_ = false;
};

// First s_j members of every class.
Committee representative(const CloneClasses& cc, const std::vector<int>& counts);

// All committees with the given count vector, sorted. Adds to out.
void expand_counts(const CloneClasses& cc, const std::vector<int>& counts, std::vector<Committee>& out);

std::uint64_t expansion_size(const CloneClasses& cc, const std::vector<int>& counts);

template <class Key>
struct SearchOutcome {
  Key best{};
  std::vector<Committee> committees;
  std::uint64_t evaluated = 0;
  bool representatives_only = false;
};

namespace detail {

template <class Key, class Better>
struct Leader {
  std::optional<Key> best;
  std::vector<std::vector<int>> winners;

  void offer(Key key, const std::vector<int>& counts, Better& better) {
    if (!best || better(key, *best)) {
      best = std::move(key);
      winners.assign(1, counts);
    } else if (!better(*best, key)) {
      winners.push_back(counts);
    }
  }
};

template <class Key, class Better>
SearchOutcome<Key> finish(const CloneClasses& cc, Leader<Key, Better>& leader, std::uint64_t evaluated,
                          const SearchOptions& opts) {
  SearchOutcome<Key> out;
  out.best = std::move(*leader.best);
  out.evaluated = evaluated;
  if (!opts.expand_clones) {
    out.representatives_only = true;
    for (const auto& counts : leader.winners) out.committees.push_back(representative(cc, counts));
    std::sort(out.committees.begin(), out.committees.end());
    return out;
  }
  std::uint64_t total = 0;
  for (const auto& counts : leader.winners) {
    std::uint64_t add = expansion_size(cc, counts);
    total = (add > opts.cap - total) ? opts.cap + 1 : total + add;
    if (total > opts.cap) throw CapExceeded("tied winners exceed committee cap");
  }
  out.committees.reserve(static_cast<std::size_t>(total));
  for (const auto& counts : leader.winners) expand_counts(cc, counts, out.committees);
  std::sort(out.committees.begin(), out.committees.end());
  return out;
}

void check_space(const CloneClasses& cc, int k, std::uint64_t cap);

}  // namespace detail

// Reference scan: one count vector at a time on the calling thread.
template <class Key, class Eval, class Better>
SearchOutcome<Key> search_optimal_serial(const ElectionInstance& inst, Eval&& eval, Better better,
                                         const SearchOptions& opts = {}) {
  CloneClasses cc = clone_classes(inst, opts.merge_clones);
  const int k = inst.committee_size();
  detail::check_space(cc, k, opts.cap);
  detail::Leader<Key, Better> leader;
  CountVectorCursor cursor(cc, k);
  std::vector<int> counts;
  std::uint64_t evaluated = 0;
  while (cursor.next(counts)) {
    leader.offer(eval(representative(cc, counts)), counts, better);
    ++evaluated;
  }
  return detail::finish(cc, leader, evaluated, opts);
}

// Chunked scan: a serial producer fills a chunk of count vectors, OpenMP
// threads score it, then keys are merged in production order.
template <class Key, class Eval, class Better>
SearchOutcome<Key> search_optimal_parallel(const ElectionInstance& inst, Eval&& eval, Better better,
                                           const SearchOptions& opts = {}) {
  CloneClasses cc = clone_classes(inst, opts.merge_clones);
  const int k = inst.committee_size();
  detail::check_space(cc, k, opts.cap);
  detail::Leader<Key, Better> leader;
  CountVectorCursor cursor(cc, k);
  const std::size_t chunk = std::max<std::size_t>(opts.chunk, 1);
  std::vector<std::vector<int>> batch;
  std::vector<std::optional<Key>> keys;
  std::uint64_t evaluated = 0;
  bool more = true;
  while (more) {
    batch.clear();
    std::vector<int> counts;
    while (batch.size() < chunk && (more = cursor.next(counts))) batch.push_back(counts);
    if (batch.empty()) break;
    keys.assign(batch.size(), std::nullopt);
    const long long size = static_cast<long long>(batch.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long b = 0; b < size; ++b) {
      keys[b].emplace(eval(representative(cc, batch[b])));
    }
    for (std::size_t b = 0; b < batch.size(); ++b) leader.offer(std::move(*keys[b]), batch[b], better);
    evaluated += batch.size();
  }
  return detail::finish(cc, leader, evaluated, opts);
}

template <class Key, class Eval, class Better>
SearchOutcome<Key> search_optimal(const ElectionInstance& inst, Eval&& eval, Better better,
                                  const SearchOptions& opts = {}) {
  if (opts.execution == Execution::serial) {
    return search_optimal_serial<Key>(inst, std::forward<Eval>(eval), better, opts);
  }
  return search_optimal_parallel<Key>(inst, std::forward<Eval>(eval), better, opts);
}

}  // namespace abc
