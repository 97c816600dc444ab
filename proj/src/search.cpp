#include "abc/search.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace abc {

CloneClasses clone_classes(const ElectionInstance& inst, bool merge) {
  CloneClasses cc;
  const int m = inst.num_candidates();
  cc.class_of.assign(m, -1);
  if (!merge) {
    for (int c = 0; c < m; ++c) {
      cc.class_of[c] = c;
      cc.classes.push_back({c});
    }
    return cc;
  }
  std::map<Bitset, int> seen;
  for (int c = 0; c < m; ++c) {
    auto [it, fresh] = seen.emplace(inst.supporter_mask(c), static_cast<int>(cc.classes.size()));
    if (fresh) cc.classes.emplace_back();
    cc.classes[it->second].push_back(c);
    cc.class_of[c] = it->second;
  }
  return cc;
}

std::uint64_t count_vector_space(const CloneClasses& cc, int k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> ways(k + 1, 0);
  ways[0] = 1;
  for (const auto& cls : cc.classes) {
    std::vector<std::uint64_t> next(k + 1, 0);
    for (int t = 0; t <= k; ++t) {
      if (!ways[t]) continue;
      for (int s = 0; s <= static_cast<int>(cls.size()) && t + s <= k; ++s) {
        next[t + s] = (next[t + s] > kMax - ways[t]) ? kMax : next[t + s] + ways[t];
      }
    }
    ways = std::move(next);
  }
  return ways[k];
}

CountVectorCursor::CountVectorCursor(const CloneClasses& cc, int k) {
  for (const auto& cls : cc.classes) sizes_.push_back(static_cast<int>(cls.size()));
  suffix_capacity_.assign(sizes_.size() + 1, 0);
  for (std::size_t j = sizes_.size(); j-- > 0;) suffix_capacity_[j] = suffix_capacity_[j + 1] + sizes_[j];
  if (k > suffix_capacity_[0]) throw std::invalid_argument("committee size exceeds candidate count");
  counts_.assign(sizes_.size(), 0);
  fill_from(0, k);
}

void CountVectorCursor::fill_from(std::size_t pos, int amount) {
  for (std::size_t j = pos; j < sizes_.size(); ++j) {
    counts_[j] = std::min(amount, sizes_[j]);
    amount -= counts_[j];
  }
}

bool CountVectorCursor::next(std::vector<int>& counts) {
  if (done_) return false;
  if (started_) {
    bool advanced = false;
    int rest = 0;
    for (std::size_t j = sizes_.size(); j-- > 0;) {
      if (counts_[j] > 0 && rest + 1 <= suffix_capacity_[j + 1]) {
        --counts_[j];
        fill_from(j + 1, rest + 1);
        advanced = true;
        break;
      }
      rest += counts_[j];
    }
    if (!advanced) {
      done_ = true;
      return false;
    }
  }
  started_ = true;
  counts = counts_;
  return true;
}

Committee representative(const CloneClasses& cc, const std::vector<int>& counts) {
  std::vector<int> members;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    members.insert(members.end(), cc.classes[j].begin(), cc.classes[j].begin() + counts[j]);
  }
  std::sort(members.begin(), members.end());
  Committee w;
  w.members = std::move(members);
  return w;
}

std::uint64_t expansion_size(const CloneClasses& cc, const std::vector<int>& counts) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    std::uint64_t b = binomial(static_cast<int>(cc.classes[j].size()), counts[j]);
    if (b != 0 && total > kMax / b) return kMax;
    total *= b;
  }
  return total;
}

namespace {

void expand_rec(const CloneClasses& cc, const std::vector<int>& counts, std::size_t j, std::vector<int>& acc,
                std::vector<Committee>& out) {
  if (j == counts.size()) {
    Committee w;
    w.members = acc;
    std::sort(w.members.begin(), w.members.end());
    out.push_back(std::move(w));
    return;
  }
  const auto& cls = cc.classes[j];
  const int s = counts[j];
  if (s == 0) {
    expand_rec(cc, counts, j + 1, acc, out);
    return;
  }
  std::vector<int> pick(s);
  for (int t = 0; t < s; ++t) pick[t] = t;
  const int size = static_cast<int>(cls.size());
  while (true) {
    for (int t : pick) acc.push_back(cls[t]);
    expand_rec(cc, counts, j + 1, acc, out);
    acc.resize(acc.size() - s);
    int i = s - 1;
    while (i >= 0 && pick[i] == size - s + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int t = i + 1; t < s; ++t) pick[t] = pick[t - 1] + 1;
  }
}

}  // namespace

void expand_counts(const CloneClasses& cc, const std::vector<int>& counts, std::vector<Committee>& out) {
  std::vector<int> acc;
  expand_rec(cc, counts, 0, acc, out);
}

namespace detail {

void check_space(const CloneClasses& cc, int k, std::uint64_t cap) {
  if (count_vector_space(cc, k) > cap) {
    throw CapExceeded("committee search space exceeds cap " + std::to_string(cap));
  }
}

}  // namespace detail

}  // namespace abc
