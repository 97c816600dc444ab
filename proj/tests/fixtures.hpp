#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abc/profile.hpp"

namespace fx {

using abc::Committee;
using abc::ElectionInstance;

struct Block {
  int count;
  std::string ballot;  // candidate letters, "" for an empty ballot
};

inline std::vector<std::string> letter_names(int m) {
  std::vector<std::string> names;
  for (int c = 0; c < m; ++c) names.push_back(std::string(1, static_cast<char>('a' + c)));
  return names;
}

inline std::vector<int> letters(const std::string& s) {
  std::vector<int> out;
  for (char ch : s) out.push_back(ch - 'a');
  return out;
}

inline ElectionInstance profile(int m, int k, const std::vector<Block>& blocks) {
  std::vector<std::vector<int>> ballots;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.count; ++i) ballots.push_back(letters(b.ballot));
  }
  return ElectionInstance(m, k, std::move(ballots), letter_names(m));
}

inline Committee cw(const std::string& s) { return Committee(letters(s)); }

inline std::vector<Committee> cws(std::initializer_list<const char*> list) {
  std::vector<Committee> out;
  for (const char* s : list) out.push_back(cw(s));
  return out;
}

inline std::vector<Committee> cws(const std::vector<std::string>& list) {
  std::vector<Committee> out;
  for (const auto& s : list) out.push_back(cw(s));
  return out;
}

// Steering committee election: 12 voters, 7 candidates, k = 4.
inline ElectionInstance running() {
  return profile(7, 4, {{3, "ab"}, {3, "ac"}, {2, "ad"}, {1, "bcf"}, {1, "e"}, {1, "f"}, {1, "g"}});
}

inline ElectionInstance seqpav_example() {
  return profile(4, 2, {{3, "ab"}, {6, "ad"}, {4, "b"}, {5, "c"}, {5, "cd"}});
}

inline ElectionInstance rulex_example() {
  ElectionInstance base = profile(5, 4, {{11, "abc"}, {9, "abcde"}, {4, "abde"}, {6, "de"}});
  return base;
}

inline ElectionInstance mav_example() { return profile(3, 1, {{99, "a"}, {1, "bc"}}); }
inline ElectionInstance lexmav_example() { return profile(3, 1, {{99, "a"}, {1, "abc"}}); }
inline ElectionInstance sav_example() { return profile(5, 1, {{1, "a"}, {3, "bcde"}}); }

inline ElectionInstance revseq_nonstandard() {
  return profile(4, 1, {{1, "ab"}, {1, "abc"}, {1, "abd"}, {2, "acd"}, {1, "b"}, {1, "c"}, {1, "d"}});
}

inline ElectionInstance monroe_pareto() {
  return profile(4, 2, {{2, "a"}, {1, "ac"}, {1, "ad"}, {10, "bc"}, {10, "bd"}});
}

// Candidates a, b, x, y.
inline ElectionInstance named(int k, const std::vector<std::string>& names,
                              const std::vector<std::vector<std::string>>& ballots) {
  std::vector<std::vector<int>> out;
  for (const auto& ballot : ballots) {
    std::vector<int> b;
    for (const auto& label : ballot) {
      for (std::size_t c = 0; c < names.size(); ++c) {
        if (names[c] == label) b.push_back(static_cast<int>(c));
      }
    }
    out.push_back(b);
  }
  return ElectionInstance(static_cast<int>(names.size()), k, out, names);
}

inline ElectionInstance consistency_a() {
  return named(2, {"a", "b", "x", "y"}, {{"a", "y"}, {"a", "y"}, {"b", "y"}, {"b", "y"}});
}

inline ElectionInstance consistency_a_prime() {
  return named(2, {"a", "b", "x", "y"},
               {{"y"}, {"a"}, {"a", "x"}, {"a", "x"}, {"a", "x"}, {"a", "x"},
                {"y"}, {"b", "y"}, {"b", "x"}, {"b", "x"}, {"b", "x"}, {"b", "x"}});
}

inline ElectionInstance cohesive_cycle() {
  return profile(4, 3, {{1, "ad"}, {2, "a"}, {1, "ab"}, {2, "b"}, {1, "bc"}, {2, "c"}, {1, "cd"}, {2, "d"}});
}

// k groups of `group` voters; group i approves c_i and the shared block
// c_{k+1}..c_{2k}. Candidate c_j has index j-1.
inline ElectionInstance block_example(int k, int group) {
  std::vector<std::vector<int>> ballots;
  for (int i = 0; i < k; ++i) {
    std::vector<int> b{i};
    for (int j = k; j < 2 * k; ++j) b.push_back(j);
    for (int g = 0; g < group; ++g) ballots.push_back(b);
  }
  return ElectionInstance(2 * k, k, ballots);
}

inline Committee range(int from, int to) {
  std::vector<int> ms;
  for (int c = from; c <= to; ++c) ms.push_back(c);
  return Committee(ms);
}

inline std::vector<std::string> c_names(int m) {
  std::vector<std::string> names;
  for (int c = 1; c <= m; ++c) names.push_back("c" + std::to_string(c));
  return names;
}

// 15 candidates c1..c15 (indices 0..14), 6 voters, k = 12.
inline ElectionInstance laminar_example() {
  std::vector<std::vector<int>> ballots{
      {0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}, {6, 7, 8}, {9, 10, 11}, {12, 13, 14}};
  return ElectionInstance(15, 12, ballots, c_names(15));
}

inline Committee laminar_w1() { return Committee({0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 13}); }
inline Committee laminar_w2() { return Committee({0, 1, 2, 6, 7, 8, 9, 10, 11, 12, 13, 14}); }

// Parties with 60/20/10/8/2 voters over 10/6/2/4/3 candidates, k = 10.
inline ElectionInstance party_list_example() {
  const std::vector<int> votes{60, 20, 10, 8, 2};
  const std::vector<int> sizes{10, 6, 2, 4, 3};
  std::vector<std::vector<int>> ballots;
  int next = 0;
  for (std::size_t p = 0; p < votes.size(); ++p) {
    std::vector<int> b;
    for (int j = 0; j < sizes[p]; ++j) b.push_back(next++);
    for (int v = 0; v < votes[p]; ++v) ballots.push_back(b);
  }
  return ElectionInstance(next, 10, ballots);
}

// Party-list instance from vote counts; every party fields k candidates.
inline ElectionInstance party_list(const std::vector<int>& votes, int k) {
  std::vector<std::vector<int>> ballots;
  int next = 0;
  for (int v : votes) {
    std::vector<int> b;
    for (int j = 0; j < k; ++j) b.push_back(next++);
    for (int i = 0; i < v; ++i) ballots.push_back(b);
  }
  return ElectionInstance(next, k, ballots);
}

namespace counter {

inline ElectionInstance cc_pareto() { return profile(4, 2, {{1, "acd"}, {1, "bcd"}}); }
inline ElectionInstance mav_pareto() { return profile(5, 1, {{1, "ac"}, {1, "bc"}, {1, "de"}}); }

inline ElectionInstance monotonicity_literal() {
  return profile(3, 1, {{2, "a"}, {3, "ac"}, {3, "bc"}, {2, "c"}});
}
// Same profile with the 2 x {b} block the stated outcomes require.
inline ElectionInstance monotonicity_corrected() {
  return profile(3, 1, {{2, "a"}, {3, "ac"}, {3, "bc"}, {2, "b"}});
}

inline ElectionInstance monotonicity_greedy_monroe() {
  return profile(4, 2, {{6, "a"}, {4, "ac"}, {2, "abc"}, {2, "a"}, {1, "ad"}, {3, "bd"}});
}

inline ElectionInstance monotonicity_rule_x() {
  return profile(4, 2, {{4, "ac"}, {2, "ad"}, {3, "bd"}, {1, "b"}});
}

inline ElectionInstance candmon_greedy_monroe() {
  return profile(8, 3,
                 {{1, "bcd"}, {1, "acf"}, {1, "ade"}, {1, "ce"}, {1, "ab"}, {2, "df"}, {1, "be"}, {1, "bf"}});
}

inline ElectionInstance candmon_rule_x() {
  return profile(5, 3,
                 {{1, "bd"}, {1, "ab"}, {1, "bde"}, {1, "ae"}, {2, "cde"}, {1, "ce"}, {1, "ace"}, {1, "bcd"}});
}

inline ElectionInstance supmon_seq_pav() {
  return profile(6, 3, {{1, "bc"}, {1, "bd"}, {1, "ef"}, {2, "ae"}, {1, "cf"}, {1, "ab"}, {1, "bf"}});
}

inline ElectionInstance supmon_revseq_pav() {
  return profile(5, 3, {{2, "ae"}, {2, "bcd"}, {1, "de"}, {3, "ce"}, {1, "bde"}, {1, "abc"}, {1, "cde"},
                        {2, "ade"}, {1, "bd"}, {1, "ab"}, {1, "ad"}, {1, "abd"}, {1, "bc"}});
}

// Manipulation fixtures: the honest profile; voter 0 is the manipulator.
inline ElectionInstance sp_sav() { return profile(5, 1, {{1, "abc"}, {1, "de"}}); }
inline ElectionInstance sp_revseq_pav() {
  return profile(6, 2, {{1, "abc"}, {1, "bd"}, {1, "bc"}, {1, "ade"}, {1, "be"}});
}
inline ElectionInstance sp_seq_phragmen() {
  return profile(6, 2, {{1, "abc"}, {1, "ab"}, {1, "bf"}, {1, "ce"}, {1, "bef"}, {1, "bdf"}});
}
inline ElectionInstance sp_seq_pav() {
  return profile(6, 3, {{1, "ab"}, {1, "bd"}, {1, "cf"}, {1, "abf"}, {1, "bf"}, {1, "bc"}});
}
inline ElectionInstance sp_mav() {
  return profile(6, 3, {{1, "abc"}, {1, "bd"}, {2, "abe"}, {1, "abd"}, {1, "ab"}});
}
inline ElectionInstance sp_pav() {
  return profile(6, 3, {{1, "cde"}, {1, "ab"}, {1, "bf"}, {1, "acd"}, {1, "bcf"}, {1, "cef"}});
}
inline ElectionInstance sp_rule_x() {
  return profile(6, 3, {{1, "bcd"}, {1, "ab"}, {1, "bd"}, {1, "cd"}, {2, "de"}});
}
inline ElectionInstance sp_greedy_monroe() {
  return profile(6, 2, {{1, "ab"}, {1, "acf"}, {1, "acd"}, {1, "ef"}});
}
inline ElectionInstance sp_monroe() {
  return profile(6, 3, {{1, "bd"}, {1, "abc"}, {1, "be"}, {1, "de"}, {1, "ef"}, {1, "bce"},
                        {1, "cde"}, {1, "bc"}, {2, "af"}, {1, "bcd"}, {1, "ad"}});
}
inline ElectionInstance sp_seq_cc() {
  return profile(6, 3, {{1, "bef"}, {1, "ab"}, {1, "def"}, {1, "de"}, {1, "bf"}, {2, "cd"},
                        {1, "abc"}, {1, "ac"}, {1, "abe"}, {1, "aef"}, {1, "bcd"}});
}

inline ElectionInstance pr_pareto() {
  return profile(4, 2, {{2, "ac"}, {1, "acd"}, {1, "ad"}, {1, "bd"}, {3, "bc"}});
}

// l voters approve a_1..a_k, the other k - l approve b_1..b_k; k = 2l + 1.
inline ElectionInstance degree_sav(int l) {
  const int k = 2 * l + 1;
  std::vector<std::vector<int>> ballots;
  std::vector<int> a, b;
  for (int j = 0; j < k; ++j) {
    a.push_back(j);
    b.push_back(k + j);
  }
  for (int i = 0; i < l; ++i) ballots.push_back(a);
  for (int i = l; i < k; ++i) ballots.push_back(b);
  return ElectionInstance(2 * k, k, ballots);
}

// l voters approve a_1..a_k, one voter approves b_1..b_{3k+1}; k = l + 1.
inline ElectionInstance degree_mav(int l) {
  const int k = l + 1;
  std::vector<std::vector<int>> ballots;
  std::vector<int> a, b;
  for (int j = 0; j < k; ++j) a.push_back(j);
  for (int j = 0; j < 3 * k + 1; ++j) b.push_back(k + j);
  for (int i = 0; i < l; ++i) ballots.push_back(a);
  ballots.push_back(b);
  return ElectionInstance(4 * k + 1, k, ballots);
}

// Groups N_i of size i approve blocks C_i of size i; the first voter of every
// group also approves the shared block A of size l. n = k = l(l+1)/2.
struct TriangularInstance {
  ElectionInstance inst;
  std::vector<int> tie;         // C_l first, then C_{l-1}, ..., then A
  Committee blocks;             // C_1 u ... u C_l
  std::vector<int> a_voters;    // first voter of each group
  std::vector<int> a_block;
};

inline TriangularInstance degree_rule_x(int l) {
  const int k = l * (l + 1) / 2;
  std::vector<std::vector<int>> ballots;
  std::vector<std::vector<int>> blocks(l + 1);
  int next = 0;
  for (int i = 1; i <= l; ++i) {
    for (int j = 0; j < i; ++j) blocks[i].push_back(next++);
  }
  std::vector<int> a_block;
  for (int j = 0; j < l; ++j) a_block.push_back(next++);
  std::vector<int> a_voters;
  for (int i = 1; i <= l; ++i) {
    for (int v = 0; v < i; ++v) {
      std::vector<int> b = blocks[i];
      if (v == 0) {
        a_voters.push_back(static_cast<int>(ballots.size()));
        b.insert(b.end(), a_block.begin(), a_block.end());
      }
      ballots.push_back(b);
    }
  }
  std::vector<int> tie;
  for (int i = l; i >= 1; --i) tie.insert(tie.end(), blocks[i].begin(), blocks[i].end());
  tie.insert(tie.end(), a_block.begin(), a_block.end());
  std::vector<int> all;
  for (int i = 1; i <= l; ++i) all.insert(all.end(), blocks[i].begin(), blocks[i].end());
  return {ElectionInstance(k + l, k, ballots), tie, Committee(all), a_voters, a_block};
}

}  // namespace counter

}  // namespace fx
