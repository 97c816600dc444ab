#include "abc/profile.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace abc {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bitset::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Committee::Committee(std::vector<int> ms) : members(std::move(ms)) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("committee contains a duplicate candidate");
  }
}

bool Committee::contains(int candidate) const {
  return std::binary_search(members.begin(), members.end(), candidate);
}

bool Committee::is_subset_of(const Committee& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

ElectionInstance::ElectionInstance(int num_candidates, int committee_size,
                                   std::vector<std::vector<int>> approvals,
                                   std::vector<std::string> names)
    : m_(num_candidates), k_(committee_size), approvals_(std::move(approvals)), names_(std::move(names)) {
  if (m_ < 1) throw std::invalid_argument("need at least one candidate");
  if (k_ < 1 || k_ > m_) throw std::invalid_argument("committee size must satisfy 1 <= k <= m");
  if (approvals_.empty()) throw std::invalid_argument("need at least one voter");
  if (!names_.empty() && static_cast<int>(names_.size()) != m_) {
    throw std::invalid_argument("names must list exactly m labels");
  }
  supporters_.assign(m_, {});
  supporter_masks_.assign(m_, Bitset(approvals_.size()));
  ballot_masks_.reserve(approvals_.size());
  for (std::size_t i = 0; i < approvals_.size(); ++i) {
    auto& ballot = approvals_[i];
    std::sort(ballot.begin(), ballot.end());
    if (std::adjacent_find(ballot.begin(), ballot.end()) != ballot.end()) {
      throw std::invalid_argument("duplicate candidate in ballot of voter " + std::to_string(i));
    }
    Bitset mask(m_);
    for (int c : ballot) {
      if (c < 0 || c >= m_) {
        throw std::invalid_argument("candidate index " + std::to_string(c) + " out of range");
      }
      mask.set(c);
      supporters_[c].push_back(static_cast<int>(i));
      supporter_masks_[c].set(i);
    }
    if (ballot.empty()) ++empty_ballots_;
    ballot_masks_.push_back(std::move(mask));
  }
}

std::string ElectionInstance::label(int candidate) const {
  return names_.empty() ? std::to_string(candidate) : names_[candidate];
}

ElectionInstance ElectionInstance::with_committee_size(int k) const {
  return ElectionInstance(m_, k, approvals_, names_);
}

ElectionInstance ElectionInstance::with_ballot(int voter, std::vector<int> ballot) const {
  auto copy = approvals_;
  copy.at(voter) = std::move(ballot);
  return ElectionInstance(m_, k_, std::move(copy), names_);
}

ElectionInstance ElectionInstance::with_extra_voters(const std::vector<std::vector<int>>& ballots) const {
  auto copy = approvals_;
  copy.insert(copy.end(), ballots.begin(), ballots.end());
  return ElectionInstance(m_, k_, std::move(copy), names_);
}

namespace {

std::vector<int> ranks_of(const std::vector<int>& priority, const char* what) {
  std::vector<int> rank(priority.size(), -1);
  for (std::size_t pos = 0; pos < priority.size(); ++pos) {
    int x = priority[pos];
    if (x < 0 || x >= static_cast<int>(priority.size()) || rank[x] != -1) {
      throw std::invalid_argument(std::string(what) + " priority is not a permutation");
    }
    rank[x] = static_cast<int>(pos);
  }
  return rank;
}

std::vector<int> ordered(const std::vector<int>& priority, int size) {
  if (priority.empty()) {
    std::vector<int> out(size);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  return priority;
}

}  // namespace

TieOrder::TieOrder(std::vector<int> candidate_priority, std::vector<int> voter_priority)
    : candidate_priority_(std::move(candidate_priority)),
      candidate_rank_(ranks_of(candidate_priority_, "candidate")),
      voter_priority_(std::move(voter_priority)),
      voter_rank_(ranks_of(voter_priority_, "voter")) {}

bool TieOrder::candidate_before(int a, int b) const {
  if (candidate_rank_.empty()) return a < b;
  return candidate_rank_[a] < candidate_rank_[b];
}

bool TieOrder::voter_before(int a, int b) const {
  if (voter_rank_.empty()) return a < b;
  return voter_rank_[a] < voter_rank_[b];
}

std::vector<int> TieOrder::candidates_in_order(int m) const { return ordered(candidate_priority_, m); }

std::vector<int> TieOrder::voters_in_order(int n) const { return ordered(voter_priority_, n); }

void TieOrder::validate(int m, int n) const {
  if (!candidate_priority_.empty() && static_cast<int>(candidate_priority_.size()) != m) {
    throw std::invalid_argument("candidate tie order must cover all m candidates");
  }
  if (!voter_priority_.empty() && static_cast<int>(voter_priority_.size()) != n) {
    throw std::invalid_argument("voter tie order must cover all n voters");
  }
}

bool RuleResult::contains(const Committee& w) const {
  return std::find(committees.begin(), committees.end(), w) != committees.end();
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long parse_int_token(const std::string& tok, int line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  }
  if (tok.size() > 9) throw ParseError(line, "integer too large: " + tok);
  return std::stoll(tok);
}

}  // namespace

ElectionInstance parse_profile(std::string_view text, ParseDiagnostics* diagnostics) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int m = -1;
  int k = -1;
  int header_line = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> ballots;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::string_view line(raw);
    line.remove_prefix(first);
    if (m < 0) {
      auto toks = split_ws(line);
      if (toks.size() != 2) throw ParseError(line_no, "header must be '<m> <k>'");
      m = static_cast<int>(parse_int_token(toks[0], line_no));
      k = static_cast<int>(parse_int_token(toks[1], line_no));
      if (m < 1) throw ParseError(line_no, "m must be positive");
      if (k < 1 || k > m) throw ParseError(line_no, "k out of range 1..m");
      header_line = line_no;
      continue;
    }
    if (line.rfind("names:", 0) == 0) {
      if (!names.empty() || !ballots.empty()) throw ParseError(line_no, "names line must precede ballots");
      names = split_ws(line.substr(6));
      if (static_cast<int>(names.size()) != m) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " labels");
      }
      if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
        throw ParseError(line_no, "duplicate label");
      }
      continue;
    }
    auto toks = split_ws(line);
    long long count = 1;
    std::size_t start = 0;
    if (toks.size() >= 2 && toks[1] == "*") {
      count = parse_int_token(toks[0], line_no);
      start = 2;
    } else if (!toks.empty() && toks[0].find('*') != std::string::npos) {
      throw ParseError(line_no, "multiplicity must be written '<count> *'");
    }
    std::vector<int> ballot;
    for (std::size_t t = start; t < toks.size(); ++t) {
      long long c = parse_int_token(toks[t], line_no);
      if (c >= m) throw ParseError(line_no, "candidate index " + toks[t] + " >= m");
      ballot.push_back(static_cast<int>(c));
    }
    std::vector<int> sorted = ballot;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(line_no, "duplicate candidate in ballot");
    }
    for (long long r = 0; r < count; ++r) ballots.push_back(sorted);
  }
  if (m < 0) throw ParseError(line_no, "missing '<m> <k>' header");
  if (ballots.empty()) throw ParseError(header_line, "profile has no voters");
  ElectionInstance inst(m, k, std::move(ballots), std::move(names));
  if (diagnostics) diagnostics->empty_ballots = inst.empty_ballot_count();
  return inst;
}

std::string serialize_profile(const ElectionInstance& inst) {
  std::ostringstream out;
  out << inst.num_candidates() << ' ' << inst.committee_size() << '\n';
  if (inst.has_names()) {
    out << "names:";
    for (const auto& label : inst.names()) out << ' ' << label;
    out << '\n';
  }
  const auto& ballots = inst.ballots();
  for (std::size_t i = 0; i < ballots.size();) {
    std::size_t j = i;
    while (j < ballots.size() && ballots[j] == ballots[i]) ++j;
    out << (j - i) << " *";
    for (int c : ballots[i]) out << ' ' << c;
    out << '\n';
    i = j;
  }
  return out.str();
}

ElectionInstance load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str());
}

std::string format_committee(const ElectionInstance& inst, const Committee& w) {
  std::string out = "{";
  for (std::size_t i = 0; i < w.members.size(); ++i) {
    if (i) out += ',';
    out += inst.label(w.members[i]);
  }
  return out + "}";
}

std::string format_committee(const Committee& w) {
  std::string out = "{";
  for (std::size_t i = 0; i < w.members.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.members[i]);
  }
  return out + "}";
}

Committee parse_committee(const ElectionInstance& inst, std::string_view text) {
  std::string body(text);
  body.erase(std::remove_if(body.begin(), body.end(), [](unsigned char ch) { return std::isspace(ch); }),
             body.end());
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw std::invalid_argument("unbalanced braces in committee");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> members;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty committee member");
    int index = -1;
    if (inst.has_names()) {
      auto it = std::find(inst.names().begin(), inst.names().end(), tok);
      if (it != inst.names().end()) index = static_cast<int>(it - inst.names().begin());
    }
    if (index < 0) {
      if (!std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
        throw std::invalid_argument("unknown candidate '" + tok + "'");
      }
      index = std::stoi(tok);
    }
    if (index >= inst.num_candidates()) throw std::invalid_argument("candidate out of range: " + tok);
    members.push_back(index);
  }
  return Committee(std::move(members));
}

std::vector<int> welfare_vector(const ElectionInstance& inst, const Committee& w) {
  std::vector<int> out(inst.num_voters(), 0);
  for (int c : w.members) {
    for (int i : inst.supporters(c)) ++out[i];
  }
  return out;
}

bool dominates(const ElectionInstance& inst, const Committee& w1, const Committee& w2) {
  auto a = welfare_vector(inst, w1);
  auto b = welfare_vector(inst, w2);
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

int hamming(std::span<const int> x, std::span<const int> y) {
  std::vector<int> a(x.begin(), x.end());
  std::vector<int> b(y.begin(), y.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  return static_cast<int>(diff.size());
}

std::uint64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(m - k + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

CommitteeEnumerator::CommitteeEnumerator(int m, int k, std::uint64_t cap)
    : m_(m), k_(k), total_(binomial(m, k)) {
  if (k < 1 || k > m) throw std::invalid_argument("enumeration needs 1 <= k <= m");
  if (total_ > cap) {
    throw CapExceeded("C(" + std::to_string(m) + "," + std::to_string(k) + ") exceeds committee cap " +
                      std::to_string(cap));
  }
  current_.resize(k);
  std::iota(current_.begin(), current_.end(), 0);
}

bool CommitteeEnumerator::next(Committee& out) {
  if (done_) return false;
  if (started_) {
    int i = k_ - 1;
    while (i >= 0 && current_[i] == m_ - k_ + i) --i;
    if (i < 0) {
      done_ = true;
      return false;
    }
    ++current_[i];
    for (int j = i + 1; j < k_; ++j) current_[j] = current_[j - 1] + 1;
  }
  started_ = true;
  out.members = current_;
  return true;
}

std::vector<Committee> enumerate_committees(int m, int k, std::uint64_t cap) {
  CommitteeEnumerator it(m, k, cap);
  std::vector<Committee> out;
  out.reserve(static_cast<std::size_t>(it.total()));
  Committee w;
  while (it.next(w)) out.push_back(w);
  return out;
}

}  // namespace abc
