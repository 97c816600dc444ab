#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "abc/search.hpp"
#include "abc/thiele.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace abc;

TEST_CASE("clone classes of the running example") {
  CloneClasses cc = clone_classes(fx::running());
  CHECK(cc.classes.size() == 7);
  CloneClasses party = clone_classes(fx::party_list_example());
  REQUIRE(party.classes.size() == 5);
  CHECK(party.classes[0].size() == 10);
  CHECK(party.classes[4].size() == 3);
  CHECK(party.class_of[24] == 4);
  CloneClasses flat = clone_classes(fx::party_list_example(), false);
  CHECK(flat.classes.size() == 25);
}

TEST_CASE("count vector space agrees with the cursor and with binomials") {
  CloneClasses party = clone_classes(fx::party_list_example());
  std::uint64_t seen = 0;
  std::uint64_t expanded = 0;
  CountVectorCursor cursor(party, 10);
  std::vector<int> counts;
  std::set<std::vector<int>> distinct;
  while (cursor.next(counts)) {
    ++seen;
    CHECK(std::accumulate(counts.begin(), counts.end(), 0) == 10);
    for (std::size_t j = 0; j < counts.size(); ++j) CHECK(counts[j] <= static_cast<int>(party.classes[j].size()));
    distinct.insert(counts);
    expanded += expansion_size(party, counts);
  }
  CHECK(seen == count_vector_space(party, 10));
  CHECK(distinct.size() == seen);
  CHECK(expanded == binomial(25, 10));
}

TEST_CASE("representative and expansion") {
  CloneClasses party = clone_classes(fx::party_list_example());
  std::vector<int> counts{6, 2, 1, 1, 0};
  Committee rep = representative(party, counts);
  CHECK(rep.members == std::vector<int>{0, 1, 2, 3, 4, 5, 10, 11, 16, 18});
  std::vector<Committee> all;
  expand_counts(party, counts, all);
  CHECK(all.size() == expansion_size(party, counts));
  CHECK(all.size() == binomial(10, 6) * binomial(6, 2) * 2 * 4);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all.front() == rep);
}

namespace {

SearchOutcome<Rational> pav_search(const ElectionInstance& inst, const SearchOptions& opts) {
  ThieleWeights w = ThieleWeights::pav();
  auto eval = [&](const Committee& c) { return thiele_score(inst, c, w); };
  return search_optimal<Rational>(inst, eval, std::greater<Rational>(), opts);
}

}  // namespace

TEST_CASE("parallel and serial scans agree, with and without clone merging") {
  oracle::Generator gen(21);
  for (int t = 0; t < 60; ++t) {
    ElectionInstance inst = gen.instance_upto(10, 8, 4);
    SearchOptions serial;
    serial.execution = Execution::serial;
    SearchOptions parallel;
    parallel.chunk = 3;
    SearchOptions flat = serial;
    flat.merge_clones = false;
    auto a = pav_search(inst, serial);
    auto b = pav_search(inst, parallel);
    auto c = pav_search(inst, flat);
    CHECK(a.best == b.best);
    CHECK(a.committees == b.committees);
    CHECK(a.best == c.best);
    CHECK(a.committees == c.committees);
    CHECK(c.evaluated == binomial(inst.num_candidates(), inst.committee_size()));
  }
}

TEST_CASE("clone merging shrinks the party-list scan") {
  ElectionInstance inst = fx::party_list_example();
  SearchOptions opts;
  opts.expand_clones = false;
  auto out = pav_search(inst, opts);
  CHECK(out.representatives_only);
  CHECK(out.evaluated == count_vector_space(clone_classes(inst), 10));
  CHECK(out.evaluated < 2000);
  REQUIRE(out.committees.size() == 1);
  CloneClasses cc = clone_classes(inst);
  std::vector<int> seats(5, 0);
  for (int c : out.committees[0].members) ++seats[cc.class_of[c]];
  CHECK(seats == std::vector<int>{7, 2, 1, 0, 0});
}

TEST_CASE("caps apply to the reduced space and to the expansion") {
  ElectionInstance inst = fx::party_list_example();
  SearchOptions tiny;
  tiny.cap = 10;
  CHECK_THROWS_AS(pav_search(inst, tiny), CapExceeded);
  SearchOptions mid;
  mid.cap = 5000;
  auto out = pav_search(inst, mid);
  CHECK(out.committees.size() == binomial(10, 7) * binomial(6, 2) * 2);
  mid.cap = 1000;
  CHECK_THROWS_AS(pav_search(inst, mid), CapExceeded);
  mid.expand_clones = false;
  CHECK(pav_search(inst, mid).committees.size() == 1);
}
