#include <catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "feyncount/compositions.hpp"

using namespace feyncount;

namespace {

// Independent oracle: recursive generation by first part.
std::set<std::vector<unsigned>> brute_force_compositions(unsigned n) {
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  std::function<void(unsigned)> rec = [&](unsigned left) {
    if (left == 0) {
      out.insert(prefix);
      return;
    }
    for (unsigned a = 1; a <= left; ++a) {
      prefix.push_back(a);
      rec(left - a);
      prefix.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<std::vector<unsigned>> collect(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& c : enumerate_compositions(n)) out.push_back(c.parts());
  return out;
}

}  // namespace

TEST_CASE("compositions of small totals", "[compositions]") {
  CHECK(collect(1) == std::vector<std::vector<unsigned>>{{1}});

  const auto three = collect(3);
  const std::set<std::vector<unsigned>> as_set(three.begin(), three.end());
  CHECK(as_set == std::set<std::vector<unsigned>>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
  CHECK(three.size() == 4);
}

TEST_CASE("the sixteen ways of adding five", "[compositions]") {
  const std::set<std::vector<unsigned>> listed{
      {5},
      {4, 1}, {1, 4}, {2, 3}, {3, 2},
      {1, 2, 2}, {2, 1, 2}, {2, 2, 1}, {3, 1, 1}, {1, 3, 1}, {1, 1, 3},
      {1, 1, 1, 2}, {1, 1, 2, 1}, {1, 2, 1, 1}, {2, 1, 1, 1},
      {1, 1, 1, 1, 1}};
  const auto five = collect(5);
  CHECK(five.size() == 16);
  CHECK(std::set<std::vector<unsigned>>(five.begin(), five.end()) == listed);
  CHECK(count_compositions(5) == 16);
}

TEST_CASE("cut-mask order", "[compositions]") {
  const auto four = collect(4);
  REQUIRE(four.size() == 8);
  CHECK(four.front() == std::vector<unsigned>{4});
  CHECK(four[1] == std::vector<unsigned>{1, 3});
  CHECK(four[2] == std::vector<unsigned>{2, 2});
  CHECK(four[3] == std::vector<unsigned>{1, 1, 2});
  CHECK(four.back() == std::vector<unsigned>{1, 1, 1, 1});
  CHECK(collect(9) == collect(9));
}

TEST_CASE("zero composes only as the empty sequence", "[compositions]") {
  const auto zero = collect(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.front().empty());
  CHECK(count_compositions(0) == 1);
}

TEST_CASE("stream matches brute force and 2^(n-1)", "[compositions][property]") {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto streamed = collect(n);
    const std::set<std::vector<unsigned>> unique(streamed.begin(), streamed.end());
    INFO("n = " << n);
    CHECK(unique.size() == streamed.size());
    CHECK(unique == brute_force_compositions(n));
    CHECK(count_compositions(n) == Count(streamed.size()));
  }
  for (unsigned n = 13; n <= 16; ++n) {
    std::uint64_t k = 0;
    for (const auto& c : enumerate_compositions(n)) {
      REQUIRE(c.total() == n);
      ++k;
    }
    CHECK(Count(k) == count_compositions(n));
  }
  std::uint64_t twelve = 0;
  for ([[maybe_unused]] const auto& c : enumerate_compositions(12)) ++twelve;
  CHECK(twelve == 2048);
}

TEST_CASE("mask windows concatenate to the full order", "[compositions][property]") {
  const unsigned n = 11;
  const auto full = collect(n);
  const std::uint64_t total = CompositionRange::mask_count(n);
  for (std::uint64_t shards : {1u, 2u, 3u, 7u, 64u}) {
    std::vector<std::vector<unsigned>> joined;
    for (std::uint64_t s = 0; s < shards; ++s) {
      const std::uint64_t lo = total * s / shards, hi = total * (s + 1) / shards;
      for (const auto& c : CompositionRange(n, lo, hi)) joined.push_back(c.parts());
    }
    CHECK(joined == full);
  }
  CHECK_THROWS_AS(CompositionRange(4, 3, 9), std::out_of_range);
}

TEST_CASE("composition invariants", "[compositions]") {
  CHECK_THROWS_AS(Composition({2, 0, 1}), std::invalid_argument);
  const Composition c({3, 1, 1});
  CHECK(c.total() == 5);
  CHECK(c.to_string() == "3+1+1");
  CHECK_THROWS_AS(composition_from_mask(65, 0), std::out_of_range);
  CHECK_THROWS_AS(composition_from_mask(3, 4), std::out_of_range);
}

TEST_CASE("multiset multiplicities", "[compositions]") {
  CHECK(multiset_multiplicity({{3, 1}, {1, 2}}) == 3);
  CHECK(multiset_multiplicity({{7, 1}}) == 1);
  CHECK(multiset_multiplicity({{2, 2}, {1, 1}}) == 3);
  CHECK(multiset_multiplicity({{1, 3}, {2, 2}, {5, 1}}) == 60);
  CHECK_THROWS_AS(multiset_multiplicity({}), std::invalid_argument);
  CHECK_THROWS_AS(multiset_multiplicity({{2, 0}}), std::invalid_argument);

  // {2:2, 1:1} by filtering the brute-force list of 5.
  std::size_t hits = 0;
  for (const auto& parts : brute_force_compositions(5))
    if (part_multiset(Composition(parts)) == PartMultiset{{2, 2}, {1, 1}}) ++hits;
  CHECK(hits == 3);
}

TEST_CASE("grouping by multiset is lossless", "[compositions][property]") {
  for (unsigned n = 1; n <= 10; ++n) {
    std::map<PartMultiset, std::uint64_t> observed;
    for (const auto& c : enumerate_compositions(n)) ++observed[part_multiset(c)];
    Count sum = 0;
    for (const auto& [ms, k] : observed) {
      CHECK(multiset_total(ms) == n);
      CHECK(multiset_multiplicity(ms) == Count(k));
      sum += multiset_multiplicity(ms);
    }
    CHECK(sum == count_compositions(n));
  }
}
