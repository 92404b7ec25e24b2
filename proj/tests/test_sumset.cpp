#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "trisum/bounds.hpp"
#include "trisum/sumset.hpp"

#include "oracles.hpp"

using trisum::a111384_closed;
using trisum::class_bound;
using trisum::Element;
using trisum::ElementSet;
using trisum::evaluate;
using trisum::SumReport;
using trisum::Universe;

namespace {

ElementSet set_of(std::initializer_list<Element> xs) {
  return ElementSet::from_values(std::vector<Element>(xs));
}

// n distinct picks from pool, sorted.
std::vector<Element> sample_distinct(std::mt19937& rng, const std::vector<Element>& pool,
                                     std::size_t n) {
  std::vector<Element> shuffled = pool;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  shuffled.resize(n);
  std::sort(shuffled.begin(), shuffled.end());
  return shuffled;
}

}  // namespace

TEST_CASE("element sets validate their input", "[sumset]") {
  CHECK(ElementSet::from_values({11, 5, 3}).values() == std::vector<Element>{3, 5, 11});
  CHECK_THROWS_AS(ElementSet::from_values({5, 3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(ElementSet::from_sorted({3, 3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(ElementSet::from_sorted({5, 3}), std::invalid_argument);
  const auto s = set_of({3, 5, 11});
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(7));
  const auto p = s.profile();
  CHECK(p.n == 3);
  CHECK(p.alpha0 == 1);
  CHECK(p.alpha1 == 0);
  CHECK(p.alpha2 == 2);
}

TEST_CASE("the known 8-set reaches 48 distinct prime sums", "[sumset]") {
  const auto rep =
      evaluate(set_of({499, 1483, 2777, 4363, 5237, 5507, 6043, 6197}), Universe::Primes);
  CHECK(rep.triple_count == 56);
  CHECK(rep.distinct_count == 48);
  CHECK(rep.sums.size() == 48);
  // every cross-class triple sums to a prime and no two sums collide, so the
  // whole bound chain is tight: 48 = 56 - t(4) - t(4) in-universe triples
  CHECK(rep.in_universe_triples == 48);
  CHECK(rep.collisions == 0);
}

TEST_CASE("evaluate matches the worked examples", "[sumset]") {
  const auto small = evaluate(set_of({3, 5, 11}), Universe::Primes);
  CHECK(small.sums == std::vector<Element>{19});
  CHECK(small.distinct_count == 1);

  const auto pair = evaluate(set_of({5, 7}), Universe::Primes);
  CHECK(pair.triple_count == 0);
  CHECK(pair.distinct_count == 0);
  CHECK(pair.sums.empty());

  const auto five = evaluate(set_of({3, 5, 7, 11, 13}), Universe::Primes);
  CHECK(five.triple_count == 10);
  CHECK(five.in_universe_triples == 5);
  CHECK(five.distinct_count == 4);
  CHECK(five.collisions == 1);
  CHECK(five.sums == std::vector<Element>{19, 23, 29, 31});

  const auto four = evaluate(set_of({5, 7, 17, 19}), Universe::Primes);
  CHECK(four.sums == std::vector<Element>{29, 31, 41, 43});
  CHECK(four.distinct_count == 4);
}

TEST_CASE("evaluate rejects out-of-universe elements", "[sumset]") {
  CHECK_THROWS_WITH(evaluate(set_of({4, 5, 11}), Universe::Primes),
                    Catch::Matchers::ContainsSubstring("4"));
  CHECK_THROWS_AS(evaluate(set_of({5, 6, 11}), Universe::TSet), std::invalid_argument);
  CHECK_NOTHROW(evaluate(set_of({4, 5, 11}), Universe::TSet));  // 4 is in T
}

TEST_CASE("empty and tiny sets give empty reports", "[sumset]") {
  CHECK(evaluate(ElementSet(), Universe::Primes).triple_count == 0);
  CHECK(evaluate(set_of({2}), Universe::Primes).distinct_count == 0);
}

TEST_CASE("all_sums_distinct on the worked examples", "[sumset]") {
  CHECK(trisum::all_sums_distinct(set_of({1, 2, 3, 4})));
  CHECK_FALSE(trisum::all_sums_distinct(set_of({1, 2, 3, 4, 5})));  // 1+4+5 = 2+3+5
  CHECK(trisum::all_sums_distinct(set_of({7, 11, 13})));
  CHECK(trisum::all_sums_distinct(set_of({7, 11})));
  CHECK(trisum::all_sums_distinct(ElementSet()));
}

TEST_CASE("swap_delta equals evaluate on the swapped set", "[sumset]") {
  const auto rep = trisum::swap_delta(set_of({3, 5, 11}), 3, 7, Universe::Primes);
  CHECK(rep.sums == std::vector<Element>{23});
  CHECK(rep.distinct_count == 1);

  const auto rep2 = trisum::swap_delta(set_of({5, 7, 17, 19}), 19, 23, Universe::Primes);
  CHECK(rep2.distinct_count == 2);
  CHECK(rep2.sums == std::vector<Element>{29, 47});

  CHECK_THROWS_AS(trisum::swap_delta(set_of({3, 5, 11}), 5, 11, Universe::Primes),
                  std::invalid_argument);
  CHECK_THROWS_AS(trisum::swap_delta(set_of({3, 5, 11}), 13, 7, Universe::Primes),
                  std::invalid_argument);
  CHECK_THROWS_AS(trisum::swap_delta(set_of({3, 5, 11}), 3, 9, Universe::Primes),
                  std::invalid_argument);
}

TEST_CASE("swap_delta is exhaustively consistent with evaluate", "[sumset]") {
  std::mt19937 rng(20240901);
  const auto pool = trisum::sieve_primes(500);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 4 + trial % 6;
    auto elems = sample_distinct(rng, pool, n);
    const auto base = ElementSet::from_sorted(elems);
    const Element out = elems[rng() % n];
    Element in = pool[rng() % pool.size()];
    while (base.contains(in)) in = pool[rng() % pool.size()];

    const auto swapped_direct = trisum::swap_delta(base, out, in, Universe::Primes);
    std::vector<Element> v;
    for (Element x : elems) {
      if (x != out) v.push_back(x);
    }
    v.push_back(in);
    REQUIRE(swapped_direct == evaluate(ElementSet::from_values(v), Universe::Primes));
  }
}

TEST_CASE("evaluate agrees with the naive recount on every small prime set", "[sumset]") {
  const auto pool = oracle::primes_upto(49);
  REQUIRE(pool.size() == 15);
  // all subsets of sizes 3..6
  for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
    const int bits = __builtin_popcount(mask);
    if (bits < 3 || bits > 6) continue;
    std::vector<Element> elems;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) elems.push_back(pool[i]);
    }
    const auto rep = evaluate(ElementSet::from_sorted(elems), Universe::Primes);
    const auto naive = oracle::recount(elems, true);
    REQUIRE(rep.triple_count == naive.triples);
    REQUIRE(rep.in_universe_triples == naive.in_universe);
    REQUIRE(rep.distinct_count == naive.distinct);
    REQUIRE(rep.sums == naive.sums);
  }
}

TEST_CASE("same-class triples never contribute", "[sumset]") {
  // all elements = 1 mod 3: every triple sum is divisible by 3
  const auto rep = evaluate(set_of({7, 13, 19}), Universe::Primes);
  CHECK(rep.distinct_count == 0);
  const auto rep_t = evaluate(set_of({7, 13, 19}), Universe::TSet);
  CHECK(rep_t.distinct_count == 0);
  const auto rep2 = evaluate(set_of({5, 11, 17, 23}), Universe::TSet);
  CHECK(rep2.distinct_count == 0);
}

TEST_CASE("random prime subsets respect both bounds", "[sumset]") {
  std::mt19937 rng(7);
  const auto pool = trisum::sieve_primes(2000);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const auto elems = sample_distinct(rng, pool, n);
    const auto set = ElementSet::from_sorted(elems);
    const auto rep = evaluate(set, Universe::Primes);
    REQUIRE(rep.distinct_count <= a111384_closed(n));
    REQUIRE(rep.distinct_count <= class_bound(set.profile()));
    REQUIRE(rep.distinct_count <= rep.in_universe_triples);
    REQUIRE(rep.in_universe_triples <= rep.triple_count);
  }
}

TEST_CASE("random T subsets respect the bound as well", "[sumset]") {
  std::mt19937 rng(8);
  std::vector<Element> pool;
  for (Element x = 1; x <= 600; ++x) {
    if (trisum::in_universe(Universe::TSet, x)) pool.push_back(x);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const auto set = ElementSet::from_sorted(sample_distinct(rng, pool, n));
    const auto rep = evaluate(set, Universe::TSet);
    REQUIRE(rep.distinct_count <= a111384_closed(n));
    REQUIRE(rep.distinct_count <= class_bound(set.profile()));
  }
}
