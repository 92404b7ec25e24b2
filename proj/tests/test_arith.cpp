#include <catch2/catch_amalgamated.hpp>

#include "trisum/arith.hpp"

#include "oracles.hpp"

using trisum::Element;
using trisum::Universe;

TEST_CASE("primality handles the small anchors", "[arith]") {
  CHECK(trisum::is_prime(2));
  CHECK_FALSE(trisum::is_prime(0));
  CHECK_FALSE(trisum::is_prime(1));
  CHECK(trisum::is_prime(3));
  CHECK(trisum::is_prime(6197));
  CHECK(trisum::is_prime(499));
}

TEST_CASE("primality rejects strong pseudoprimes", "[arith]") {
  // 3215031751 = 151 * 751 * 28351 fools bases {2, 3, 5, 7}.
  CHECK(151ULL * 751 * 28351 == 3215031751ULL);
  CHECK_FALSE(trisum::is_prime(3215031751ULL));
  // 3825123056546413051 fools every base up to 23.
  CHECK_FALSE(trisum::is_prime(3825123056546413051ULL));
  CHECK(3825123056546413051ULL == 149491ULL * 747451ULL * 34233211ULL);
}

TEST_CASE("primality is exact near the top of the range", "[arith]") {
  CHECK(trisum::is_prime((1ULL << 61) - 1));  // Mersenne
  CHECK(trisum::is_prime(18446744073709551557ULL));
  CHECK_FALSE(trisum::is_prime(18446744073709551555ULL));
}

TEST_CASE("primality agrees with trial division up to 10^6", "[arith]") {
  for (std::uint64_t x = 0; x <= 1000000; ++x) {
    if (trisum::is_prime(x) != oracle::is_prime_td(x)) {
      CAPTURE(x);
      REQUIRE(trisum::is_prime(x) == oracle::is_prime_td(x));
    }
  }
  SUCCEED();
}

TEST_CASE("sieve produces the expected prefixes", "[arith]") {
  CHECK(trisum::sieve_primes(10) == std::vector<Element>{2, 3, 5, 7});
  CHECK(trisum::sieve_primes(1).empty());
  CHECK(trisum::sieve_primes(0).empty());
  CHECK(trisum::sieve_primes(30) == std::vector<Element>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(trisum::sieve_primes(2) == std::vector<Element>{2});
}

TEST_CASE("sieve agrees with is_prime element-wise", "[arith]") {
  const auto primes = trisum::sieve_primes(100000);
  std::size_t at = 0;
  for (Element x = 0; x <= 100000; ++x) {
    const bool listed = at < primes.size() && primes[at] == x;
    if (listed) ++at;
    REQUIRE(listed == trisum::is_prime(x));
  }
  CHECK(at == primes.size());
}

TEST_CASE("sieve enforces its memory budget", "[arith]") {
  CHECK_THROWS_AS(trisum::sieve_primes(1000, 64), std::length_error);
}

TEST_CASE("universe membership", "[arith]") {
  CHECK(trisum::in_universe(Universe::TSet, 3));
  CHECK_FALSE(trisum::in_universe(Universe::TSet, 6));
  CHECK_FALSE(trisum::in_universe(Universe::TSet, 0));
  CHECK(trisum::in_universe(Universe::TSet, 2));
  CHECK(trisum::in_universe(Universe::TSet, 1));
  CHECK(trisum::in_universe(Universe::Primes, 2));
  CHECK_FALSE(trisum::in_universe(Universe::Primes, 9));
}

TEST_CASE("primes are contained in TSet", "[arith]") {
  for (Element p : trisum::sieve_primes(100000)) {
    REQUIRE(trisum::in_universe(Universe::TSet, p));
  }
}

TEST_CASE("residues mod 3", "[arith]") {
  CHECK(trisum::residue_mod3(10) == 1);
  CHECK(trisum::residue_mod3(29) == 2);
  CHECK(trisum::residue_mod3(3) == 0);
  CHECK(trisum::residue_mod3(0) == 0);
}

TEST_CASE("checked arithmetic fails loudly", "[arith]") {
  CHECK(trisum::checked_add(2, 3) == 5);
  CHECK_THROWS_AS(trisum::checked_add(trisum::kElementMax, 1), std::overflow_error);
  CHECK(trisum::checked_mul(1ULL << 31, 1ULL << 31) == (1ULL << 62));
  CHECK_THROWS_AS(trisum::checked_mul(1ULL << 32, 1ULL << 32), std::overflow_error);
}
