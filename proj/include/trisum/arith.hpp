#pragma once

// Exact 64-bit arithmetic, deterministic primality, residue classes mod 3,
// and membership in the two universes: the primes P and T = {3} u (N \ 3N).

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisum {

// Values live in [0, 2^64). Anything that would leave that range throws
// instead of wrapping.
using Element = std::uint64_t;

inline constexpr Element kElementMax = std::numeric_limits<Element>::max();

inline Element checked_add(Element a, Element b) {
  Element r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("addition overflows 64 bits: " + std::to_string(a) +
                              " + " + std::to_string(b));
  }
  return r;
}

inline Element checked_mul(Element a, Element b) {
  Element r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("multiplication overflows 64 bits: " +
                              std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

/// x mod 3, as a plain int in {0, 1, 2}.
inline int residue_mod3(Element x) noexcept { return static_cast<int>(x % 3); }

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// One strong-probable-prime round for odd n with n - 1 = 2^r * d, d odd.
inline bool sprp_round(std::uint64_t n, std::uint64_t d, int r, std::uint64_t a) noexcept {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Plain trial division. Slow but self-evident; kept as the independent second
// primality path used when re-verifying certificates.
inline bool is_prime_trial(std::uint64_t x) noexcept {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  if (x % 3 == 0) return x == 3;
  for (std::uint64_t p = 5; p <= x / p; p += 6) {
    if (x % p == 0 || x % (p + 2) == 0) return false;
  }
  return true;
}

}  // namespace detail

/// Deterministic primality over the whole 64-bit range: Miller-Rabin with the
/// first twelve primes as witnesses, which is exact for n < 3.3 * 10^24.
inline bool is_prime(Element x) noexcept {
  constexpr std::uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (x < 2) return false;
  for (std::uint64_t p : witnesses) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  std::uint64_t d = x - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : witnesses) {
    if (!detail::sprp_round(x, d, r, a)) return false;
  }
  return true;
}

enum class Universe { Primes, TSet };

inline const char* to_string(Universe u) noexcept {
  return u == Universe::Primes ? "primes" : "tset";
}

/// TSet holds 3 and every natural number not divisible by 3 (so 0 is out);
/// Primes defers to is_prime. Every prime belongs to TSet.
inline bool in_universe(Universe u, Element x) noexcept {
  if (u == Universe::TSet) return x == 3 || x % 3 != 0;
  return is_prime(x);
}

// Memory cap for sieves; one byte per number below the limit.
inline constexpr std::size_t kSieveBudgetBytes = std::size_t{1} << 28;

namespace detail {

// Byte-per-number sieve of Eratosthenes: flags[i] != 0 iff i is prime.
inline std::vector<std::uint8_t> sieve_flags(Element limit,
                                             std::size_t budget_bytes = kSieveBudgetBytes) {
  if (limit >= budget_bytes) {
    throw std::length_error("sieve limit " + std::to_string(limit) +
                            " exceeds the memory budget of " +
                            std::to_string(budget_bytes) + " bytes");
  }
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(limit) + 1, 1);
  flags[0] = 0;
  if (limit >= 1) flags[1] = 0;
  for (Element p = 2; p * p <= limit; ++p) {
    if (!flags[p]) continue;
    for (Element q = p * p; q <= limit; q += p) flags[q] = 0;
  }
  return flags;
}

}  // namespace detail

/// All primes p <= limit, ascending. Consistent with is_prime on every value
/// up to the limit. Throws std::length_error past the memory budget.
inline std::vector<Element> sieve_primes(Element limit,
                                         std::size_t budget_bytes = kSieveBudgetBytes) {
  if (limit < 2) return {};
  const auto flags = detail::sieve_flags(limit, budget_bytes);
  std::vector<Element> primes;
  primes.reserve(static_cast<std::size_t>(limit / 10) + 8);
  for (Element i = 2; i <= limit; ++i) {
    if (flags[i]) primes.push_back(i);
  }
  return primes;
}

}  // namespace trisum
