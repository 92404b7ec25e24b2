#pragma once

// Closed-form bound quantities: A111384 in both of its forms, tetrahedral
// numbers, the quadratics f_n and g_n, the cubic v(n), and the residue-profile
// bound that drives search pruning.
//
// f, g and v take eighth-integer values, so they are exposed over an exact
// rational type instead of floating point.

#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "trisum/arith.hpp"

namespace trisum {

// Exact signed rational with 64-bit terms. The quantities in this module stay
// tiny; the checks just keep any misuse loud instead of silent.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t value) : num_(value) {}  // NOLINT: implicit on purpose

  Rat(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }

  friend bool operator==(const Rat& a, const Rat& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) noexcept { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) noexcept {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) noexcept { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) noexcept { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) noexcept { return !(a < b); }

 private:
  using i128 = __int128;

  static Rat make(i128 num, i128 den) {
    return Rat(checked_cast(num), checked_cast(den));
  }
  static std::int64_t checked_cast(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("rational term overflows 64 bits");
    }
    return static_cast<std::int64_t>(v);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

namespace detail {

// Guard so that the cubic products below cannot overflow even the 128-bit
// intermediates. Results this large would not fit 64 bits anyway.
inline constexpr std::uint64_t kCubicArgMax = std::uint64_t{5'000'000'000'000};

inline std::uint64_t narrow_u128(__uint128_t v, const char* what) {
  if (v > kElementMax) throw std::overflow_error(std::string(what) + " overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace detail

/// C(k, 2).
inline std::uint64_t binom2(std::uint64_t k) {
  if (k < 2) return 0;
  return detail::narrow_u128(__uint128_t(k) * (k - 1) / 2, "binomial(k,2)");
}

/// t(k) = k(k-1)(k-2)/6 = C(k, 3): the number of increasing triples that can
/// be drawn from a k-element set. Zero for k < 3.
inline std::uint64_t tetrahedral(std::uint64_t k) {
  if (k < 3) return 0;
  if (k > detail::kCubicArgMax) throw std::overflow_error("tetrahedral argument too large");
  return detail::narrow_u128(__uint128_t(k) * (k - 1) * (k - 2) / 6, "tetrahedral number");
}

/// A111384(n) as the closed form (n-2)n^2/8 for even n, (n-2)(n^2-1)/8 for
/// odd n. The division by 8 is exact.
inline std::uint64_t a111384_closed(std::uint64_t n) {
  if (n < 3) return 0;
  if (n > detail::kCubicArgMax) throw std::overflow_error("a111384 argument too large");
  const __uint128_t prod = (n % 2 == 0) ? __uint128_t(n - 2) * n * n
                                        : __uint128_t(n - 2) * (n - 1) * (n + 1);
  assert(prod % 8 == 0);
  return detail::narrow_u128(prod / 8, "a111384(n)");
}

/// A111384(n) as C(n,3) - C(floor(n/2),3) - C(ceil(n/2),3).
inline std::uint64_t a111384_binomial(std::uint64_t n) {
  return tetrahedral(n) - tetrahedral(n / 2) - tetrahedral(n - n / 2);
}

/// f_n(alpha) = (n-2)n^2/8 - (n-2)/2 (alpha - n/2)^2, the no-3 case bound.
/// At integer alpha this equals t(n) - t(alpha) - t(n - alpha).
inline Rat f_quadratic(std::int64_t n, std::int64_t alpha) {
  if (n < 3) throw std::domain_error("f_n requires n >= 3");
  if (alpha < 0 || alpha > n) throw std::domain_error("alpha outside [0, n]");
  // 8 f_n(alpha) = (n-2) (n^2 - (2 alpha - n)^2)
  const __int128 d = 2 * __int128(alpha) - n;
  const __int128 e = (__int128(n) - 2) * (__int128(n) * n - d * d);
  if (e > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("f_n overflows");
  return Rat(static_cast<std::int64_t>(e), 8);
}

/// g_n(alpha) = (n-1)(n-2)/2 + (n-5)(n-1-alpha) alpha / 2, the case bound when
/// 3 belongs to the set. alpha may be fractional.
inline Rat g_quadratic(std::int64_t n, const Rat& alpha) {
  if (n < 3) throw std::domain_error("g_n requires n >= 3");
  if (alpha < Rat(0) || alpha > Rat(n - 1)) throw std::domain_error("alpha outside [0, n-1]");
  return Rat((n - 1) * (n - 2), 2) + Rat(n - 5, 2) * (Rat(n - 1) - alpha) * alpha;
}

inline Rat g_quadratic(std::int64_t n, std::int64_t alpha) {
  return g_quadratic(n, Rat(alpha));
}

/// v(n) = g_n((n-1)/2) = (n^3 - 3n^2 - n + 3)/8; an integer iff n is odd.
inline Rat v_cubic(std::int64_t n) {
  if (n < 3) throw std::domain_error("v requires n >= 3");
  const __int128 e = (__int128(n) - 1) * (n + 1) * (n - 3);
  if (e > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("v overflows");
  return Rat(static_cast<std::int64_t>(e), 8);
}

// Counts of a set's elements in each residue class mod 3. For subsets of T,
// alpha0 is 0 or 1: only 3 itself has residue 0.
struct ClassProfile {
  std::uint64_t n = 0;
  std::uint64_t alpha0 = 0;
  std::uint64_t alpha1 = 0;
  std::uint64_t alpha2 = 0;

  friend bool operator==(const ClassProfile&, const ClassProfile&) = default;
};

/// Largest |S_M(A)| compatible with a residue profile alone: the number of
/// triples whose sum is not divisible by 3. With alpha0 = 0 that is
/// t(n) - t(alpha1) - t(alpha2); with 3 present, the pairs of equal residue
/// joined with 3 come back in. Never exceeds A111384(n).
inline std::uint64_t class_bound(const ClassProfile& p) {
  if (p.alpha0 + p.alpha1 + p.alpha2 != p.n) {
    throw std::domain_error("profile counts do not sum to n");
  }
  if (p.alpha0 > 1) throw std::domain_error("alpha0 > 1 is impossible within T");
  const std::uint64_t base =
      tetrahedral(p.n - p.alpha0) - tetrahedral(p.alpha1) - tetrahedral(p.alpha2);
  if (p.alpha0 == 0) return base;
  return base + binom2(p.alpha1) + binom2(p.alpha2);
}

}  // namespace trisum
