#pragma once

// Extremal subsets of T built from powers of three: a_k = 3^(k+1) + 1 for odd
// k and 3^(k+1) + 2 for even k. All triple sums are pairwise distinct and the
// distinct in-universe count meets A111384(n) exactly.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trisum/arith.hpp"
#include "trisum/bounds.hpp"
#include "trisum/sumset.hpp"

namespace trisum {

// 3^(n+1) + 2 and every triple sum must stay inside 64 bits.
inline constexpr int kConstructMaxN = 36;

class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The n-element set {a_1, ..., a_n}. Odd indices land in residue class 1,
/// even indices in class 2, so the profile is (0, ceil(n/2), floor(n/2)).
inline ElementSet construct(int n) {
  if (n < 0) throw std::domain_error("construct requires n >= 0");
  if (n > kConstructMaxN) {
    throw std::range_error("construct(" + std::to_string(n) + "): 3^" +
                           std::to_string(n + 1) + "+2 leaves the supported range");
  }
  std::vector<Element> v;
  v.reserve(static_cast<std::size_t>(n));
  Element pow = 9;  // 3^(k+1) at k = 1
  for (int k = 1; k <= n; ++k) {
    v.push_back(checked_add(pow, k % 2 == 1 ? 1 : 2));
    pow = checked_mul(pow, 3);
  }
  return ElementSet::from_sorted(std::move(v));
}

struct TernaryWitness {
  int n = 0;
  ElementSet set;
  SumReport report;         // evaluated under TSet
  std::uint64_t bound = 0;  // A111384(n)
  bool distinct_ok = false;
};

/// Builds the set and checks both claims numerically: all triple sums are
/// pairwise distinct, and |S_T(A_n)| = A111384(n). A failed check for n >= 3
/// throws; it would mean an implementation bug, not a property of the set.
inline TernaryWitness verify(int n) {
  TernaryWitness w;
  w.n = n;
  w.set = construct(n);
  w.bound = a111384_closed(static_cast<std::uint64_t>(n));
  w.distinct_ok = all_sums_distinct(w.set);
  w.report = evaluate(w.set, Universe::TSet);
  if (n >= 3) {
    if (!w.distinct_ok) {
      throw verification_error("verify(" + std::to_string(n) +
                               "): triple sums are not pairwise distinct");
    }
    if (w.report.distinct_count != w.bound) {
      throw verification_error("verify(" + std::to_string(n) + "): |S_T(A_n)| = " +
                               std::to_string(w.report.distinct_count) +
                               " != A111384(n) = " + std::to_string(w.bound));
    }
  }
  return w;
}

}  // namespace trisum
