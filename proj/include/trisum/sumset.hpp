#pragma once

// Exact evaluation of S_M(A): enumerate the increasing triples of a finite
// set, keep the sums that land in the universe, and account for everything
// seen on the way.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trisum/arith.hpp"
#include "trisum/bounds.hpp"

namespace trisum {

// Strictly increasing, duplicate-free list of elements.
class ElementSet {
 public:
  ElementSet() = default;

  /// Sorts the input and rejects duplicates.
  static ElementSet from_values(std::vector<Element> values) {
    std::sort(values.begin(), values.end());
    const auto dup = std::adjacent_find(values.begin(), values.end());
    if (dup != values.end()) {
      throw std::invalid_argument("duplicate element " + std::to_string(*dup));
    }
    return ElementSet(std::move(values));
  }

  /// For callers that already hold a strictly increasing list.
  static ElementSet from_sorted(std::vector<Element> values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i - 1] >= values[i]) {
        throw std::invalid_argument("elements are not strictly increasing");
      }
    }
    return ElementSet(std::move(values));
  }

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const std::vector<Element>& values() const noexcept { return elems_; }
  Element operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool contains(Element x) const noexcept {
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

  ClassProfile profile() const noexcept {
    ClassProfile p;
    p.n = elems_.size();
    for (Element x : elems_) {
      const int r = residue_mod3(x);
      if (r == 0) {
        ++p.alpha0;
      } else if (r == 1) {
        ++p.alpha1;
      } else {
        ++p.alpha2;
      }
    }
    return p;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  explicit ElementSet(std::vector<Element> v) : elems_(std::move(v)) {}

  std::vector<Element> elems_;
};

// Full accounting of one S_M(A) evaluation.
struct SumReport {
  std::uint64_t triple_count = 0;         // C(|A|, 3)
  std::uint64_t in_universe_triples = 0;  // triples whose sum lies in M
  std::uint64_t distinct_count = 0;       // |S_M(A)|
  std::uint64_t collisions = 0;           // in_universe_triples - distinct_count
  std::vector<Element> sums;              // S_M(A), strictly increasing

  friend bool operator==(const SumReport&, const SumReport&) = default;
};

/// S_M(A) with full accounting. Every element of A must belong to the
/// universe; sets with fewer than three elements yield the empty report.
inline SumReport evaluate(const ElementSet& a, Universe u) {
  for (Element x : a) {
    if (!in_universe(u, x)) {
      throw std::invalid_argument("element " + std::to_string(x) +
                                  " is not in universe " + to_string(u));
    }
  }
  SumReport rep;
  rep.triple_count = tetrahedral(a.size());
  const auto& v = a.values();
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    for (std::size_t j = i + 1; j + 1 < v.size(); ++j) {
      const Element ij = checked_add(v[i], v[j]);
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        const Element s = checked_add(ij, v[k]);
        if (in_universe(u, s)) {
          ++rep.in_universe_triples;
          rep.sums.push_back(s);
        }
      }
    }
  }
  std::sort(rep.sums.begin(), rep.sums.end());
  rep.sums.erase(std::unique(rep.sums.begin(), rep.sums.end()), rep.sums.end());
  rep.distinct_count = rep.sums.size();
  rep.collisions = rep.in_universe_triples - rep.distinct_count;
  return rep;
}

/// True iff (a < b < c) -> a + b + c is injective on the triples of A.
inline bool all_sums_distinct(const ElementSet& a) {
  const auto& v = a.values();
  std::vector<Element> sums;
  if (v.size() >= 3) sums.reserve(tetrahedral(v.size()));
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    for (std::size_t j = i + 1; j + 1 < v.size(); ++j) {
      const Element ij = checked_add(v[i], v[j]);
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        sums.push_back(checked_add(ij, v[k]));
      }
    }
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

/// Report for (A \ {out}) u {in}. The contract is bit-identical output to
/// evaluate on the swapped set.
inline SumReport swap_delta(const ElementSet& a, Element out, Element in, Universe u) {
  if (!a.contains(out)) {
    throw std::invalid_argument("swap-out element " + std::to_string(out) +
                                " is not in the set");
  }
  if (a.contains(in)) {
    throw std::invalid_argument("swap-in element " + std::to_string(in) +
                                " is already in the set");
  }
  if (!in_universe(u, in)) {
    throw std::invalid_argument("swap-in element " + std::to_string(in) +
                                " is not in universe " + to_string(u));
  }
  std::vector<Element> swapped;
  swapped.reserve(a.size());
  for (Element x : a) {
    if (x != out) swapped.push_back(x);
  }
  swapped.insert(std::upper_bound(swapped.begin(), swapped.end(), in), in);
  return evaluate(ElementSet::from_sorted(std::move(swapped)), u);
}

}  // namespace trisum
