#pragma once

#include "flatkit/matroid.hpp"
#include "flatkit/rational.hpp"

#include <vector>

namespace flatkit {

struct Flat {
  ElementSet elements;
  int rank = 0;
};

// Canonical order: lexicographic by sorted element list.
inline bool flat_less(const Flat& a, const Flat& b) {
  return canonical_less(a.elements, b.elements);
}

struct FlatStats {
  int rank = 0;
  std::size_t count = 0;
  std::size_t total_size = 0;
  Rational average;
};

// Complete, duplicate-free list of rank-k flats in canonical order, computed
// level-wise: rank-(i+1) flats are the closures of F + e over rank-i flats F.
// `jobs` > 1 parallelizes each level; the result is schedule-independent.
std::vector<Flat> flats_of_rank(const Matroid& m, int k, int jobs = 1);

// Flats of the restriction to `within`, expressed in m's element ids.
std::vector<Flat> flats_of_rank_within(const Matroid& m, ElementSet within, int k,
                                       int jobs = 1);

// All flats, rank 0 through r(M) inclusive, ordered by rank then canonically.
std::vector<Flat> all_flats(const Matroid& m, int jobs = 1);

FlatStats flat_size_stats(const Matroid& m, int k, int jobs = 1);

}  // namespace flatkit
