#pragma once

#include "flatkit/flats.hpp"
#include "flatkit/matroid.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace flatkit {

inline constexpr std::uint64_t kDefaultNodeLimit = 50'000'000;

struct SearchLimits {
  std::uint64_t node_limit = kDefaultNodeLimit;
};

// Thrown when a degeneracy search exceeds its node budget. The search is
// exhaustive or it is an error; no approximate answers are ever returned.
class SearchLimitExceeded : public std::runtime_error {
 public:
  explicit SearchLimitExceeded(std::uint64_t limit)
      : std::runtime_error("degeneracy search exceeded node limit " +
                           std::to_string(limit)) {}
};

// A cover of `covered` by flats of the restriction to `covered`, each of rank
// at least 2, with rank_sum = sum (r(F_i) - 1). Witnesses k-degeneracy when
// rank_sum < k. The flat list is empty when degeneracy holds by rank <= 1.
struct DegeneracyWitness {
  std::vector<Flat> flats;
  int rank_sum = 0;
  ElementSet covered;
};

struct KDegeneracyResult {
  bool degenerate = false;
  std::optional<DegeneracyWitness> witness;
};

// Exhaustive cover search over the flats of m with rank in [2, k]; a negative
// answer is a proof. Requires m simple and k >= 2.
KDegeneracyResult is_k_degenerate(const Matroid& m, int k,
                                  const SearchLimits& limits = {});

struct LargestDegenerateSet {
  ElementSet set;
  DegeneracyWitness witness;
};

// Maximum-cardinality k-degenerate subset of `within` (default: the ground
// set), ties broken by lexicographically smallest element list. |set| = g_k
// when within is the whole ground set.
LargestDegenerateSet largest_k_degenerate(const Matroid& m, int k,
                                          std::optional<ElementSet> within = {},
                                          const SearchLimits& limits = {});

// Largest k with m not k-degenerate; 1 when m is 2-degenerate.
int essential_dimension(const Matroid& m, const SearchLimits& limits = {});

// levels[i] is X_{i+2}: nested sets X_2 through X_k, each a maximum
// i-degenerate subset of the next.
struct Stratification {
  int k = 0;
  std::vector<LargestDegenerateSet> levels;
  const LargestDegenerateSet& level(int i) const { return levels.at(i - 2); }
};

Stratification optimal_stratification(const Matroid& m, int k,
                                      const SearchLimits& limits = {});

// Repeatedly merges non-skew flat pairs into the closure of their union; the
// result has pairwise skew flats, covers the same set, and rank_sum does not
// increase.
DegeneracyWitness normalize_witness(const Matroid& m, const DegeneracyWitness& w);

struct DegeneracyProfile {
  // k -> largest k-degenerate set (size g_k) with witness.
  std::map<int, LargestDegenerateSet> g;
  int essential_dim = 0;
};

DegeneracyProfile degeneracy_profile(const Matroid& m, int kmax,
                                     const SearchLimits& limits = {});

}  // namespace flatkit
