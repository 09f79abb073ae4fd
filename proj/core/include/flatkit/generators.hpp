#pragma once

#include "flatkit/matroid.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>

namespace flatkit {

// Representability metadata. Checks that are conditional on the base field
// consult these flags; they are set by construction for generated instances
// and caller-declared for incidence inputs.
struct InstanceMeta {
  std::string name;
  bool real = false;
  bool complex_rep = false;
  bool declared_only = false;
  std::map<std::string, std::string> params;
};

struct Instance {
  MatroidPtr matroid;
  InstanceMeta meta;
};

// Dowling geometry DG(r, Z_t) as a gain-graph matroid: joints v_1..v_r
// (omitted when delete_joints) plus edges e_{i,j,g} for 1 <= i < j <= r and
// g in Z_t. Complex-representable; also real when t <= 2.
Instance dowling(int r, int t, bool delete_joints = false);

// Uniform matroid U_{r,n}; real and complex (Vandermonde-representable).
Instance uniform(int r, int n);

// Explicit rational Vandermonde representation of U_{r,n} for cross-checks.
std::shared_ptr<const LinearMatroid<Rational>> uniform_vandermonde(int r, int n);

// M(K_4): six signed vertex-incidence columns, rank 3, four 3-point lines.
Instance graphic_k4();

// The rank-6 composite: three two-sums of (a+2)-point lines onto the edges of
// one triangle of M(K_4). n = 3(a+2); the pendant lines keep a+1 points each.
Instance figure1(int a);

// n rational columns in r dimensions with entries drawn from SplitMix64
// (documented in the README), integers in [-1000, 1000], columns redrawn
// until the matroid is simple. Same seed, same matrix.
Instance random_config(int r, int n, std::uint64_t seed);

// Rank-3 incidence input; representability flags are caller-declared.
Instance from_incidence(int n, std::vector<ElementSet> lines, bool real,
                        bool complex_rep);

// Linear representation of DG(r, Z_t) for cross-oracle tests: joint columns
// e_i, edge columns e_i - zeta^g e_j. Rational (zeta = -1) for t <= 2,
// cyclotomic of order t otherwise. Element order matches dowling().
MatroidPtr dowling_linear(int r, int t, bool delete_joints = false);

// The SplitMix64 stream used by random_config.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

}  // namespace flatkit
