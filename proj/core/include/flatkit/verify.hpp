#pragma once

#include "flatkit/degeneracy.hpp"
#include "flatkit/flats.hpp"
#include "flatkit/matroid.hpp"
#include "flatkit/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flatkit {

// One named inequality check with exact left/right sides. For inequality
// checks holds == (lhs <= rhs); informational probes always hold.
struct CheckReport {
  std::string name;
  Rational lhs, rhs;
  bool holds = false;
  std::map<std::string, Rational> context;
  std::optional<std::string> note;
};

struct RatioReport {
  std::string name;
  Rational ratio;
  std::map<std::string, Rational> context;
};

// True when some line contains all points but one.
bool is_near_pencil(const Matroid& m);

// sum_L (|L| - 3) <= -3, for real-representable rank-3 inputs.
CheckReport melchior_check(const Matroid& m, int jobs = 1);

// sum_L (|L| - 4) <= -(n + m_2) for complex-representable rank-3 inputs that
// are not near-pencils; m_2 counts the 2-point lines.
CheckReport hirzebruch_check(const Matroid& m, int jobs = 1);

// De Bruijn-Erdos: n <= |L|.
CheckReport dbe_check(const Matroid& m, int jobs = 1);

// Top-heavy: |F_a| <= |F_b| for 1 <= a < b <= r - a.
CheckReport top_heavy_check(const Matroid& m, int a, int b, int jobs = 1);

// n(n - g_2)/12 <= |L| for complex-representable rank-3 inputs.
CheckReport line_bound_check(const Matroid& m, const SearchLimits& limits = {},
                             int jobs = 1);

// Average line-length <= 6 for complex-representable rank-3 inputs.
CheckReport average_line_check(const Matroid& m, int jobs = 1);

// One report per i in {2..k}: n - |X_i| <= (k+1-i)(n - g_i), with (X_2..X_k)
// the optimal k-stratification and each g_i searched independently.
std::vector<CheckReport> strat1_check(const Matroid& m, int k,
                                      const SearchLimits& limits = {}, int jobs = 1);

// sum_{F in F_k} (|F| - k) <= 2^{k(k-1)} n (n-|X_2|)...(n-|X_min(d,k)|) with
// X_1 = empty; the product is truncated at the essential dimension d.
CheckReport strat2_check(const Matroid& m, int k, const SearchLimits& limits = {},
                         int jobs = 1);

// |F_k| / (n (n-g_2)...(n-g_k)), defined only when n - g_k > 0.
RatioReport lund_ratio(const Matroid& m, int k, const SearchLimits& limits = {},
                       int jobs = 1);

// Average plane-size of the rank-4 truncation plus the two-skew-lines flag;
// informational (no fixed right-hand side).
CheckReport plane_theorem_probe(const MatroidPtr& m, int jobs = 1);

// Average size over all flats, optionally excluding rank 0 and rank r(M).
Rational average_flat_size(const Matroid& m, bool include_trivial, int jobs = 1);

// Average hyperplane size minus C(r, 2); informational.
CheckReport hyperplane_average_probe(const GainGraphMatroid& m, int jobs = 1);

}  // namespace flatkit
