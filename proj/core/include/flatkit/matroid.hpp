#pragma once

#include "flatkit/element_set.hpp"
#include "flatkit/matrix.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace flatkit {

inline constexpr int kMaxGroundSetSize = 64;

class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
};

std::vector<std::string> numeric_labels(int n);

// A matroid is a ground set plus a rank oracle. Instances are immutable after
// construction and safe for concurrent queries; rank values are memoized in
// internally synchronized shards keyed by the subset bitmask.
class Matroid {
 public:
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  ElementSet all() const { return ElementSet::full(size()); }

  int rank(ElementSet x) const;
  int rank() const;
  ElementSet closure(ElementSet x) const;
  // {e in within : r(x + e) = r(x)}; the closure of x in the restriction to
  // `within`, expressed in this matroid's element ids (requires x within).
  ElementSet closure_within(ElementSet x, ElementSet within) const;
  bool is_flat(ElementSet x) const { return closure(x) == x; }
  bool is_simple() const;

  std::string label_list(ElementSet x) const;

 protected:
  Matroid(GroundSet ground, bool memoize);
  virtual int rank_impl(ElementSet x) const = 0;

 private:
  static constexpr int kShards = 16;
  struct MemoShard {
    mutable std::mutex mu;
    mutable std::unordered_map<std::uint64_t, int> values;
  };

  GroundSet ground_;
  bool memoize_;
  mutable std::array<MemoShard, kShards> shards_;
  mutable std::once_flag rank_once_, simple_once_;
  mutable int full_rank_ = -1;
  mutable bool simple_ = false;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Columns indexed by the ground set; rank oracle is exact matrix rank.
template <typename S>
class LinearMatroid final : public Matroid {
 public:
  LinearMatroid(Matrix<S> matrix, std::vector<std::string> labels)
      : Matroid(GroundSet(std::move(labels)), /*memoize=*/true),
        matrix_(std::move(matrix)) {
    if (static_cast<int>(matrix_.cols()) != size())
      throw std::invalid_argument("label count must match column count");
  }

  const Matrix<S>& matrix() const { return matrix_; }

 protected:
  int rank_impl(ElementSet x) const override {
    return static_cast<int>(matrix_rank(matrix_.select_columns(x.elements())));
  }

 private:
  Matrix<S> matrix_;
};

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int r, int n)
      : Matroid(GroundSet(numeric_labels(n)), /*memoize=*/false), r_(r) {
    if (r < 0 || r > n) throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
  }

 protected:
  int rank_impl(ElementSet x) const override {
    int s = x.size();
    return s < r_ ? s : r_;
  }

 private:
  int r_;
};

// Frame matroid of a group-labelled complete-graph template: vertices 1..r,
// optional joint elements at vertices, edge elements (i, j, g) with i < j and
// g in Z_t. The rank of a subset is the number of touched vertices minus the
// number of balanced components; a component is balanced when it has no joint
// and all cycles have zero net gain.
class GainGraphMatroid final : public Matroid {
 public:
  struct Edge {
    int i, j, g;  // 1-based endpoints, i < j, 0 <= g < t
  };

  GainGraphMatroid(int vertices, int group_order, std::vector<int> joints,
                   std::vector<Edge> edges);

  int vertices() const { return r_; }
  int group_order() const { return t_; }
  const std::vector<int>& joints() const { return joints_; }
  const std::vector<Edge>& edges() const { return edges_; }

 protected:
  int rank_impl(ElementSet x) const override;

 private:
  int r_, t_;
  std::vector<int> joints_;
  std::vector<Edge> edges_;
};

// Rank-3 matroid given by its point-line incidences: every listed line has at
// least 3 points and any two points lie on at most one listed line; pairs not
// covered by a listed line are implicit 2-point lines.
class IncidenceRank3Matroid final : public Matroid {
 public:
  IncidenceRank3Matroid(int n, std::vector<ElementSet> lines);

  const std::vector<ElementSet>& declared_lines() const { return lines_; }

 protected:
  int rank_impl(ElementSet x) const override;

 private:
  std::vector<ElementSet> lines_;
};

// Minors and compositions. All are lazy oracle wrappers over the base matroid
// and preserve original element labels.
MatroidPtr restrict_to(MatroidPtr m, ElementSet s);
MatroidPtr contract(MatroidPtr m, ElementSet c);
MatroidPtr truncate_to(MatroidPtr m, int k);
// Rank drops by one exactly on sets whose closure contains the flat.
MatroidPtr principal_truncate(MatroidPtr m, ElementSet flat);
MatroidPtr direct_sum(MatroidPtr a, MatroidPtr b);
// Parallel-connection rank formula; both basepoints are removed.
MatroidPtr two_sum(MatroidPtr a, int p1, MatroidPtr b, int p2);

struct SimplifyResult {
  MatroidPtr matroid;
  // old element id -> new element id; -1 for loops.
  std::vector<int> element_map;
};
SimplifyResult simplify(MatroidPtr m);

}  // namespace flatkit
