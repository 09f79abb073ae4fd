#include "flatkit/matroid.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace flatkit {

namespace {

std::size_t shard_index(std::uint64_t bits) {
  return (bits * 0x9E3779B97F4A7C15ull) >> 60;
}

std::vector<std::string> merge_labels(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  std::unordered_set<std::string> used(a.begin(), a.end());
  for (std::string l : b) {
    while (used.count(l)) l += "'";
    used.insert(l);
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::string> pick_labels(const GroundSet& g, ElementSet keep) {
  std::vector<std::string> out;
  out.reserve(keep.size());
  for (int e : keep.elements()) out.push_back(g.label(e));
  return out;
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxGroundSetSize)
    throw std::invalid_argument("ground set limited to 64 elements");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty element label");
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate element label: " + l);
  }
}

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

Matroid::Matroid(GroundSet ground, bool memoize)
    : ground_(std::move(ground)), memoize_(memoize) {}

int Matroid::rank(ElementSet x) const {
  const int n = size();
  if (n < 64 && (x.bits() >> n) != 0)
    throw std::out_of_range("element id out of range");
  if (!memoize_) return rank_impl(x);
  auto& shard = shards_[shard_index(x.bits())];
  {
    std::scoped_lock lock(shard.mu);
    auto it = shard.values.find(x.bits());
    if (it != shard.values.end()) return it->second;
  }
  int r = rank_impl(x);
  {
    std::scoped_lock lock(shard.mu);
    shard.values.emplace(x.bits(), r);
  }
  return r;
}

int Matroid::rank() const {
  std::call_once(rank_once_, [&] { full_rank_ = rank(all()); });
  return full_rank_;
}

ElementSet Matroid::closure_within(ElementSet x, ElementSet within) const {
  const int rx = rank(x);
  ElementSet out = x & within;
  for (int e : within.minus(x).elements())
    if (rank(x.with(e)) == rx) out = out.with(e);
  return out;
}

ElementSet Matroid::closure(ElementSet x) const { return closure_within(x, all()); }

bool Matroid::is_simple() const {
  std::call_once(simple_once_, [&] {
    simple_ = true;
    const int n = size();
    for (int e = 0; e < n && simple_; ++e)
      if (rank(ElementSet::single(e)) == 0) simple_ = false;
    for (int e = 0; e < n && simple_; ++e)
      for (int f = e + 1; f < n && simple_; ++f)
        if (rank(ElementSet::of({e, f})) < 2) simple_ = false;
  });
  return simple_;
}

std::string Matroid::label_list(ElementSet x) const {
  std::ostringstream out;
  bool first = true;
  for (int e : x.elements()) {
    if (!first) out << ' ';
    out << ground_.label(e);
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Gain-graph matroid

namespace {

std::vector<std::string> gain_labels(const std::vector<int>& joints,
                                     const std::vector<GainGraphMatroid::Edge>& edges) {
  std::vector<std::string> out;
  out.reserve(joints.size() + edges.size());
  for (int v : joints) out.push_back("v" + std::to_string(v));
  for (const auto& e : edges)
    out.push_back("e" + std::to_string(e.i) + "." + std::to_string(e.j) + "." +
                  std::to_string(e.g));
  return out;
}

}  // namespace

GainGraphMatroid::GainGraphMatroid(int vertices, int group_order,
                                   std::vector<int> joints, std::vector<Edge> edges)
    : Matroid(GroundSet(gain_labels(joints, edges)), /*memoize=*/true),
      r_(vertices),
      t_(group_order),
      joints_(std::move(joints)),
      edges_(std::move(edges)) {
  if (r_ < 1) throw std::invalid_argument("gain graph needs at least one vertex");
  if (t_ < 1) throw std::invalid_argument("group order must be positive");
  std::set<int> jseen;
  for (int v : joints_) {
    if (v < 1 || v > r_) throw std::invalid_argument("joint vertex out of range");
    if (!jseen.insert(v).second) throw std::invalid_argument("duplicate joint");
  }
  std::set<std::tuple<int, int, int>> eseen;
  for (const auto& e : edges_) {
    if (e.i < 1 || e.j <= e.i || e.j > r_)
      throw std::invalid_argument("edge endpoints must satisfy 1 <= i < j <= r");
    if (e.g < 0 || e.g >= t_) throw std::invalid_argument("edge gain out of range");
    if (!eseen.insert({e.i, e.j, e.g}).second)
      throw std::invalid_argument("duplicate edge");
  }
}

int GainGraphMatroid::rank_impl(ElementSet x) const {
  // Weighted union-find: pot[v] = phi(v) - phi(parent(v)) mod t. A component
  // is unbalanced when it contains a joint or a cycle with nonzero net gain.
  std::vector<int> parent(r_ + 1, -1), pot(r_ + 1, 0);
  std::vector<char> unbal(r_ + 1, 0);
  auto touch = [&](int v) {
    if (parent[v] < 0) parent[v] = v;
  };
  auto find = [&](int v, int& pot_out) {
    int root = v, total = 0;
    while (parent[root] != root) {
      total = (total + pot[root]) % t_;
      root = parent[root];
    }
    int cur = v, acc = total;
    while (parent[cur] != root) {
      int next = parent[cur];
      int step = pot[cur];
      parent[cur] = root;
      pot[cur] = acc;
      acc = ((acc - step) % t_ + t_) % t_;
      cur = next;
    }
    pot_out = total;
    return root;
  };

  const int njoints = static_cast<int>(joints_.size());
  for (int idx : x.elements()) {
    if (idx < njoints) {
      int v = joints_[idx];
      touch(v);
      int p;
      unbal[find(v, p)] = 1;
    } else {
      const Edge& e = edges_[idx - njoints];
      touch(e.i);
      touch(e.j);
      int pi, pj;
      int ri = find(e.i, pi), rj = find(e.j, pj);
      if (ri == rj) {
        if (((pj - pi - e.g) % t_ + t_) % t_ != 0) unbal[ri] = 1;
      } else {
        parent[rj] = ri;
        pot[rj] = ((pi + e.g - pj) % t_ + t_) % t_;
        unbal[ri] |= unbal[rj];
      }
    }
  }

  int vcount = 0, balanced = 0;
  std::vector<char> counted(r_ + 1, 0);
  for (int v = 1; v <= r_; ++v) {
    if (parent[v] < 0) continue;
    ++vcount;
    int p;
    int root = find(v, p);
    if (!counted[root]) {
      counted[root] = 1;
      if (!unbal[root]) ++balanced;
    }
  }
  return vcount - balanced;
}

// ---------------------------------------------------------------------------
// Rank-3 incidence matroid

IncidenceRank3Matroid::IncidenceRank3Matroid(int n, std::vector<ElementSet> lines)
    : Matroid(GroundSet(numeric_labels(n)), /*memoize=*/false),
      lines_(std::move(lines)) {
  std::set<std::pair<int, int>> covered;
  for (const auto& line : lines_) {
    if (line.size() < 3) throw std::invalid_argument("incidence line needs >= 3 points");
    auto pts = line.elements();
    if (pts.back() >= n) throw std::invalid_argument("incidence point out of range");
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        if (!covered.insert({pts[a], pts[b]}).second)
          throw std::invalid_argument("point pair covered by two lines");
  }
}

int IncidenceRank3Matroid::rank_impl(ElementSet x) const {
  int s = x.size();
  if (s <= 2) return s;
  for (const auto& line : lines_)
    if (x.subset_of(line)) return 2;
  return 3;
}

// ---------------------------------------------------------------------------
// Derived matroids

namespace {

class RestrictionMatroid final : public Matroid {
 public:
  RestrictionMatroid(MatroidPtr base, ElementSet keep)
      : Matroid(GroundSet(pick_labels(base->ground(), keep)), /*memoize=*/false),
        base_(std::move(base)),
        ids_(keep.elements()) {}

 protected:
  int rank_impl(ElementSet x) const override {
    ElementSet b;
    for (int e : x.elements()) b = b.with(ids_[e]);
    return base_->rank(b);
  }

 private:
  MatroidPtr base_;
  std::vector<int> ids_;
};

class ContractionMatroid final : public Matroid {
 public:
  ContractionMatroid(MatroidPtr base, ElementSet contracted)
      : Matroid(GroundSet(pick_labels(base->ground(), base->all().minus(contracted))),
                /*memoize=*/false),
        base_(std::move(base)),
        contracted_(contracted),
        ids_(base_->all().minus(contracted).elements()),
        rank_c_(base_->rank(contracted)) {}

 protected:
  int rank_impl(ElementSet x) const override {
    ElementSet b = contracted_;
    for (int e : x.elements()) b = b.with(ids_[e]);
    return base_->rank(b) - rank_c_;
  }

 private:
  MatroidPtr base_;
  ElementSet contracted_;
  std::vector<int> ids_;
  int rank_c_;
};

class TruncationMatroid final : public Matroid {
 public:
  TruncationMatroid(MatroidPtr base, int k)
      : Matroid(GroundSet(base->ground().labels()), /*memoize=*/false),
        base_(std::move(base)),
        k_(k) {}

 protected:
  int rank_impl(ElementSet x) const override {
    int r = base_->rank(x);
    return r < k_ ? r : k_;
  }

 private:
  MatroidPtr base_;
  int k_;
};

class PrincipalTruncationMatroid final : public Matroid {
 public:
  PrincipalTruncationMatroid(MatroidPtr base, ElementSet flat)
      : Matroid(GroundSet(base->ground().labels()), /*memoize=*/false),
        base_(std::move(base)),
        flat_(flat) {}

 protected:
  int rank_impl(ElementSet x) const override {
    int r = base_->rank(x);
    return base_->rank(x | flat_) == r ? r - 1 : r;
  }

 private:
  MatroidPtr base_;
  ElementSet flat_;
};

class DirectSumMatroid final : public Matroid {
 public:
  DirectSumMatroid(MatroidPtr a, MatroidPtr b)
      : Matroid(GroundSet(merge_labels(a->ground().labels(), b->ground().labels())),
                /*memoize=*/false),
        a_(std::move(a)),
        b_(std::move(b)),
        n1_(a_->size()) {}

 protected:
  int rank_impl(ElementSet x) const override {
    ElementSet xa = x & ElementSet::full(n1_);
    ElementSet xb(x.bits() >> n1_);
    return a_->rank(xa) + b_->rank(xb);
  }

 private:
  MatroidPtr a_, b_;
  int n1_;
};

class TwoSumMatroid final : public Matroid {
 public:
  TwoSumMatroid(MatroidPtr a, int p1, MatroidPtr b, int p2,
                std::vector<std::string> labels)
      : Matroid(GroundSet(std::move(labels)), /*memoize=*/true),
        a_(std::move(a)),
        b_(std::move(b)),
        p1_(p1),
        p2_(p2),
        a_ids_(a_->all().without(p1).elements()),
        b_ids_(b_->all().without(p2).elements()),
        na_(static_cast<int>(a_ids_.size())) {}

 protected:
  int rank_impl(ElementSet x) const override {
    ElementSet xa, xb;
    for (int e : x.elements()) {
      if (e < na_)
        xa = xa.with(a_ids_[e]);
      else
        xb = xb.with(b_ids_[e - na_]);
    }
    int r1 = a_->rank(xa), r2 = b_->rank(xb);
    int r1p = a_->rank(xa.with(p1_)), r2p = b_->rank(xb.with(p2_));
    int glued = r1p + r2p - 1;
    int split = r1 + r2;
    return glued < split ? glued : split;
  }

 private:
  MatroidPtr a_, b_;
  int p1_, p2_;
  std::vector<int> a_ids_, b_ids_;
  int na_;
};

void check_subset(const MatroidPtr& m, ElementSet s, const char* what) {
  if (!s.subset_of(m->all()))
    throw std::out_of_range(std::string(what) + ": element id out of range");
}

}  // namespace

MatroidPtr restrict_to(MatroidPtr m, ElementSet s) {
  check_subset(m, s, "restrict");
  return std::make_shared<RestrictionMatroid>(std::move(m), s);
}

MatroidPtr contract(MatroidPtr m, ElementSet c) {
  check_subset(m, c, "contract");
  return std::make_shared<ContractionMatroid>(std::move(m), c);
}

MatroidPtr truncate_to(MatroidPtr m, int k) {
  if (k < 1 || k > m->rank())
    throw std::invalid_argument("truncation rank must satisfy 1 <= k <= r(M)");
  return std::make_shared<TruncationMatroid>(std::move(m), k);
}

MatroidPtr principal_truncate(MatroidPtr m, ElementSet flat) {
  check_subset(m, flat, "principal_truncate");
  if (!m->is_flat(flat)) throw std::invalid_argument("principal truncation needs a flat");
  if (m->rank(flat) < 1)
    throw std::invalid_argument("principal truncation needs a flat of rank >= 1");
  return std::make_shared<PrincipalTruncationMatroid>(std::move(m), flat);
}

MatroidPtr direct_sum(MatroidPtr a, MatroidPtr b) {
  if (a->size() + b->size() > kMaxGroundSetSize)
    throw std::invalid_argument("direct sum exceeds 64 elements");
  return std::make_shared<DirectSumMatroid>(std::move(a), std::move(b));
}

MatroidPtr two_sum(MatroidPtr a, int p1, MatroidPtr b, int p2) {
  if (a->size() < 3 || b->size() < 3)
    throw std::invalid_argument("two-sum operands need at least 3 elements");
  if (p1 < 0 || p1 >= a->size() || p2 < 0 || p2 >= b->size())
    throw std::out_of_range("two-sum basepoint out of range");
  for (const auto& [m, p] : {std::pair{a, p1}, std::pair{b, p2}}) {
    if (m->rank(ElementSet::single(p)) == 0)
      throw std::invalid_argument("two-sum basepoint is a loop");
    if (m->rank(m->all().without(p)) != m->rank())
      throw std::invalid_argument("two-sum basepoint is a coloop");
  }
  auto labels = merge_labels(pick_labels(a->ground(), a->all().without(p1)),
                             pick_labels(b->ground(), b->all().without(p2)));
  if (labels.size() > kMaxGroundSetSize)
    throw std::invalid_argument("two-sum exceeds 64 elements");
  return std::make_shared<TwoSumMatroid>(std::move(a), p1, std::move(b), p2,
                                         std::move(labels));
}

SimplifyResult simplify(MatroidPtr m) {
  const int n = m->size();
  std::vector<int> rep(n, -1);  // representative old id per element, -1 = loop
  for (int e = 0; e < n; ++e) {
    if (m->rank(ElementSet::single(e)) == 0) continue;
    rep[e] = e;
    for (int f = 0; f < e; ++f) {
      if (rep[f] != f) continue;
      if (m->rank(ElementSet::of({e, f})) == 1) {
        rep[e] = f;
        break;
      }
    }
  }
  ElementSet keep;
  for (int e = 0; e < n; ++e)
    if (rep[e] == e) keep = keep.with(e);
  std::vector<int> new_id(n, -1);
  {
    int next = 0;
    for (int e : keep.elements()) new_id[e] = next++;
  }
  std::vector<int> mapping(n, -1);
  for (int e = 0; e < n; ++e)
    if (rep[e] >= 0) mapping[e] = new_id[rep[e]];
  return {restrict_to(std::move(m), keep), std::move(mapping)};
}

}  // namespace flatkit
