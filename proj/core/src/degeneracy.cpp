#include "flatkit/degeneracy.hpp"

#include <algorithm>

namespace flatkit {

namespace {

struct Candidate {
  ElementSet set;
  int weight;  // rank - 1
};

// All flats of the restriction to `within` with rank in [2, max_rank],
// ordered by size descending then canonically; these are the only flats a
// degeneracy cover can use.
std::vector<Candidate> candidate_flats(const Matroid& m, ElementSet within,
                                       int max_rank) {
  std::vector<Candidate> out;
  const int top = std::min(max_rank, m.rank(within));
  for (int r = 2; r <= top; ++r)
    for (const auto& f : flats_of_rank_within(m, within, r))
      out.push_back({f.elements, r - 1});
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.set.size() != b.set.size()) return a.set.size() > b.set.size();
    return canonical_less(a.set, b.set);
  });
  return out;
}

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  void spend() {
    if (++used_ > limit_) throw SearchLimitExceeded(limit_);
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

DegeneracyWitness make_witness(const std::vector<Candidate>& cands,
                               const std::vector<int>& chosen, ElementSet covered) {
  DegeneracyWitness w;
  w.covered = covered;
  for (int idx : chosen) {
    w.flats.push_back({cands[idx].set, cands[idx].weight + 1});
    w.rank_sum += cands[idx].weight;
  }
  std::sort(w.flats.begin(), w.flats.end(), flat_less);
  return w;
}

// Exhaustive search for a cover of `target` within the candidate list using
// total weight <= budget. Branches on the lowest uncovered element.
class CoverSearch {
 public:
  CoverSearch(const std::vector<Candidate>& cands, ElementSet target, int budget,
              NodeBudget& nodes)
      : cands_(cands), target_(target), budget_(budget), nodes_(nodes) {
    int max_size = 0;
    for (const auto& c : cands_) max_size = std::max(max_size, c.set.size());
    max_cover_ = max_size;
  }

  bool run() { return dfs(ElementSet(), budget_); }
  const std::vector<int>& chosen() const { return chosen_; }

 private:
  bool dfs(ElementSet covered, int budget) {
    nodes_.spend();
    ElementSet missing = target_.minus(covered);
    if (missing.empty()) return true;
    if (budget <= 0) return false;
    if (static_cast<long long>(budget) * max_cover_ < missing.size()) return false;
    const int e = missing.lowest();
    for (std::size_t i = 0; i < cands_.size(); ++i) {
      const auto& c = cands_[i];
      if (c.weight > budget || !c.set.contains(e)) continue;
      chosen_.push_back(static_cast<int>(i));
      if (dfs(covered | c.set, budget - c.weight)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<Candidate>& cands_;
  ElementSet target_;
  int budget_;
  NodeBudget& nodes_;
  int max_cover_ = 0;
  std::vector<int> chosen_;
};

// Exhaustive search for a flat multiset of total weight <= budget maximizing
// |union|, ties broken by lexicographically smallest element list. Candidates
// are sorted by size descending, so the top `budget` suffix sizes bound the
// achievable gain.
class MaxUnionSearch {
 public:
  MaxUnionSearch(const std::vector<Candidate>& cands, ElementSet within, int budget,
                 NodeBudget& nodes)
      : cands_(cands), within_(within), budget_(budget), nodes_(nodes) {}

  void run() {
    best_set_ = ElementSet();
    best_size_ = 0;
    dfs(0, budget_, ElementSet());
  }

  ElementSet best_set() const { return best_set_; }
  const std::vector<int>& best_chosen() const { return best_chosen_; }

 private:
  void dfs(std::size_t i, int budget, ElementSet cur) {
    nodes_.spend();
    const int size = cur.size();
    if (size > best_size_ || (size == best_size_ && canonical_less(cur, best_set_))) {
      best_size_ = size;
      best_set_ = cur;
      best_chosen_ = chosen_;
    }
    // A full-cover optimum is the unique maximum set; nothing can improve it.
    if (best_size_ == within_.size()) return;
    if (i >= cands_.size() || budget == 0) return;
    long long bound = size;
    for (std::size_t j = i, picks = 0; j < cands_.size() && picks < (std::size_t)budget;
         ++j, ++picks)
      bound += cands_[j].set.size();
    if (bound < best_size_) return;
    const auto& c = cands_[i];
    if (c.weight <= budget && !c.set.subset_of(cur)) {
      chosen_.push_back(static_cast<int>(i));
      dfs(i + 1, budget - c.weight, cur | c.set);
      chosen_.pop_back();
    }
    dfs(i + 1, budget, cur);
  }

  const std::vector<Candidate>& cands_;
  ElementSet within_;
  int budget_;
  NodeBudget& nodes_;
  ElementSet best_set_;
  int best_size_ = 0;
  std::vector<int> chosen_, best_chosen_;
};

void require_simple(const Matroid& m, const char* op) {
  if (!m.is_simple())
    throw std::invalid_argument(std::string(op) + " requires a simple matroid");
}

}  // namespace

KDegeneracyResult is_k_degenerate(const Matroid& m, int k, const SearchLimits& limits) {
  if (k < 2) throw std::invalid_argument("degeneracy order k must be >= 2");
  require_simple(m, "is_k_degenerate");
  if (m.rank() <= 1) {
    DegeneracyWitness w;
    w.covered = m.all();
    return {true, w};
  }
  auto cands = candidate_flats(m, m.all(), k);
  NodeBudget nodes(limits.node_limit);
  CoverSearch search(cands, m.all(), k - 1, nodes);
  if (!search.run()) return {false, std::nullopt};
  return {true, make_witness(cands, search.chosen(), m.all())};
}

LargestDegenerateSet largest_k_degenerate(const Matroid& m, int k,
                                          std::optional<ElementSet> within,
                                          const SearchLimits& limits) {
  if (k < 2) throw std::invalid_argument("degeneracy order k must be >= 2");
  require_simple(m, "largest_k_degenerate");
  const ElementSet scope = within.value_or(m.all());
  if (!scope.subset_of(m.all())) throw std::out_of_range("element id out of range");
  if (m.rank(scope) <= 1) {
    DegeneracyWitness w;
    w.covered = scope;
    return {scope, w};
  }
  auto cands = candidate_flats(m, scope, k);
  NodeBudget nodes(limits.node_limit);
  MaxUnionSearch search(cands, scope, k - 1, nodes);
  search.run();
  return {search.best_set(),
          make_witness(cands, search.best_chosen(), search.best_set())};
}

int essential_dimension(const Matroid& m, const SearchLimits& limits) {
  require_simple(m, "essential_dimension");
  if (m.rank() < 1) throw std::invalid_argument("essential dimension needs rank >= 1");
  for (int k = 2;; ++k) {
    if (is_k_degenerate(m, k, limits).degenerate) return k - 1;
  }
}

Stratification optimal_stratification(const Matroid& m, int k,
                                      const SearchLimits& limits) {
  if (k < 2) throw std::invalid_argument("stratification order k must be >= 2");
  require_simple(m, "optimal_stratification");
  Stratification strat;
  strat.k = k;
  strat.levels.resize(k - 1);
  strat.levels[k - 2] = largest_k_degenerate(m, k, std::nullopt, limits);
  for (int i = k - 1; i >= 2; --i)
    strat.levels[i - 2] =
        largest_k_degenerate(m, i, strat.levels[i - 1].set, limits);
  return strat;
}

DegeneracyWitness normalize_witness(const Matroid& m, const DegeneracyWitness& w) {
  // Validate: flats of the restriction to the covered set, rank >= 2, covering.
  ElementSet covered;
  for (const auto& f : w.flats) {
    if (!f.elements.subset_of(w.covered) ||
        m.closure_within(f.elements, w.covered) != f.elements ||
        m.rank(f.elements) != f.rank || f.rank < 2)
      throw std::invalid_argument("invalid degeneracy witness");
    covered = covered | f.elements;
  }
  if (!w.flats.empty() && covered != w.covered)
    throw std::invalid_argument("witness flats do not cover the target set");

  std::vector<Flat> flats = w.flats;
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < flats.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < flats.size() && !merged; ++j) {
        ElementSet u = flats[i].elements | flats[j].elements;
        int ru = m.rank(u);
        if (ru == flats[i].rank + flats[j].rank) continue;  // skew
        Flat fused{m.closure_within(u, w.covered), ru};
        flats.erase(flats.begin() + j);
        flats[i] = fused;
        merged = true;
      }
    }
  }
  DegeneracyWitness out;
  out.covered = w.covered;
  std::sort(flats.begin(), flats.end(), flat_less);
  out.flats = std::move(flats);
  for (const auto& f : out.flats) out.rank_sum += f.rank - 1;
  return out;
}

DegeneracyProfile degeneracy_profile(const Matroid& m, int kmax,
                                     const SearchLimits& limits) {
  DegeneracyProfile profile;
  for (int k = 2; k <= kmax; ++k)
    profile.g.emplace(k, largest_k_degenerate(m, k, std::nullopt, limits));
  profile.essential_dim = essential_dimension(m, limits);
  return profile;
}

}  // namespace flatkit
