#include "flatkit/degeneracy.hpp"
#include "flatkit/generators.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace flatkit;

namespace {

MatroidPtr two_lines(int a) {
  return direct_sum(uniform(2, a).matroid, uniform(2, a).matroid);
}

bool witness_is_valid(const Matroid& m, const DegeneracyWitness& w, int k) {
  if (w.rank_sum >= k) return false;
  ElementSet covered;
  int sum = 0;
  for (const auto& f : w.flats) {
    if (f.rank < 2) return false;
    if (m.rank(f.elements) != f.rank) return false;
    if (m.closure_within(f.elements, w.covered) != f.elements) return false;
    covered = covered | f.elements;
    sum += f.rank - 1;
  }
  if (sum != w.rank_sum) return false;
  return w.flats.empty() || covered == w.covered;
}

}  // namespace

TEST_CASE("is_k_degenerate on known instances") {
  auto u25 = uniform(2, 5).matroid;
  auto res = is_k_degenerate(*u25, 2);
  CHECK(res.degenerate);
  REQUIRE(res.witness.has_value());
  CHECK(witness_is_valid(*u25, *res.witness, 2));

  auto tl = two_lines(3);
  auto res3 = is_k_degenerate(*tl, 3);
  CHECK(res3.degenerate);
  CHECK(res3.witness->rank_sum == 2);
  CHECK_FALSE(is_k_degenerate(*tl, 2).degenerate);

  CHECK_FALSE(is_k_degenerate(*uniform(4, 8).matroid, 3).degenerate);
  CHECK(is_k_degenerate(*uniform(4, 8).matroid, 4).degenerate);

  CHECK_THROWS_AS(is_k_degenerate(*u25, 1), std::invalid_argument);
}

TEST_CASE("monotonicity: k-degenerate implies (k+1)-degenerate") {
  for (const auto& m : {two_lines(3), uniform(3, 5).matroid, dowling(3, 2).matroid}) {
    for (int k = 2; k <= 4; ++k) {
      auto res = is_k_degenerate(*m, k);
      if (res.degenerate) {
        // the same witness satisfies the k+1 bound
        CHECK(res.witness->rank_sum < k + 1);
        CHECK(is_k_degenerate(*m, k + 1).degenerate);
      }
    }
  }
}

TEST_CASE("largest k-degenerate sets on known instances") {
  // generic rank-3: longest line has 2 points, lex tie-break picks {0,1}
  auto best = largest_k_degenerate(*uniform(3, 5).matroid, 2);
  CHECK(best.set == ElementSet::of({0, 1}));

  auto fig3 = figure1(3).matroid;
  CHECK(largest_k_degenerate(*fig3, 2).set.size() == 4);
  CHECK(largest_k_degenerate(*fig3, 3).set.size() == 8);

  auto g2 = largest_k_degenerate(*dowling(3, 2).matroid, 2);
  CHECK(g2.set.size() == 4);  // a full line v_i v_j e.. of size t+2
  CHECK(witness_is_valid(*dowling(3, 2).matroid, g2.witness, 2));
}

TEST_CASE("degeneracy search matches the brute-force cover oracle") {
  std::vector<MatroidPtr> instances = {
      uniform(3, 5).matroid,
      uniform(2, 4).matroid,
      two_lines(3),
      graphic_k4().matroid,
      dowling(3, 2).matroid,
  };
  for (const auto& m : instances) {
    for (int k = 2; k <= 4; ++k) {
      int brute = oracles::brute_g_k(*m, k);
      auto found = largest_k_degenerate(*m, k);
      CHECK(found.set.size() == brute);
      CHECK(witness_is_valid(*m, found.witness, k));
      bool brute_deg = brute == m->size();
      CHECK(is_k_degenerate(*m, k).degenerate == brute_deg);
    }
  }
}

TEST_CASE("n - g_k is positive exactly when not k-degenerate") {
  for (const auto& m : {two_lines(3), uniform(4, 8).matroid, dowling(3, 2).matroid}) {
    for (int k = 2; k <= 5; ++k) {
      int g = largest_k_degenerate(*m, k).set.size();
      CHECK((m->size() - g > 0) == !is_k_degenerate(*m, k).degenerate);
    }
  }
}

TEST_CASE("witness properties (b), (c), (d)") {
  std::vector<std::pair<MatroidPtr, int>> cases = {
      {two_lines(3), 3}, {uniform(2, 5).matroid, 2}, {dowling(3, 2).matroid, 3},
      {uniform(4, 8).matroid, 4}};
  for (const auto& [m, k] : cases) {
    auto res = is_k_degenerate(*m, k);
    REQUIRE(res.degenerate);
    const auto& w = *res.witness;
    // (c): fewer than k cover flats
    CHECK(static_cast<int>(w.flats.size()) < k);
    // (d): rank at most 2(k-1)
    CHECK(m->rank() <= 2 * (k - 1));
    // (b): every rank-k flat spans one of the cover flats
    if (k <= m->rank() && !w.flats.empty()) {
      for (const auto& f : flats_of_rank(*m, k)) {
        bool spans_one = false;
        ElementSet cl = m->closure(f.elements);
        for (const auto& wf : w.flats)
          if (wf.elements.subset_of(cl)) spans_one = true;
        CHECK(spans_one);
      }
    }
  }
}

TEST_CASE("essential dimension") {
  CHECK(essential_dimension(*uniform(2, 5).matroid) == 1);
  CHECK(essential_dimension(*two_lines(3)) == 2);
  CHECK(essential_dimension(*uniform(4, 8).matroid) == 3);
  CHECK(essential_dimension(*dowling(3, 2).matroid) == 2);
}

TEST_CASE("optimal stratification") {
  // rank <= k: the top level is everything
  auto u35 = uniform(3, 5).matroid;
  auto strat = optimal_stratification(*u35, 3);
  CHECK(strat.level(3).set == u35->all());

  // two skew lines at k = 3: X_3 = E, X_2 = one full line
  auto tl = two_lines(4);
  auto s = optimal_stratification(*tl, 3);
  CHECK(s.level(3).set == tl->all());
  CHECK(s.level(2).set == ElementSet::of({0, 1, 2, 3}));

  // nesting
  auto fig = figure1(2).matroid;
  auto sf = optimal_stratification(*fig, 5);
  for (int i = 2; i < 5; ++i)
    CHECK(sf.level(i).set.subset_of(sf.level(i + 1).set));
  CHECK(sf.level(2).set.size() == 3);
  CHECK(sf.level(3).set.size() == 6);
  CHECK(sf.level(4).set.size() == 9);
  CHECK(sf.level(5).set.size() == 11);
}

TEST_CASE("stratification levels satisfy the nested-size inequality") {
  // n - |X_i| <= (k+1-i)(n - g_i)
  std::vector<std::pair<MatroidPtr, int>> cases = {
      {figure1(2).matroid, 5}, {two_lines(3), 3}, {dowling(3, 2).matroid, 3}};
  for (const auto& [m, k] : cases) {
    auto strat = optimal_stratification(*m, k);
    const int n = m->size();
    for (int i = 2; i <= k; ++i) {
      int gi = largest_k_degenerate(*m, i).set.size();
      CHECK(n - strat.level(i).set.size() <= (k + 1 - i) * (n - gi));
    }
  }
}

TEST_CASE("normalize_witness") {
  auto u35 = uniform(3, 5).matroid;
  // two crossing lines merge into the spanning flat
  DegeneracyWitness crossing;
  crossing.covered = ElementSet::of({0, 1, 2});
  crossing.flats = {{ElementSet::of({0, 1}), 2}, {ElementSet::of({0, 2}), 2}};
  crossing.rank_sum = 2;
  auto merged = normalize_witness(*u35, crossing);
  REQUIRE(merged.flats.size() == 1);
  CHECK(merged.flats[0].elements == ElementSet::of({0, 1, 2}));
  CHECK(merged.flats[0].rank == 3);
  CHECK(merged.rank_sum <= crossing.rank_sum);

  // already-skew witnesses are unchanged
  auto tl = two_lines(3);
  DegeneracyWitness skew;
  skew.covered = tl->all();
  skew.flats = {{ElementSet::of({0, 1, 2}), 2}, {ElementSet::of({3, 4, 5}), 2}};
  skew.rank_sum = 2;
  auto same = normalize_witness(*tl, skew);
  CHECK(same.flats.size() == 2);
  CHECK(same.rank_sum == 2);

  // witness {E} is unchanged
  DegeneracyWitness whole;
  whole.covered = u35->all();
  whole.flats = {{u35->all(), 3}};
  whole.rank_sum = 2;
  CHECK(normalize_witness(*u35, whole).flats.size() == 1);

  DegeneracyWitness bad;
  bad.covered = u35->all();
  bad.flats = {{ElementSet::of({0, 1}), 3}};  // wrong rank
  CHECK_THROWS_AS(normalize_witness(*u35, bad), std::invalid_argument);
}

TEST_CASE("degeneracy profile") {
  auto profile = degeneracy_profile(*figure1(3).matroid, 5);
  CHECK(profile.g.at(2).set.size() == 4);
  CHECK(profile.g.at(3).set.size() == 8);
  CHECK(profile.g.at(4).set.size() == 12);
  CHECK(profile.g.at(5).set.size() == 14);
  CHECK(profile.essential_dim == 5);
}

TEST_CASE("search guard rails") {
  SearchLimits tiny{.node_limit = 4};
  CHECK_THROWS_AS(largest_k_degenerate(*figure1(2).matroid, 4, std::nullopt, tiny),
                  SearchLimitExceeded);

  Matrix<Rational> w(2, 3);
  w.at(0, 0) = 1;
  w.at(0, 1) = 2;  // parallel pair
  w.at(1, 2) = 1;
  auto messy =
      std::make_shared<LinearMatroid<Rational>>(std::move(w), numeric_labels(3));
  CHECK_THROWS_AS(is_k_degenerate(*messy, 2), std::invalid_argument);
}
