#include "flatkit/flats.hpp"
#include "flatkit/generators.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace flatkit;

namespace {

bool canonical_sorted(const std::vector<Flat>& flats) {
  for (std::size_t i = 1; i < flats.size(); ++i)
    if (!flat_less(flats[i - 1], flats[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("lines of a generic 4-point rank-3 configuration") {
  auto lines = flats_of_rank(*uniform(3, 4).matroid, 2);
  CHECK(lines.size() == 6);
  for (const auto& l : lines) CHECK(l.elements.size() == 2);
  CHECK(canonical_sorted(lines));
}

TEST_CASE("planes of two skew lines") {
  auto tl = direct_sum(uniform(2, 3).matroid, uniform(2, 3).matroid);
  auto planes = flats_of_rank(*tl, 3);
  // brute-force closures of every 3-subset give the same six planes of size 4
  std::set<std::uint64_t> brute;
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    ElementSet x(bits);
    if (x.size() != 3) continue;
    if (tl->rank(x) != 3) continue;
    brute.insert(tl->closure(x).bits());
  }
  CHECK(planes.size() == 6);
  CHECK(brute.size() == 6);
  for (const auto& p : planes) {
    CHECK(p.elements.size() == 4);
    CHECK(brute.count(p.elements.bits()) == 1);
  }
}

TEST_CASE("the joint-deleted rank-3 ternary dowling geometry has twelve 3-point lines") {
  auto m = dowling(3, 3, /*delete_joints=*/true).matroid;
  auto lines = flats_of_rank(*m, 2);
  CHECK(lines.size() == 12);
  for (const auto& l : lines) CHECK(l.elements.size() == 3);
}

TEST_CASE("all_flats includes the trivial flats") {
  auto u11 = uniform(1, 1).matroid;
  auto flats = all_flats(*u11);
  REQUIRE(flats.size() == 2);
  CHECK(flats[0].elements == ElementSet());
  CHECK(flats[1].elements == ElementSet::single(0));

  CHECK(all_flats(*uniform(3, 4).matroid).size() == 12);  // 1 + 4 + 6 + 1
}

TEST_CASE("level-wise enumeration matches closure of every subset") {
  std::vector<MatroidPtr> instances = {
      uniform(3, 5).matroid,
      dowling(3, 2).matroid,
      graphic_k4().matroid,
      direct_sum(uniform(2, 3).matroid, uniform(2, 3).matroid),
      dowling(3, 3, true).matroid,
      figure1(2).matroid,
  };
  for (const auto& m : instances) {
    auto brute = oracles::brute_force_flats(*m);
    std::size_t total = 0;
    for (int k = 0; k <= m->rank(); ++k) {
      auto level = flats_of_rank(*m, k);
      auto& expected = brute[k];
      CHECK(level.size() == expected.size());
      for (const auto& f : level) {
        CHECK(expected.count(f.elements.bits()) == 1);
        CHECK(m->closure(f.elements) == f.elements);
        CHECK(m->rank(f.elements) == k);
      }
      total += level.size();
    }
    CHECK(all_flats(*m).size() == total);
  }
}

TEST_CASE("distinct flats of equal rank are incomparable") {
  auto m = dowling(3, 2).matroid;
  for (int k = 1; k < m->rank(); ++k) {
    auto level = flats_of_rank(*m, k);
    for (std::size_t i = 0; i < level.size(); ++i)
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        CHECK_FALSE(level[i].elements.subset_of(level[j].elements));
        CHECK_FALSE(level[j].elements.subset_of(level[i].elements));
      }
  }
}

TEST_CASE("the intersection of two flats is a flat") {
  auto m = dowling(4, 2).matroid;
  auto planes = flats_of_rank(*m, 3);
  SplitMix64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = planes[rng.next() % planes.size()];
    const auto& b = planes[rng.next() % planes.size()];
    ElementSet meet = a.elements & b.elements;
    CHECK(m->closure(meet) == meet);
  }
}

TEST_CASE("flat statistics") {
  auto stats = flat_size_stats(*uniform(3, 5).matroid, 2);
  CHECK(stats.count == 10);
  CHECK(stats.total_size == 20);
  CHECK(stats.average == Rational(2));

  auto tl = direct_sum(uniform(2, 3).matroid, uniform(2, 3).matroid);
  CHECK(flat_size_stats(*tl, 3).average == Rational(4));

  CHECK_THROWS_AS(flat_size_stats(*uniform(3, 5).matroid, 4), std::invalid_argument);
}

TEST_CASE("lines are never fewer than points in rank 3") {
  std::vector<MatroidPtr> rank3 = {
      uniform(3, 3).matroid, uniform(3, 5).matroid,   graphic_k4().matroid,
      dowling(3, 2).matroid, dowling(3, 3, true).matroid,
  };
  for (const auto& m : rank3) {
    REQUIRE(m->rank() == 3);
    CHECK(flats_of_rank(*m, 2).size() >= static_cast<std::size_t>(m->size()));
  }
}

TEST_CASE("parallel enumeration is schedule independent") {
  auto m = dowling(4, 2).matroid;
  auto seq = flats_of_rank(*m, 3, 1);
  auto par = flats_of_rank(*m, 3, 4);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    CHECK(seq[i].elements == par[i].elements);

  auto all_seq = all_flats(*figure1(2).matroid, 1);
  auto all_par = all_flats(*figure1(2).matroid, 3);
  REQUIRE(all_seq.size() == all_par.size());
  for (std::size_t i = 0; i < all_seq.size(); ++i)
    CHECK(all_seq[i].elements == all_par[i].elements);
}

TEST_CASE("flats within a restriction stay in parent ids") {
  auto m = dowling(3, 2).matroid;
  ElementSet scope(0b111111000);  // edges only
  auto lines = flats_of_rank_within(*m, scope, 2);
  for (const auto& l : lines) {
    CHECK(l.elements.subset_of(scope));
    CHECK(m->closure_within(l.elements, scope) == l.elements);
  }
}
