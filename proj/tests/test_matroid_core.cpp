#include "flatkit/generators.hpp"
#include "flatkit/matroid.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <thread>

using namespace flatkit;

namespace {

// dowling(3,2) element ids: v1=0 v2=1 v3=2, then edges in (i,j,g) order:
// e12.0=3 e12.1=4 e13.0=5 e13.1=6 e23.0=7 e23.1=8
MatroidPtr dg32() { return dowling(3, 2).matroid; }

MatroidPtr two_lines(int a) {
  return direct_sum(uniform(2, a).matroid, uniform(2, a).matroid);
}

}  // namespace

TEST_CASE("ground set validation") {
  CHECK_THROWS_AS(GroundSet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(GroundSet({""}), std::invalid_argument);
  CHECK_THROWS_AS(GroundSet(numeric_labels(65)), std::invalid_argument);
}

TEST_CASE("gain-graph rank oracle on dowling(3,2)") {
  auto m = dg32();
  CHECK(m->size() == 9);
  CHECK(m->rank() == 3);
  CHECK(m->rank(ElementSet::single(0)) == 1);            // a joint
  CHECK(m->rank(ElementSet::of({3, 4})) == 2);           // unbalanced digon
  CHECK(m->rank(ElementSet::of({3, 5, 7})) == 2);        // balanced triangle
  CHECK(m->rank(ElementSet::of({3, 5, 8})) == 3);        // unbalanced triangle
  CHECK_THROWS_AS(m->rank(ElementSet::single(12)), std::out_of_range);
}

TEST_CASE("closure") {
  auto m = dg32();
  CHECK(m->closure(ElementSet::of({0, 1})) == ElementSet::of({0, 1, 3, 4}));
  CHECK(m->closure(ElementSet()) == ElementSet());

  auto u35 = uniform(3, 5).matroid;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      CHECK(u35->closure(ElementSet::of({a, b})) == ElementSet::of({a, b}));
}

TEST_CASE("closure is idempotent and rank-preserving") {
  for (const auto& m : {dg32(), uniform(3, 5).matroid, graphic_k4().matroid}) {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      ElementSet x(rng.next() & m->all().bits());
      ElementSet cl = m->closure(x);
      CHECK(m->rank(cl) == m->rank(x));
      CHECK(m->closure(cl) == cl);
      CHECK(x.subset_of(cl));
    }
  }
}

TEST_CASE("restriction") {
  auto m = dg32();
  CHECK(oracles::same_oracle(*m, *restrict_to(m, m->all())));

  auto u33 = restrict_to(uniform(3, 5).matroid, ElementSet::of({0, 2, 4}));
  CHECK(oracles::same_oracle(*u33, UniformMatroid(3, 3)));

  auto affine = restrict_to(dowling(3, 3).matroid, ElementSet(0b111111111000));
  CHECK(affine->size() == 9);
  CHECK(affine->rank() == 3);
}

TEST_CASE("contraction") {
  auto u34 = uniform(3, 4).matroid;
  CHECK(oracles::same_oracle(*u34, *contract(u34, ElementSet())));

  auto contracted = contract(u34, ElementSet::single(0));
  // brute-force check of the contraction rank formula over all subsets
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    ElementSet x(bits);
    ElementSet base_x;
    for (int e : x.elements()) base_x = base_x.with(e + 1);
    CHECK(contracted->rank(x) ==
          u34->rank(base_x | ElementSet::single(0)) - u34->rank(ElementSet::single(0)));
  }
  auto simplified = simplify(contracted);
  CHECK(simplified.matroid->size() == 3);
  CHECK(simplified.matroid->rank() == 2);

  auto m = dg32();
  for (std::uint64_t bits : {0b101ull, 0b1100ull, 0b10001ull}) {
    ElementSet c(bits);
    CHECK(contract(m, c)->rank() == m->rank() - m->rank(c));
  }
}

TEST_CASE("restriction and contraction commute on disjoint sets") {
  auto m = dg32();
  SplitMix64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    ElementSet c(rng.next() & m->all().bits());
    ElementSet x(rng.next() & m->all().minus(c).bits());
    // contract C then restrict to X, in contracted ids
    auto keep = m->all().minus(c).elements();
    ElementSet x_in_mc;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (x.contains(keep[i])) x_in_mc = x_in_mc.with(static_cast<int>(i));
    auto path1 = restrict_to(contract(m, c), x_in_mc);
    // restrict to X + C then contract C, in restricted ids
    auto kept = (x | c).elements();
    ElementSet c_in_mr;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (c.contains(kept[i])) c_in_mr = c_in_mr.with(static_cast<int>(i));
    auto path2 = contract(restrict_to(m, x | c), c_in_mr);
    CHECK(oracles::same_oracle(*path1, *path2));
  }
}

TEST_CASE("truncation") {
  auto m = dg32();
  CHECK(oracles::same_oracle(*m, *truncate_to(m, m->rank())));
  CHECK(oracles::same_oracle(*truncate_to(uniform(4, 6).matroid, 3),
                             UniformMatroid(3, 6)));
  CHECK_THROWS_AS(truncate_to(m, 0), std::invalid_argument);
  CHECK_THROWS_AS(truncate_to(m, 4), std::invalid_argument);
}

TEST_CASE("principal truncation") {
  auto m = dg32();
  CHECK(oracles::same_oracle(*principal_truncate(m, m->all()),
                             *truncate_to(m, m->rank() - 1)));

  // collapsing a line of two skew lines: rank drops to 3 and the line becomes
  // a single parallel class
  auto tl = two_lines(3);
  ElementSet first_line = ElementSet::of({0, 1, 2});
  auto pt = principal_truncate(tl, first_line);
  CHECK(pt->rank() == 3);
  auto simplified = simplify(pt);
  CHECK(simplified.matroid->size() == 4);
  CHECK(simplified.element_map[0] == simplified.element_map[1]);
  CHECK(simplified.element_map[0] == simplified.element_map[2]);

  // dowling(3,2), F = L_{1,2}: rank of E drops to 2
  ElementSet line12 = ElementSet::of({0, 1, 3, 4});
  auto ptd = principal_truncate(m, line12);
  CHECK(ptd->rank() == 2);
  // formula check against the base oracle on every subset
  for (std::uint64_t bits = 0; bits < (1ull << 9); ++bits) {
    ElementSet x(bits);
    int expected = m->rank(x | line12) == m->rank(x) ? m->rank(x) - 1 : m->rank(x);
    CHECK(ptd->rank(x) == expected);
  }

  CHECK_THROWS_AS(principal_truncate(m, ElementSet::of({0, 1})),
                  std::invalid_argument);  // not a flat
  CHECK_THROWS_AS(principal_truncate(m, ElementSet()), std::invalid_argument);
}

TEST_CASE("direct sum") {
  auto tl = two_lines(3);
  CHECK(tl->size() == 6);
  CHECK(tl->rank() == 4);
  CHECK(oracles::same_oracle(*direct_sum(dg32(), uniform(0, 0).matroid), *dg32()));
}

TEST_CASE("two-sum of two 3-point lines is U_{3,4}") {
  auto ts = two_sum(uniform(2, 3).matroid, 0, uniform(2, 3).matroid, 0);
  CHECK(oracles::same_oracle(*ts, UniformMatroid(3, 4)));
}

TEST_CASE("two-sum rank additivity") {
  auto k4 = graphic_k4().matroid;
  auto s1 = two_sum(k4, 0, uniform(2, 5).matroid, 0);
  CHECK(s1->rank() == 4);  // 3 + 2 - 1
  auto s2 = two_sum(s1, 0, uniform(2, 5).matroid, 0);
  CHECK(s2->rank() == 5);
  auto s3 = two_sum(s2, 1, uniform(2, 5).matroid, 0);
  CHECK(s3->rank() == 6);
}

TEST_CASE("two-sum rejects bad basepoints") {
  // coloops: every element of U_{3,3}
  CHECK_THROWS_AS(two_sum(uniform(3, 3).matroid, 0, uniform(2, 3).matroid, 0),
                  std::invalid_argument);
  // loops: a zero column
  Matrix<Rational> w(2, 3);
  w.at(0, 1) = 1;
  w.at(1, 2) = 1;
  auto with_loop = std::make_shared<LinearMatroid<Rational>>(std::move(w),
                                                             numeric_labels(3));
  CHECK_THROWS_AS(two_sum(with_loop, 0, uniform(2, 3).matroid, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(two_sum(uniform(2, 2).matroid, 0, uniform(2, 3).matroid, 0),
                  std::invalid_argument);
}

TEST_CASE("simplify") {
  auto m = dg32();
  auto s = simplify(m);
  CHECK(s.matroid->size() == m->size());
  for (int e = 0; e < m->size(); ++e) CHECK(s.element_map[e] == e);

  // a loop column and a parallel pair collapse
  Matrix<Rational> w(2, 4);
  w.at(0, 1) = 1;          // e1
  w.at(0, 2) = 2;          // parallel to column 1
  w.at(1, 3) = 1;          // e2
  auto messy = std::make_shared<LinearMatroid<Rational>>(std::move(w),
                                                         numeric_labels(4));
  CHECK_FALSE(messy->is_simple());
  auto sm = simplify(messy);
  CHECK(sm.matroid->size() == 2);
  CHECK(sm.element_map[0] == -1);
  CHECK(sm.element_map[1] == sm.element_map[2]);
  CHECK(sm.matroid->is_simple());
}

TEST_CASE("rank axioms hold exhaustively on small instances") {
  CHECK(oracles::check_rank_axioms_exhaustive(*uniform(3, 5).matroid));
  CHECK(oracles::check_rank_axioms_exhaustive(*dg32()));
  CHECK(oracles::check_rank_axioms_exhaustive(*graphic_k4().matroid));
  CHECK(oracles::check_rank_axioms_exhaustive(*two_lines(3)));
  CHECK(oracles::check_rank_axioms_exhaustive(
      *two_sum(uniform(2, 3).matroid, 0, uniform(2, 3).matroid, 0)));
  CHECK(oracles::check_rank_axioms_exhaustive(
      *from_incidence(6, {ElementSet::of({0, 1, 2, 3, 4})}, true, true).matroid));
}

TEST_CASE("rank axioms hold on sampled larger instances") {
  CHECK(oracles::check_rank_axioms_sampled(*dowling(4, 2).matroid, 3000, 1));
  CHECK(oracles::check_rank_axioms_sampled(*dowling(4, 3).matroid, 1500, 2));
  CHECK(oracles::check_rank_axioms_sampled(*figure1(2).matroid, 1500, 3));
  CHECK(oracles::check_rank_axioms_sampled(*figure1(3).matroid, 800, 4));
}

TEST_CASE("memoized ranks are consistent under concurrent access") {
  auto m = dowling(3, 3).matroid;
  std::vector<int> expected(1 << 12);
  for (std::uint64_t b = 0; b < expected.size(); ++b)
    expected[b] = m->rank(ElementSet(b));
  auto fresh = dowling(3, 3).matroid;
  std::vector<std::thread> threads;
  std::vector<char> ok(8, 1);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      SplitMix64 rng(100 + t);
      for (int i = 0; i < 20000; ++i) {
        std::uint64_t b = rng.next() % expected.size();
        if (fresh->rank(ElementSet(b)) != expected[b]) ok[t] = 0;
      }
    });
  }
  for (auto& th : threads) th.join();
  for (char v : ok) CHECK(v == 1);
}

TEST_CASE("labels survive derived constructions") {
  auto m = dg32();
  auto r = restrict_to(m, ElementSet::of({0, 3, 4}));
  CHECK(r->ground().label(0) == "v1");
  CHECK(r->ground().label(1) == "e1.2.0");
  auto tl = two_lines(3);
  CHECK(tl->ground().label(0) == "0");
  CHECK(tl->ground().label(3) == "0'");  // collision resolved
}
