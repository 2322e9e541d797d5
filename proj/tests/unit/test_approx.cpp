#include <doctest.h>

#include <random>

#include "hullprob/approx.hpp"
#include "hullprob/error.hpp"
#include "hullprob/hull_dp.hpp"
#include "hullprob/oracle.hpp"
#include "support/generators.hpp"

using namespace hullprob;
using hullprob::testing::from_ints;
using hullprob::testing::q4;

TEST_SUITE("approx") {
  TEST_CASE("rounding scheme") {
    const auto s = RoundingScheme::make(Measure::Area, 4, Rational(100), Rational(1, 10));
    CHECK(s.theta == Rational(1, 40));
    CHECK(s.target == 40);
    CHECK(s.round_area(Rational(58)) == 24);  // ceil(58 / 2.5)
    CHECK(s.round_area(Rational(5)) == 2);
    const auto p = RoundingScheme::make(Measure::Perimeter, 4, Rational(100), Rational(1, 10));
    CHECK(p.theta == Rational(1, 50));
    CHECK(p.round_length(Rational(25)) == 3);  // ceil(5 / 2)
    CHECK(p.round_length(Rational(16)) == 2);
    CHECK(lambda_factor(Measure::Area) == Rational(4));
    CHECK(lambda_factor(Measure::Perimeter) == Rational(7));
    CHECK_THROWS_AS(RoundingScheme::make(Measure::Area, 4, Rational(1), Rational(0)), Error);
    CHECK_THROWS_AS(RoundingScheme::make(Measure::Area, 4, Rational(1), Rational(1)), Error);
  }

  TEST_CASE("forced values on Q4") {
    const auto inst = q4();
    CHECK(approx_pr_area_ge(inst, Rational(116), Rational(1, 10)) == Rational(1, 16));
    CHECK(approx_pr_area_ge(inst, Rational(58), Rational(1, 2)) == Rational(5, 16));
    CHECK(approx_pr_area_ge(inst, Rational(4 * 58 + 1), Rational(1, 10)) == Rational(0));
    CHECK(approx_pr_area_ge(inst, Rational(0), Rational(1, 10)) == Rational(1));
  }

  TEST_CASE("perimeter on a certain triangle") {
    const auto tri = from_ints({{0, 0}, {3, 1}, {0, 4}}, Rational(1));
    const SqrtSum rho = hull_perimeter(convex_hull(tri.points()));
    // w above 1.01 rho; the sandwich only forces 0 once (1 - eps) w > rho
    const Rational hi = Rational(BigInt(rho.floor() + 1)) * Rational(101, 100);
    CHECK(approx_pr_perimeter_ge(tri, hi, Rational(1, 100)) == Rational(0));
    const Rational loose = approx_pr_perimeter_ge(tri, hi, Rational(1, 10));
    CHECK((loose == Rational(0) || loose == Rational(1)));
    const Rational lo = Rational(rho.floor()) / Rational(2);
    CHECK(approx_pr_perimeter_ge(tri, lo, Rational(1, 10)) == Rational(1));
    CHECK(approx_pr_perimeter_ge(tri, Rational(7 * 13), Rational(1, 10)) == Rational(0));
  }

  TEST_CASE("sandwich on random instances") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 8; ++rep) {
      hullprob::testing::InstanceSpec spec;
      spec.n = 4 + rep % 3;
      const auto inst = hullprob::testing::random_instance(rng, spec);
      for (Measure m : {Measure::Area, Measure::Perimeter}) {
        const auto table = exact_distribution(inst, m);
        for (const auto& e : table.entries) {
          if (e.value.sign() <= 0) continue;
          const Rational w(e.value.floor() + 1);
          const Rational eps(3, 10);
          const Rational s = approx_pr_ge(inst, m, w, eps);
          CHECK(table.pr_ge(w) <= s);
          CHECK(s <= table.pr_ge((Rational(1) - eps) * w));
        }
      }
    }
  }

  TEST_CASE("grid rounding") {
    CHECK(grid_point({Rational(51, 100), Rational(26, 100)}, Rational(1, 40)) ==
          Point{Rational(40), Rational(20)});
    const auto even = from_ints({{0, 0}, {6, 2}, {8, 10}, {2, 6}}, Rational(1, 2));
    const GridRounding g = grid_round(even, Rational(1));
    for (std::size_t i = 0; i < even.size(); ++i) {
      CHECK(g.image.point(i).x == Rational(2) * even.point(i).x);
      CHECK(g.image.point(i).y == Rational(2) * even.point(i).y);
    }
    CHECK(pr_area_ge_exact(g.image, Rational(4 * 20)) == pr_area_ge_exact(even, Rational(20)));
  }

  TEST_CASE("bounded sandwich on Q4") {
    const auto inst = q4();
    for (long w : {58L, 116L}) {
      const Rational s = pr_area_ge_bounded(inst, Rational(w), Rational(1), Rational(14));
      CHECK(oracle_pr_ge(inst, Measure::Area, Rational(w + 1)) <= s);
      CHECK(s <= oracle_pr_ge(inst, Measure::Area, Rational(w - 1)));
    }
    CHECK_THROWS_AS(pr_area_ge_bounded(inst, Rational(1), Rational(1), Rational(13)), Error);
  }

  TEST_CASE("coincident images") {
    StochasticInstance close({{Rational(0), Rational(0)},
                              {Rational(1, 1000), Rational(1, 1000)},
                              {Rational(5), Rational(1)},
                              {Rational(2), Rational(6)}},
                             std::vector<Rational>(4, Rational(1, 2)));
    try {
      grid_round(close, Rational(1, 4));
      FAIL("expected RoundedDegeneracy");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RoundedDegeneracy);
      CHECK(e.witness().size() >= 2);
    }
    const GridRounding merged = grid_round(close, Rational(1, 4), true);
    CHECK(merged.image.size() == 3);
    CHECK(merged.image.prob(0) == Rational(3, 4));
    CHECK(merged.origin[0] == std::vector<std::size_t>{0, 1});
  }
}
