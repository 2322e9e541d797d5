#include <doctest.h>

#include "hullprob/error.hpp"
#include "hullprob/geometry.hpp"

using namespace hullprob;

namespace {
Point P(long x, long y) { return {Rational(x), Rational(y)}; }
}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("orientation") {
    CHECK(orient(P(0, 0), P(1, 0), P(0, 1)) == 1);
    CHECK(orient(P(0, 0), P(1, 0), P(2, 0)) == 0);
    CHECK(orient(P(0, 0), P(0, 1), P(1, 0)) == -1);
  }

  TEST_CASE("triangle areas") {
    CHECK(triangle_area(P(0, 0), P(4, 0), P(0, 4)) == Rational(8));
    CHECK(triangle_area(P(0, 0), P(12, 2), P(14, 12)) == Rational(58));
    CHECK(triangle_area(P(1, 1), P(9, 3), P(25, 5)) == Rational(8));
  }

  TEST_CASE("distances") {
    CHECK(squared_distance(P(0, 0), P(3, 4)) == Rational(25));
    CHECK(distance(P(0, 0), P(3, 4)) == doctest::Approx(5.0));
    CHECK(squared_distance(P(0, 0), P(1, 1)) == Rational(2));
    CHECK(distance(P(0, 0), P(1, 1)) == doctest::Approx(1.41421356));
    const Point half{Rational(1, 2), Rational(0)};
    CHECK(squared_distance(half, P(0, 0)) == Rational(1, 4));
    CHECK(length(half, P(0, 0)) == SqrtSum(Rational(1, 2)));
  }

  TEST_CASE("hulls") {
    const std::vector<Point> q4{P(0, 0), P(12, 2), P(14, 12), P(2, 10)};
    const Hull h = convex_hull(q4);
    REQUIRE(h.vertices.size() == 4);
    CHECK(h.vertices[0] == P(0, 0));
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(orient(h.vertices[i], h.vertices[(i + 1) % 4], h.vertices[(i + 2) % 4]) == 1);
    }
    CHECK(hull_area(h) == Rational(116));

    const std::vector<Point> seg{P(0, 0), P(1, 0), P(2, 0)};
    CHECK(convex_hull(seg).degenerate());
    CHECK(hull_area(convex_hull(seg)) == Rational(0));

    const Hull empty = convex_hull({});
    CHECK(empty.empty());
    CHECK(hull_area(empty) == Rational(0));
    CHECK(hull_perimeter(empty) == SqrtSum(0));

    const std::vector<Point> two{P(0, 0), P(3, 4)};
    CHECK(hull_perimeter(convex_hull(two)) == SqrtSum(0));
    const std::vector<Point> tri{P(0, 0), P(3, 0), P(0, 4)};
    CHECK(hull_perimeter(convex_hull(tri)) == SqrtSum(12));
  }

  TEST_CASE("hull drops interior and boundary points") {
    const std::vector<Point> pts{P(0, 0), P(4, 0), P(4, 4), P(0, 4), P(2, 2), P(2, 0)};
    const Hull h = convex_hull(pts);
    CHECK(h.vertices.size() == 4);
    CHECK(hull_area(h) == Rational(16));
    CHECK(hull_perimeter(h) == SqrtSum(16));
  }

  TEST_CASE("radial order") {
    const std::vector<Point> c1{P(1, 1), P(-1, 1), P(0, 1)};
    const auto r1 = radial_order(P(0, 0), P(1, 0), c1);
    REQUIRE(r1.size() == 3);
    CHECK(r1[0] == P(1, 1));
    CHECK(r1[1] == P(0, 1));
    CHECK(r1[2] == P(-1, 1));
    const std::vector<Point> c2{P(1, 2), P(2, 1)};
    const auto r2 = radial_order(P(0, 0), P(1, 0), c2);
    CHECK(r2[0] == P(2, 1));
    CHECK(r2[1] == P(1, 2));
    const std::vector<Point> c3{P(1, 1), P(2, 2)};
    try {
      radial_order(P(0, 0), P(1, 0), c3);
      FAIL("expected CollinearCandidates");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CollinearCandidates);
    }
  }

  TEST_CASE("extremal triangle") {
    const std::vector<Point> others{P(12, 2), P(2, 10)};
    const auto t = max_extremal_triangle(P(14, 12), P(0, 0), others, Measure::Area);
    CHECK(t.value == SqrtSum(58));
    CHECK(t.witness == 0);
    const std::vector<Point> o2{P(3, 0)};
    CHECK(max_extremal_triangle(P(0, 4), P(0, 0), o2, Measure::Perimeter).value == SqrtSum(12));
    const std::vector<Point> o3{P(1, 0)};
    CHECK(max_extremal_triangle(P(0, 1), P(0, 0), o3, Measure::Area).value ==
          SqrtSum(Rational(1, 2)));
  }
}
