#include <doctest.h>

#include "hullprob/error.hpp"
#include "hullprob/hull_dp.hpp"
#include "hullprob/oracle.hpp"
#include "hullprob/reductions.hpp"

using namespace hullprob;

namespace {

SubsetSumInstance ssi(std::vector<long> a, long t, std::size_t k = 0) {
  SubsetSumInstance s;
  for (long v : a) s.a.push_back(BigInt(v));
  s.t = t;
  s.k = k;
  return s;
}

TailEngine oracle_engine(Measure m) {
  return [m](const StochasticInstance& inst, const Rational& w) {
    return oracle_pr_ge(inst, m, SqrtSum(w));
  };
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("subset counting and padding") {
    CHECK(count_subsets(ssi({1, 2, 3}, 3)) == 2);
    CHECK(count_subsets(ssi({1, 2, 3}, 3, 2)) == 1);
    CHECK(count_subsets(ssi({2, 2}, 4, 2)) == 1);
    CHECK(count_subsets(ssi({1, 2}, 0)) == 1);

    const auto p = pad_to_fixed_cardinality(ssi({1, 2, 3}, 3), 2);
    CHECK(p.a == std::vector<BigInt>{8, 9, 10});
    CHECK(p.t == 3 + 2 * 7);
    CHECK(count_subsets(p) == 1);
    const auto one = pad_to_fixed_cardinality(ssi({1}, 1), 1);
    CHECK(one.a == std::vector<BigInt>{3});
    CHECK(one.t == 3);
    const auto twos = pad_to_fixed_cardinality(ssi({2, 2}, 4), 2);
    CHECK(twos.a == std::vector<BigInt>{7, 7});
    CHECK(twos.t == 4 + 2 * 5);
    CHECK(count_subsets(twos) == 1);
    CHECK(kind_of([] { pad_to_fixed_cardinality(ssi({1, 2}, 1), 3); }) == ErrorKind::InvalidParams);
  }

  TEST_CASE("area gadget for a = {1, 2}") {
    const AreaGadget g = build_area_gadget(ssi({1, 2}, 2, 1), Rational(1, 2));
    CHECK(g.scale == 8);
    CHECK(g.b == 16);
    CHECK(g.G == 512);
    CHECK(g.instance.size() == 5);
    CHECK(g.instance.point(area_q_index(1)) == Point{Rational(19, 4) * 8, Rational(2) * 8});
    CHECK(g.instance.point(area_q_index(2)) == Point{Rational(33, 2) * 8, Rational(4) * 8});
    const auto& P = g.instance;
    CHECK(triangle_area(P.point(area_p_index(1)), P.point(area_q_index(1)), P.point(area_p_index(2))) ==
          Rational(16));
    CHECK(triangle_area(P.point(area_p_index(2)), P.point(area_q_index(2)), P.point(area_p_index(3))) ==
          Rational(32));
    CHECK_NOTHROW(verify_area_gadget(g));
    // every triangle on q1, a middle p and q2 is dominant
    const Rational bsum = Rational(g.b) * Rational(3);
    CHECK(triangle_area(P.point(area_q_index(1)), P.point(area_p_index(2)), P.point(area_q_index(2))) >
          bsum);
    CHECK(recover_area_count(g, oracle_engine(Measure::Area)) == 1);
  }

  TEST_CASE("area gadget for a = {1}") {
    const AreaGadget g = build_area_gadget(ssi({1}, 1, 1), Rational(1, 2));
    CHECK(g.instance.size() == 3);
    CHECK(g.b == 4);
    CHECK(triangle_area(g.instance.point(0), g.instance.point(1), g.instance.point(2)) == Rational(4));
    CHECK_NOTHROW(verify_area_gadget(g));
  }

  TEST_CASE("area recovery through the oracle and the exact program") {
    const auto padded = pad_to_fixed_cardinality(ssi({1, 2, 3}, 3), 2);
    const AreaGadget g = build_area_gadget(padded, Rational(1, 2));
    CHECK(recover_area_count(g, oracle_engine(Measure::Area)) == 1);
    CHECK(recover_area_count(g, [](const StochasticInstance& inst, const Rational& w) {
            return pr_area_ge_exact(inst, w);
          }) == 1);
    const AreaGadget single = build_area_gadget(ssi({3}, 3, 1), Rational(1, 3));
    CHECK(recover_area_count(single, oracle_engine(Measure::Area)) == 1);
    const AreaGadget twos = build_area_gadget(pad_to_fixed_cardinality(ssi({2, 2}, 4), 2), Rational(1, 2));
    CHECK(recover_area_count(twos, oracle_engine(Measure::Area)) == 1);
  }

  TEST_CASE("tampering is detected") {
    AreaGadget g = build_area_gadget(ssi({1, 2}, 2, 1), Rational(1, 2));
    g.b += 1;
    CHECK(kind_of([&] { verify_area_gadget(g); }) == ErrorKind::PropertyViolation);
    CHECK(kind_of([&] { recover_area_count(g, oracle_engine(Measure::Area)); }) ==
          ErrorKind::NonIntegralCount);
  }

  TEST_CASE("perimeter gadget for a = {1}") {
    const PerimeterGadget g = build_perimeter_gadget(ssi({1}, 1, 1), Rational(1, 2));
    CHECK(g.c == 320);
    CHECK(g.L == 4 * 320);
    CHECK(g.instance.size() == 5);
    const auto& P = g.instance;
    const std::size_t chain[] = {perimeter_p_index(1), perimeter_s_index(1), perimeter_p_index(2),
                                 perimeter_z_index(1, 1)};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(squared_distance(P.point(chain[i]), P.point(chain[(i + 1) % 4])) == Rational(102400));
    }
    CHECK_NOTHROW(verify_perimeter_gadget(g));
    CHECK(recover_perimeter_count(g, oracle_engine(Measure::Perimeter)) == 1);
  }

  TEST_CASE("perimeter gadget geometry") {
    const PerimeterGadget g = build_perimeter_gadget(ssi({1, 2}, 2, 1), Rational(1, 2));
    CHECK(g.instance.size() == 10);
    CHECK(g.c == 320 * 16 * 2);
    std::vector<Point> hull_pts;
    for (std::size_t i = 0; i < 4 * 2; ++i) hull_pts.push_back(g.instance.point(i));
    CHECK(hull_perimeter(convex_hull(hull_pts)) == SqrtSum(Rational(g.L)));
    CHECK_NOTHROW(verify_perimeter_gadget(g));
  }

  TEST_CASE("perimeter recovery") {
    const auto padded = pad_to_fixed_cardinality(ssi({1, 2, 3}, 3), 2);
    const PerimeterGadget g = build_perimeter_gadget(padded, Rational(1, 2));
    CHECK(recover_perimeter_count(g, oracle_engine(Measure::Perimeter)) == 1);
    const PerimeterGadget single = build_perimeter_gadget(ssi({3}, 3, 1), Rational(1, 2));
    CHECK(recover_perimeter_count(single, oracle_engine(Measure::Perimeter)) == 1);
    const PerimeterGadget none = build_perimeter_gadget(ssi({3}, 4, 1), Rational(1, 2));
    CHECK(recover_perimeter_count(none, oracle_engine(Measure::Perimeter)) == 0);
  }
}
