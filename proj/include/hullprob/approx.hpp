#pragma once

#include <cstddef>
#include <vector>

#include "hullprob/hull_dp.hpp"
#include "hullprob/instance.hpp"

namespace hullprob {

/// theta = eps/n (area) or eps/(n+1) (perimeter); a triangle area or edge
/// length a becomes ceil(a / (theta * w)) and the target becomes floor(1/theta).
struct RoundingScheme {
  Rational theta;
  Rational w;
  Budget target = 0;

  static RoundingScheme make(Measure measure, std::size_t n, const Rational& w,
                             const Rational& eps);
  /// ceil(a / (theta * w)).
  Budget round_area(const Rational& area) const;
  /// ceil(sqrt(squared_length) / (theta * w)), exactly.
  Budget round_length(const Rational& squared_length) const;
};

/// The constant c with lambda <= m(X) <= c * lambda: 4 for area, 7 for perimeter.
Rational lambda_factor(Measure measure);

/// Sandwich value sigma with
///   Pr[m(S) >= w] <= sigma <= Pr[m(S) >= (1 - eps) w],
/// exact. Requires eps in (0, 1) (InvalidEpsilon) and distinct y plus no
/// collinear triple among positive-probability points (DegenerateInstance).
/// w <= 0 gives 1.
Rational approx_pr_ge(const StochasticInstance& inst, Measure measure, const Rational& w,
                       const Rational& eps);
Rational approx_pr_area_ge(const StochasticInstance& inst, const Rational& w, const Rational& eps);
Rational approx_pr_perimeter_ge(const StochasticInstance& inst, const Rational& w,
                                const Rational& eps);

/// Image of an instance under (x, y) -> (2 floor(x / delta), 2 floor(y / delta)).
struct GridRounding {
  Rational delta;
  StochasticInstance image;
  /// origin[i] lists the source indices that landed on image point i.
  std::vector<std::vector<std::size_t>> origin;
};

Point grid_point(const Point& p, const Rational& delta);

/// Without `merge`, coincident positive-probability images raise
/// RoundedDegeneracy. With it they become one point of probability
/// 1 - prod(1 - pi). Zero-probability points are dropped.
GridRounding grid_round(const StochasticInstance& inst, const Rational& delta, bool merge = false);

/// sigma~ with Pr[A(S) >= w + eps] <= sigma~ <= Pr[A(S) >= w - eps] for
/// points inside [0, U]^2: delta = eps / (4U), exact DP on the rounded image
/// at target ceil(4w / delta^2). RoundedDegeneracy when the image breaks the
/// DP's general-position needs.
Rational pr_area_ge_bounded(const StochasticInstance& inst, const Rational& w, const Rational& eps,
                            const Rational& U, bool merge = false);

}  // namespace hullprob
