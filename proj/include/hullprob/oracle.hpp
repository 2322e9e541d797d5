#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hullprob/hull_dp.hpp"
#include "hullprob/instance.hpp"
#include "hullprob/sqrt_sum.hpp"

namespace hullprob {

/// Only points with 0 < pi < 1 are enumerated; certain points join every
/// sample and impossible ones none. The cap bounds the enumerated count.
struct OracleOptions {
  std::size_t cap = 20;
};

struct DistributionEntry {
  SqrtSum value;  // rational for area
  Rational pr;
};

struct DistributionTable {
  Measure measure = Measure::Area;
  /// Strictly increasing values; probabilities sum to exactly one.
  std::vector<DistributionEntry> entries;
  /// FNV-1a over the serialized instance.
  std::uint64_t digest = 0;

  /// Pr[m >= w] by certified comparison.
  Rational pr_ge(const SqrtSum& w) const;
  SqrtSum expectation() const;
};

std::uint64_t instance_digest(const StochasticInstance& inst);

/// Throws TooLarge beyond the cap.
DistributionTable exact_distribution(const StochasticInstance& inst, Measure measure,
                                     OracleOptions options = {});

Rational oracle_pr_ge(const StochasticInstance& inst, Measure measure, const SqrtSum& w,
                      OracleOptions options = {});
SqrtSum oracle_expected(const StochasticInstance& inst, Measure measure,
                        OracleOptions options = {});

/// Pr[weighted hull measure >= w] by enumeration, using the DP's weighted
/// measure: area sums weights of the fan triangles (a, v_i, v_{i+1}) from the
/// sample's topmost hull vertex a in ccw order; perimeter sums the weights of
/// all ccw hull edges. Hulls with at most two vertices weigh 0. Needs distinct
/// y among positive-probability points (DegenerateInstance).
Rational weighted_oracle_pr_ge(const StochasticInstance& inst, const WeightAssignment& weights,
                               Budget w, OracleOptions options = {});
/// Pr[weighted measure >= w | E_apex].
Rational weighted_oracle_pr_ge_given_top(const StochasticInstance& inst,
                                         const WeightAssignment& weights, Budget w,
                                         std::size_t apex, OracleOptions options = {});

struct LambdaReport {
  std::size_t top = 0;
  std::size_t bottom = 0;
  std::size_t witness = 0;
  SqrtSum lambda;
  SqrtSum measure;
  double ratio = 0;
  /// lambda <= m(X) <= c * lambda, decided exactly.
  bool within = false;
};

/// Needs at least three points, distinct y and no collinear triple
/// (DegenerateInput).
LambdaReport check_lambda_bounds(std::span<const Point> points, Measure measure);

}  // namespace hullprob
