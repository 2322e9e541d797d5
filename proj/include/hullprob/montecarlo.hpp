#pragma once

#include <cstdint>
#include <functional>

#include "hullprob/instance.hpp"

namespace hullprob {

/// ceil(ln(2/delta) / (2 eps^2)), with the logarithm bracketed by directed
/// rounding until both ends of the bracket share one ceiling.
/// InvalidParams unless eps, delta lie in (0, 1).
std::uint64_t sample_count(const Rational& eps, const Rational& delta);

struct McPlan {
  Rational eps;
  Rational delta;
  std::uint64_t samples = 0;
  std::uint64_t master_seed = 0;

  static McPlan make(const Rational& eps, const Rational& delta, std::uint64_t master_seed);
};

/// Seed of trial i: the (i+1)-th output of a SplitMix64 stream started at the
/// master seed, computed directly so trials can run in any order.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial);

struct McResult {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  Rational pr;  // hits / samples
};

/// Fraction of N sampled hulls whose measure is at least w. Ties count as
/// hits; perimeter comparisons are certified. No general-position needs.
McResult mc_pr_measure_ge(const StochasticInstance& inst, Measure measure, const Rational& w,
                          const McPlan& plan);

/// Same estimator for an arbitrary hull statistic. The predicate is called
/// concurrently from several threads.
McResult mc_pr_event(const StochasticInstance& inst, const std::function<bool(const Hull&)>& event,
                     const McPlan& plan);

}  // namespace hullprob
