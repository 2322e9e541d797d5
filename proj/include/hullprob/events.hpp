#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hullprob/instance.hpp"
#include "hullprob/sqrt_sum.hpp"

namespace hullprob {

/// Conditioning on E_a (topmost sampled point is `top`) or E_{p,q} (also
/// `bottom` is the bottommost), restricted to `support`, with probability
/// overrides allowed on the conditioning points only.
class EventContext {
 public:
  /// E_a over every point of the instance.
  static EventContext topmost(const StochasticInstance& inst, std::size_t a);
  /// E_{p,q} over every point of the instance.
  static EventContext top_bottom(const StochasticInstance& inst, std::size_t p, std::size_t q);

  /// Throws InvalidContext if a conditioning point is missing from the
  /// support or an override targets a non-conditioning point.
  EventContext(const StochasticInstance& inst, std::size_t top, std::optional<std::size_t> bottom,
               std::vector<std::size_t> support,
               std::vector<std::pair<std::size_t, Rational>> overrides = {});

  std::size_t top() const noexcept { return top_; }
  std::optional<std::size_t> bottom() const noexcept { return bottom_; }
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  bool in_support(std::size_t i) const { return i < member_.size() && member_[i]; }
  /// Presence probability of point i under the overrides.
  const Rational& prob(const StochasticInstance& inst, std::size_t i) const;

 private:
  std::size_t top_;
  std::optional<std::size_t> bottom_;
  std::vector<std::size_t> support_;
  std::vector<bool> member_;
  std::vector<std::pair<std::size_t, Rational>> overrides_;
};

/// Pr[E_a].
Rational pr_topmost(const StochasticInstance& inst, std::size_t a);
/// Pr[E_{p,q}]; requires y_p > y_q.
Rational pr_top_bottom(const StochasticInstance& inst, std::size_t p, std::size_t q);

/// Whether r lies in the region Z_{u,v} of the apex a: below h(a), left of
/// l(a,u) (when u != a) and left of l(v,u). Boundary cases are degenerate.
bool in_chain_region(const StochasticInstance& inst, std::size_t a, std::size_t u, std::size_t v,
                     std::size_t r);

/// Pr[F_b]: b follows the apex ctx.top() counter-clockwise.
Rational pr_following_vertex(const StochasticInstance& inst, const EventContext& ctx,
                             std::size_t b);

struct ChainNext {
  /// (u', Pr[N_u']) in sweep order.
  std::vector<std::pair<std::size_t, Rational>> next;
  /// Pr[S intersected with Z_{u,v} is empty].
  Rational none;
};

/// All Pr[N_u'] for u' in Z_{u,v}: one radial sort around u and a running
/// product of absences.
ChainNext pr_chain_next_all(const StochasticInstance& inst, const EventContext& ctx, std::size_t u,
                            std::size_t v);
Rational pr_chain_next(const StochasticInstance& inst, const EventContext& ctx, std::size_t u,
                       std::size_t v, std::size_t next);

/// Points of the support strictly inside the horizontal strip of
/// ctx.top() and *ctx.bottom().
std::vector<std::size_t> strip_points(const StochasticInstance& inst, const EventContext& ctx);

/// Pr[lambda >= z | E_{p,q}] where lambda is the largest measure of a
/// triangle (p, q, r) over sampled strip points r.
Rational pr_lambda_ge(const StochasticInstance& inst, const EventContext& ctx, const Rational& z,
                      Measure measure);
/// Pr[lambda in [lo, hi) | E_{p,q}].
Rational pr_lambda_in(const StochasticInstance& inst, const EventContext& ctx, const Rational& lo,
                      const Rational& hi, Measure measure);

/// Probability that the directed edge u -> v is a counter-clockwise hull
/// edge of the sample.
Rational pr_hull_edge(const StochasticInstance& inst, std::size_t u, std::size_t v);

/// E[A(S)] exactly.
Rational expected_area(const StochasticInstance& inst);
/// E[P(S)] exactly, as a combination of square roots.
SqrtSum expected_perimeter(const StochasticInstance& inst);
SqrtSum expected_measure(const StochasticInstance& inst, Measure measure);

}  // namespace hullprob
