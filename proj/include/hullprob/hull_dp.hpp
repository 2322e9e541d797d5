#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hullprob/events.hpp"
#include "hullprob/instance.hpp"

namespace hullprob {

using Budget = std::uint64_t;

/// Natural-number surrogate measures consumed by the dynamic program.
///
/// Area mode holds a weight for every canonical triangle (apex, u, u'); the
/// program conditioned on topmost point a reads the slice with apex a.
/// Perimeter mode holds a weight for every ordered pair (u, u'), which covers
/// the opening edge (a, b) and the closing edge (u_k, a) as well.
class WeightAssignment {
 public:
  static WeightAssignment area(std::size_t n);
  static WeightAssignment perimeter(std::size_t n);

  Measure mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return n_; }

  Budget triangle(std::size_t apex, std::size_t u, std::size_t v) const;
  void set_triangle(std::size_t apex, std::size_t u, std::size_t v, Budget w);
  Budget edge(std::size_t u, std::size_t v) const;
  void set_edge(std::size_t u, std::size_t v, Budget w);

 private:
  WeightAssignment(Measure mode, std::size_t n, std::size_t cells)
      : mode_(mode), n_(n), values_(cells, 0) {}

  Measure mode_;
  std::size_t n_;
  std::vector<Budget> values_;
};

struct DpOptions {
  /// Thresholds above this raise BudgetOverflow.
  Budget max_budget = Budget{1} << 62;
};

/// Pr[weighted hull measure >= w | E_a] for one apex a = ctx.top().
///
/// Area mode evaluates T[u,v,z], the probability that the canonical
/// triangles of the remaining chain inside Z_{u,v} weigh at least z:
///   T[u,v,0] = 1,
///   T[u,v,z] = sum over u' of Pr[N_u'] * (w(u,u') >= z ? 1 : T[u',u, z - w(u,u')]),
/// and the answer is sum over b of Pr[F_b] * T[b,a,w].
///
/// Perimeter mode evaluates C[u,v,z] for the rest of the boundary, which
/// closes with the edge (u,a) once Z_{u,v} holds no sampled point:
///   C[u,v,0] = 1,
///   C[u,v,z] = Pr[Z_{u,v} empty] * [w(u,a) >= z]
///              + sum over u' of Pr[N_u'] * C[u',u, z -. w(u,u')],
/// and the top level consumes the edges (a,b) and (b,u') before entering C,
/// so that hulls with at most two vertices measure 0.
///
/// Entries are memoized per admissible pair on demand and shared across
/// thresholds, so repeated tail() calls on one object are cheap.
class ConditionedHullDp {
 public:
  /// Throws DegenerateSupport when the support (positive-probability points)
  /// has a y-tie or three collinear points.
  ConditionedHullDp(const StochasticInstance& inst, const EventContext& ctx,
                    const WeightAssignment& weights, DpOptions options = {});

  Rational tail(Budget w);
  std::size_t memo_entries() const;

 private:
  struct Step {
    std::size_t to;
    Rational pr;
  };
  struct PairData {
    bool admissible = false;
    std::vector<Step> next;
    Rational none;
    std::unordered_map<Budget, Rational> memo;
  };

  PairData& pair(std::size_t u, std::size_t v) { return pairs_[u * m_ + v]; }
  Budget weight(std::size_t u, std::size_t v) const { return weights_[u * m_ + v]; }
  const Rational& area_table(std::size_t u, std::size_t v, Budget z);
  const Rational& boundary_table(std::size_t u, std::size_t v, Budget z);

  Measure mode_;
  DpOptions options_;
  std::size_t m_ = 0;                  // local points; local 0 is the apex
  std::vector<Budget> weights_;        // m_ x m_
  std::vector<Rational> following_;    // Pr[F_b] by local index, 0 for the apex
  std::vector<PairData> pairs_;        // m_ x m_
};

Rational pr_weighted_area_ge_given_top(const StochasticInstance& inst, const EventContext& ctx,
                                       const WeightAssignment& weights, Budget w);
Rational pr_weighted_perimeter_ge_given_top(const StochasticInstance& inst,
                                            const EventContext& ctx,
                                            const WeightAssignment& weights, Budget w);

/// sum over a of Pr[E_a] * Pr[weighted measure >= w | E_a], with one memoized
/// program per apex. Apex programs are evaluated concurrently.
class WeightedTail {
 public:
  WeightedTail(const StochasticInstance& inst, const WeightAssignment& weights,
               DpOptions options = {});
  Rational pr_ge(Budget w);

 private:
  std::vector<Rational> top_probability_;
  std::vector<std::unique_ptr<ConditionedHullDp>> programs_;
};

/// Exact Pr[A(S) >= w] for instances whose triangles all have natural areas.
/// Checks integrality up front (NonIntegerAreas with a witness triple) and
/// requires distinct y coordinates and no collinear triple among the
/// positive-probability points (DegenerateInstance).
class ExactAreaTail {
 public:
  explicit ExactAreaTail(const StochasticInstance& inst, DpOptions options = {});
  /// w <= 0 gives 1; otherwise the program runs at ceil(w).
  Rational pr_ge(const Rational& w);

 private:
  DpOptions options_;
  std::unique_ptr<WeightedTail> tail_;
};

/// The weight table of true triangle areas; throws NonIntegerAreas.
WeightAssignment integer_area_weights(const StochasticInstance& inst);

Rational pr_area_ge_exact(const StochasticInstance& inst, const Rational& w);
Rational pr_perimeter_ge_exact(const StochasticInstance& inst, const WeightAssignment& weights,
                               Budget w);

/// Converts a rational threshold to a budget: ceil(w), BudgetOverflow when
/// it exceeds the bound. Callers handle w <= 0 first.
Budget to_budget(const Rational& w, const DpOptions& options = {});

}  // namespace hullprob
