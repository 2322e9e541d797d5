#include "hullprob/hull_dp.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "hullprob/error.hpp"
#include "hullprob/parallel.hpp"

namespace hullprob {

namespace {

const Rational kOne(1);

Budget clamp_budget(const BigInt& v) {
  if (v <= 0) return 0;
  if (v.fits_ulong_p() && sizeof(unsigned long) >= sizeof(Budget)) return v.get_ui();
  const BigInt cap(std::to_string(std::numeric_limits<Budget>::max()));
  if (v >= cap) return std::numeric_limits<Budget>::max();
  return std::stoull(v.get_str());
}

void check_weight_size(const StochasticInstance& inst, const WeightAssignment& weights) {
  if (weights.size() != inst.size()) {
    throw Error(ErrorKind::PreconditionViolated, "weight table does not match the instance size");
  }
}

}  // namespace

WeightAssignment WeightAssignment::area(std::size_t n) {
  return WeightAssignment(Measure::Area, n, n * n * n);
}

WeightAssignment WeightAssignment::perimeter(std::size_t n) {
  return WeightAssignment(Measure::Perimeter, n, n * n);
}

Budget WeightAssignment::triangle(std::size_t apex, std::size_t u, std::size_t v) const {
  if (mode_ != Measure::Area) throw Error(ErrorKind::PreconditionViolated, "not an area table");
  if (apex >= n_ || u >= n_ || v >= n_) {
    throw Error(ErrorKind::PreconditionViolated, "weight index out of range", {apex, u, v});
  }
  return values_[(apex * n_ + u) * n_ + v];
}

void WeightAssignment::set_triangle(std::size_t apex, std::size_t u, std::size_t v, Budget w) {
  if (mode_ != Measure::Area) throw Error(ErrorKind::PreconditionViolated, "not an area table");
  if (apex >= n_ || u >= n_ || v >= n_) {
    throw Error(ErrorKind::PreconditionViolated, "weight index out of range", {apex, u, v});
  }
  values_[(apex * n_ + u) * n_ + v] = w;
}

Budget WeightAssignment::edge(std::size_t u, std::size_t v) const {
  if (mode_ != Measure::Perimeter) {
    throw Error(ErrorKind::PreconditionViolated, "not a perimeter table");
  }
  if (u >= n_ || v >= n_) {
    throw Error(ErrorKind::PreconditionViolated, "weight index out of range", {u, v});
  }
  return values_[u * n_ + v];
}

void WeightAssignment::set_edge(std::size_t u, std::size_t v, Budget w) {
  if (mode_ != Measure::Perimeter) {
    throw Error(ErrorKind::PreconditionViolated, "not a perimeter table");
  }
  if (u >= n_ || v >= n_) {
    throw Error(ErrorKind::PreconditionViolated, "weight index out of range", {u, v});
  }
  values_[u * n_ + v] = w;
}

Budget to_budget(const Rational& w, const DpOptions& options) {
  const BigInt c = w.ceil();
  if (c <= 0) return 0;
  const Budget b = clamp_budget(c);
  if (b > options.max_budget) {
    throw Error(ErrorKind::BudgetOverflow, "threshold exceeds the budget bound");
  }
  return b;
}

ConditionedHullDp::ConditionedHullDp(const StochasticInstance& inst, const EventContext& ctx,
                                     const WeightAssignment& weights, DpOptions options)
    : mode_(weights.mode()), options_(options) {
  check_weight_size(inst, weights);
  const std::size_t a = ctx.top();
  const Point& pa = inst.point(a);

  std::vector<std::size_t> global{a};
  std::vector<std::size_t> positive;
  for (std::size_t r : ctx.support()) {
    if (ctx.prob(inst, r).sign() == 0) continue;
    positive.push_back(r);
    if (r != a && inst.point(r).y < pa.y) global.push_back(r);
  }
  std::sort(positive.begin(), positive.end(),
            [&](std::size_t i, std::size_t j) { return inst.point(i).y < inst.point(j).y; });
  for (std::size_t k = 1; k < positive.size(); ++k) {
    if (inst.point(positive[k]).y == inst.point(positive[k - 1]).y) {
      throw Error(ErrorKind::DegenerateSupport, "two support points share a horizontal line",
                  {positive[k - 1], positive[k]});
    }
  }
  for (std::size_t i = 0; i < global.size(); ++i) {
    for (std::size_t j = i + 1; j < global.size(); ++j) {
      for (std::size_t k = j + 1; k < global.size(); ++k) {
        if (orient(inst.point(global[i]), inst.point(global[j]), inst.point(global[k])) == 0) {
          throw Error(ErrorKind::DegenerateSupport, "three collinear support points",
                      {global[i], global[j], global[k]});
        }
      }
    }
  }

  m_ = global.size();
  std::vector<std::size_t> local(inst.size(), m_);
  for (std::size_t i = 0; i < m_; ++i) local[global[i]] = i;

  weights_.assign(m_ * m_, 0);
  for (std::size_t u = 0; u < m_; ++u) {
    for (std::size_t v = 0; v < m_; ++v) {
      if (u == v) continue;
      weights_[u * m_ + v] = mode_ == Measure::Area ? weights.triangle(a, global[u], global[v])
                                                     : weights.edge(global[u], global[v]);
    }
  }

  following_.assign(m_, Rational());
  pairs_.resize(m_ * m_);
  // Only pairs reachable from some opening edge ever get evaluated.
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t b = 1; b < m_; ++b) {
    following_[b] = pr_following_vertex(inst, ctx, global[b]);
    if (following_[b].sign() != 0) queue.emplace_back(b, 0);
  }
  while (!queue.empty()) {
    const auto [u, v] = queue.back();
    queue.pop_back();
    PairData& pd = pair(u, v);
    if (pd.admissible) continue;
    pd.admissible = true;
    ChainNext next = pr_chain_next_all(inst, ctx, global[u], global[v]);
    pd.none = std::move(next.none);
    for (auto& [r, pr] : next.next) {
      const std::size_t lr = local[r];
      if (lr == m_) continue;
      pd.next.push_back({lr, std::move(pr)});
      if (!pair(lr, u).admissible) queue.emplace_back(lr, u);
    }
  }
}

const Rational& ConditionedHullDp::area_table(std::size_t u, std::size_t v, Budget z) {
  PairData& pd = pair(u, v);
  if (auto it = pd.memo.find(z); it != pd.memo.end()) return it->second;
  Rational acc;
  for (const Step& step : pd.next) {
    const Budget w = weight(u, step.to);
    if (w >= z) {
      acc += step.pr;
    } else {
      acc += step.pr * area_table(step.to, u, z - w);
    }
  }
  return pd.memo.emplace(z, std::move(acc)).first->second;
}

const Rational& ConditionedHullDp::boundary_table(std::size_t u, std::size_t v, Budget z) {
  PairData& pd = pair(u, v);
  if (auto it = pd.memo.find(z); it != pd.memo.end()) return it->second;
  Rational acc;
  if (weight(u, 0) >= z) acc = pd.none;
  for (const Step& step : pd.next) {
    const Budget w = weight(u, step.to);
    if (w >= z) {
      acc += step.pr;
    } else {
      acc += step.pr * boundary_table(step.to, u, z - w);
    }
  }
  return pd.memo.emplace(z, std::move(acc)).first->second;
}

Rational ConditionedHullDp::tail(Budget w) {
  if (w == 0) return kOne;
  if (w > options_.max_budget) {
    throw Error(ErrorKind::BudgetOverflow, "threshold exceeds the budget bound");
  }
  Rational total;
  for (std::size_t b = 1; b < m_; ++b) {
    if (following_[b].sign() == 0) continue;
    Rational given_b;
    if (mode_ == Measure::Area) {
      given_b = area_table(b, 0, w);
    } else {
      const Budget open = weight(0, b);
      const Budget z = open >= w ? 0 : w - open;
      for (const Step& step : pair(b, 0).next) {
        const Budget second = weight(b, step.to);
        if (second >= z) {
          given_b += step.pr;
        } else {
          given_b += step.pr * boundary_table(step.to, b, z - second);
        }
      }
    }
    total += following_[b] * given_b;
  }
  return total;
}

std::size_t ConditionedHullDp::memo_entries() const {
  std::size_t total = 0;
  for (const PairData& pd : pairs_) total += pd.memo.size();
  return total;
}

Rational pr_weighted_area_ge_given_top(const StochasticInstance& inst, const EventContext& ctx,
                                       const WeightAssignment& weights, Budget w) {
  if (weights.mode() != Measure::Area) {
    throw Error(ErrorKind::PreconditionViolated, "area program needs triangle weights");
  }
  if (w == 0) return kOne;
  return ConditionedHullDp(inst, ctx, weights).tail(w);
}

Rational pr_weighted_perimeter_ge_given_top(const StochasticInstance& inst,
                                            const EventContext& ctx,
                                            const WeightAssignment& weights, Budget w) {
  if (weights.mode() != Measure::Perimeter) {
    throw Error(ErrorKind::PreconditionViolated, "perimeter program needs edge weights");
  }
  if (w == 0) return kOne;
  return ConditionedHullDp(inst, ctx, weights).tail(w);
}

WeightedTail::WeightedTail(const StochasticInstance& inst, const WeightAssignment& weights,
                           DpOptions options) {
  check_weight_size(inst, weights);
  std::vector<std::size_t> apexes;
  for (std::size_t a : inst.live_indices()) {
    Rational pr = pr_topmost(inst, a);
    if (pr.sign() == 0) continue;
    apexes.push_back(a);
    top_probability_.push_back(std::move(pr));
  }
  programs_.resize(apexes.size());
  parallel_for(apexes.size(), [&](std::size_t i) {
    programs_[i] = std::make_unique<ConditionedHullDp>(
        inst, EventContext::topmost(inst, apexes[i]), weights, options);
  });
}

Rational WeightedTail::pr_ge(Budget w) {
  if (w == 0) return kOne;
  std::vector<Rational> given(programs_.size());
  parallel_for(programs_.size(), [&](std::size_t i) { given[i] = programs_[i]->tail(w); });
  Rational total;
  for (std::size_t i = 0; i < given.size(); ++i) total += top_probability_[i] * given[i];
  return total;
}

WeightAssignment integer_area_weights(const StochasticInstance& inst) {
  const std::size_t n = inst.size();
  WeightAssignment weights = WeightAssignment::area(n);
  const auto live = inst.live_indices();
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      for (std::size_t k = j + 1; k < live.size(); ++k) {
        const std::size_t a = live[i], b = live[j], c = live[k];
        const Rational area = triangle_area(inst.point(a), inst.point(b), inst.point(c));
        if (!area.is_integer()) {
          throw Error(ErrorKind::NonIntegerAreas, "triangle area " + area.str() + " is not natural",
                      {a, b, c});
        }
        const Budget w = clamp_budget(area.num());
        for (const auto& [x, y, z] : {std::array{a, b, c}, std::array{a, c, b}, std::array{b, a, c},
                                      std::array{b, c, a}, std::array{c, a, b}, std::array{c, b, a}}) {
          weights.set_triangle(x, y, z, w);
        }
      }
    }
  }
  return weights;
}

ExactAreaTail::ExactAreaTail(const StochasticInstance& inst, DpOptions options)
    : options_(options) {
  require_exact_ready(inst);
  tail_ = std::make_unique<WeightedTail>(inst, integer_area_weights(inst), options);
}

Rational ExactAreaTail::pr_ge(const Rational& w) {
  if (w.sign() <= 0) return kOne;
  return tail_->pr_ge(to_budget(w, options_));
}

Rational pr_area_ge_exact(const StochasticInstance& inst, const Rational& w) {
  if (w.sign() <= 0) return kOne;
  return ExactAreaTail(inst).pr_ge(w);
}

Rational pr_perimeter_ge_exact(const StochasticInstance& inst, const WeightAssignment& weights,
                               Budget w) {
  if (weights.mode() != Measure::Perimeter) {
    throw Error(ErrorKind::PreconditionViolated, "perimeter program needs edge weights");
  }
  require_exact_ready(inst);
  if (w == 0) return kOne;
  return WeightedTail(inst, weights).pr_ge(w);
}

}  // namespace hullprob
