#include "hullprob/events.hpp"

#include <algorithm>

#include "hullprob/error.hpp"

namespace hullprob {

namespace {

const Rational kOne(1);

void require_index(const StochasticInstance& inst, std::size_t i) {
  if (i >= inst.size()) {
    throw Error(ErrorKind::PreconditionViolated, "point index out of range", {i});
  }
}

void require_no_collinear_live(const StochasticInstance& inst) {
  const auto live = inst.live_indices();
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      for (std::size_t k = j + 1; k < live.size(); ++k) {
        if (orient(inst.point(live[i]), inst.point(live[j]), inst.point(live[k])) == 0) {
          throw Error(ErrorKind::DegenerateInstance, "three collinear points",
                      {live[i], live[j], live[k]});
        }
      }
    }
  }
}

}  // namespace

EventContext EventContext::topmost(const StochasticInstance& inst, std::size_t a) {
  std::vector<std::size_t> all(inst.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return EventContext(inst, a, std::nullopt, std::move(all));
}

EventContext EventContext::top_bottom(const StochasticInstance& inst, std::size_t p,
                                      std::size_t q) {
  std::vector<std::size_t> all(inst.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return EventContext(inst, p, q, std::move(all));
}

EventContext::EventContext(const StochasticInstance& inst, std::size_t top,
                           std::optional<std::size_t> bottom, std::vector<std::size_t> support,
                           std::vector<std::pair<std::size_t, Rational>> overrides)
    : top_(top), bottom_(bottom), support_(std::move(support)), overrides_(std::move(overrides)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  member_.assign(inst.size(), false);
  for (std::size_t i : support_) {
    require_index(inst, i);
    member_[i] = true;
  }
  if (!in_support(top_)) {
    throw Error(ErrorKind::InvalidContext, "topmost point outside the support", {top_});
  }
  if (bottom_ && !in_support(*bottom_)) {
    throw Error(ErrorKind::InvalidContext, "bottommost point outside the support", {*bottom_});
  }
  for (const auto& [i, pr] : overrides_) {
    if (i != top_ && (!bottom_ || i != *bottom_)) {
      throw Error(ErrorKind::InvalidContext, "override on a non-conditioning point", {i});
    }
    if (pr.sign() < 0 || pr > kOne) {
      throw Error(ErrorKind::InvalidContext, "override probability outside [0, 1]", {i});
    }
  }
}

const Rational& EventContext::prob(const StochasticInstance& inst, std::size_t i) const {
  for (const auto& [j, pr] : overrides_) {
    if (j == i) return pr;
  }
  return inst.prob(i);
}

Rational pr_topmost(const StochasticInstance& inst, std::size_t a) {
  require_index(inst, a);
  Rational pr = inst.prob(a);
  const Rational& ya = inst.point(a).y;
  for (std::size_t r = 0; r < inst.size(); ++r) {
    if (r == a || inst.prob(r).sign() == 0) continue;
    const Rational& yr = inst.point(r).y;
    if (yr == ya) {
      throw Error(ErrorKind::DegenerateInstance, "two points share a horizontal line", {a, r});
    }
    if (yr > ya) pr *= kOne - inst.prob(r);
  }
  return pr;
}

Rational pr_top_bottom(const StochasticInstance& inst, std::size_t p, std::size_t q) {
  require_index(inst, p);
  require_index(inst, q);
  const Rational& yp = inst.point(p).y;
  const Rational& yq = inst.point(q).y;
  if (!(yp > yq)) {
    throw Error(ErrorKind::PreconditionViolated, "topmost point must lie above the bottommost",
                {p, q});
  }
  Rational pr = inst.prob(p) * inst.prob(q);
  for (std::size_t r = 0; r < inst.size(); ++r) {
    if (r == p || r == q || inst.prob(r).sign() == 0) continue;
    const Rational& yr = inst.point(r).y;
    if (yr == yp || yr == yq) {
      throw Error(ErrorKind::DegenerateInstance, "two points share a horizontal line",
                  {yr == yp ? p : q, r});
    }
    if (yr > yp || yr < yq) pr *= kOne - inst.prob(r);
  }
  return pr;
}

bool in_chain_region(const StochasticInstance& inst, std::size_t a, std::size_t u, std::size_t v,
                     std::size_t r) {
  if (r == a || r == u || r == v) return false;
  const Point& pa = inst.point(a);
  const Point& pr = inst.point(r);
  if (pr.y == pa.y) {
    throw Error(ErrorKind::DegenerateInstance, "two points share a horizontal line", {a, r});
  }
  if (pr.y > pa.y) return false;
  const Point& pu = inst.point(u);
  if (u != a) {
    const int s = orient(pa, pu, pr);
    if (s == 0) throw Error(ErrorKind::DegenerateInstance, "three collinear points", {a, u, r});
    if (s < 0) return false;
  }
  const int s = orient(inst.point(v), pu, pr);
  if (s == 0) throw Error(ErrorKind::DegenerateInstance, "three collinear points", {v, u, r});
  return s > 0;
}

Rational pr_following_vertex(const StochasticInstance& inst, const EventContext& ctx,
                             std::size_t b) {
  const std::size_t a = ctx.top();
  if (!ctx.in_support(b) || b == a) {
    throw Error(ErrorKind::PreconditionViolated, "following vertex outside the support", {b});
  }
  const Point& pa = inst.point(a);
  const Point& pb = inst.point(b);
  if (!(pb.y < pa.y)) {
    throw Error(ErrorKind::PreconditionViolated, "following vertex must lie below the apex", {a, b});
  }
  Rational pr = ctx.prob(inst, b);
  for (std::size_t r : ctx.support()) {
    if (r == a || r == b) continue;
    const Rational& pi = ctx.prob(inst, r);
    if (pi.sign() == 0) continue;
    const Point& p = inst.point(r);
    if (p.y == pa.y) {
      throw Error(ErrorKind::DegenerateInstance, "two points share a horizontal line", {a, r});
    }
    if (p.y > pa.y) continue;
    const int s = orient(pa, pb, p);
    if (s == 0) throw Error(ErrorKind::DegenerateInstance, "three collinear points", {a, b, r});
    if (s < 0) pr *= kOne - pi;
  }
  return pr;
}

ChainNext pr_chain_next_all(const StochasticInstance& inst, const EventContext& ctx, std::size_t u,
                            std::size_t v) {
  const std::size_t a = ctx.top();
  std::vector<std::size_t> candidates;
  std::vector<Point> pts;
  for (std::size_t r : ctx.support()) {
    if (ctx.prob(inst, r).sign() == 0) continue;
    if (in_chain_region(inst, a, u, v, r)) {
      candidates.push_back(r);
      pts.push_back(inst.point(r));
    }
  }
  ChainNext out;
  out.none = kOne;
  std::vector<std::size_t> order;
  try {
    order = radial_order_indices(inst.point(u), inst.point(v), pts);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CollinearCandidates) throw;
    throw Error(ErrorKind::DegenerateInstance, "radial tie around a chain vertex",
                {u, candidates[e.witness()[0]], candidates[e.witness()[1]]});
  }
  for (std::size_t k : order) {
    const std::size_t r = candidates[k];
    const Rational& pi = ctx.prob(inst, r);
    out.next.emplace_back(r, pi * out.none);
    out.none *= kOne - pi;
  }
  return out;
}

Rational pr_chain_next(const StochasticInstance& inst, const EventContext& ctx, std::size_t u,
                       std::size_t v, std::size_t next) {
  const ChainNext all = pr_chain_next_all(inst, ctx, u, v);
  for (const auto& [r, pr] : all.next) {
    if (r == next) return pr;
  }
  if (ctx.in_support(next) && ctx.prob(inst, next).sign() == 0 &&
      in_chain_region(inst, ctx.top(), u, v, next)) {
    return Rational();
  }
  throw Error(ErrorKind::PreconditionViolated, "candidate is not in the chain region", {u, v, next});
}

std::vector<std::size_t> strip_points(const StochasticInstance& inst, const EventContext& ctx) {
  if (!ctx.bottom()) {
    throw Error(ErrorKind::InvalidContext, "strip requires a bottommost conditioning point");
  }
  const std::size_t p = ctx.top();
  const std::size_t q = *ctx.bottom();
  const Rational& yp = inst.point(p).y;
  const Rational& yq = inst.point(q).y;
  std::vector<std::size_t> out;
  for (std::size_t r : ctx.support()) {
    if (r == p || r == q || ctx.prob(inst, r).sign() == 0) continue;
    const Rational& yr = inst.point(r).y;
    if (yr == yp || yr == yq) {
      throw Error(ErrorKind::DegenerateInstance, "two points share a horizontal line",
                  {yr == yp ? p : q, r});
    }
    if (yr < yp && yr > yq) out.push_back(r);
  }
  return out;
}

Rational pr_lambda_ge(const StochasticInstance& inst, const EventContext& ctx, const Rational& z,
                      Measure measure) {
  const Point& p = inst.point(ctx.top());
  const Point& q = inst.point(*ctx.bottom());
  Rational none = kOne;
  for (std::size_t r : strip_points(inst, ctx)) {
    const Point& pr = inst.point(r);
    const bool qualifies = measure == Measure::Area
                               ? triangle_area(p, q, pr) >= z
                               : (triangle_perimeter(p, q, pr) - SqrtSum(z)).sign() >= 0;
    if (qualifies) none *= kOne - ctx.prob(inst, r);
  }
  return kOne - none;
}

Rational pr_lambda_in(const StochasticInstance& inst, const EventContext& ctx, const Rational& lo,
                      const Rational& hi, Measure measure) {
  if (hi <= lo) return Rational();
  return pr_lambda_ge(inst, ctx, lo, measure) - pr_lambda_ge(inst, ctx, hi, measure);
}

Rational pr_hull_edge(const StochasticInstance& inst, std::size_t u, std::size_t v) {
  require_index(inst, u);
  require_index(inst, v);
  if (u == v) throw Error(ErrorKind::PreconditionViolated, "hull edge needs two points", {u});
  Rational pr = inst.prob(u) * inst.prob(v);
  if (pr.sign() == 0) return pr;
  const Point& pu = inst.point(u);
  const Point& pv = inst.point(v);
  for (std::size_t r = 0; r < inst.size(); ++r) {
    if (r == u || r == v || inst.prob(r).sign() == 0) continue;
    const int s = orient(pu, pv, inst.point(r));
    if (s == 0) throw Error(ErrorKind::DegenerateInstance, "three collinear points", {u, v, r});
    if (s < 0) pr *= kOne - inst.prob(r);
  }
  return pr;
}

Rational expected_area(const StochasticInstance& inst) {
  // Signed shoelace in expectation; the two directions of a two-point
  // sample cancel.
  require_no_collinear_live(inst);
  Rational twice;
  for (std::size_t u = 0; u < inst.size(); ++u) {
    for (std::size_t v = 0; v < inst.size(); ++v) {
      if (u == v) continue;
      const Point& pu = inst.point(u);
      const Point& pv = inst.point(v);
      const Rational shoelace = pu.x * pv.y - pv.x * pu.y;
      if (shoelace.sign() == 0) continue;
      twice += shoelace * pr_hull_edge(inst, u, v);
    }
  }
  return twice / Rational(2);
}

SqrtSum expected_perimeter(const StochasticInstance& inst) {
  require_no_collinear_live(inst);
  SqrtSum total;
  for (std::size_t u = 0; u < inst.size(); ++u) {
    for (std::size_t v = 0; v < inst.size(); ++v) {
      if (u == v) continue;
      Rational weight = pr_hull_edge(inst, u, v);
      if (weight.sign() == 0) continue;
      // A two-point sample has perimeter 0, not 2|uv|.
      Rational pair_only = inst.prob(u) * inst.prob(v);
      for (std::size_t r = 0; r < inst.size(); ++r) {
        if (r != u && r != v) pair_only *= kOne - inst.prob(r);
      }
      weight -= pair_only;
      if (weight.sign() != 0) total += length(inst.point(u), inst.point(v)) * weight;
    }
  }
  return total;
}

SqrtSum expected_measure(const StochasticInstance& inst, Measure measure) {
  return measure == Measure::Area ? SqrtSum(expected_area(inst)) : expected_perimeter(inst);
}

}  // namespace hullprob
