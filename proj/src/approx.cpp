#include "hullprob/approx.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "hullprob/error.hpp"
#include "hullprob/events.hpp"
#include "hullprob/parallel.hpp"

namespace hullprob {

namespace {

const Rational kOne(1);

Budget saturate(const BigInt& v) {
  if (v <= 0) return 0;
  if (v.fits_ulong_p()) return v.get_ui();
  return std::numeric_limits<Budget>::max();
}

void require_epsilon(const Rational& eps) {
  if (eps.sign() <= 0 || eps >= kOne) {
    throw Error(ErrorKind::InvalidEpsilon, "epsilon must lie strictly between 0 and 1");
  }
}

bool measure_below(const Point& p, const Point& q, const Point& r, const Rational& x,
                   Measure measure) {
  if (measure == Measure::Area) return triangle_area(p, q, r) < x;
  return (triangle_perimeter(p, q, r) - SqrtSum(x)).sign() < 0;
}

WeightAssignment rounded_weights(const StochasticInstance& inst, const std::vector<std::size_t>& live,
                                 Measure measure, const RoundingScheme& scheme) {
  if (measure == Measure::Area) {
    WeightAssignment weights = WeightAssignment::area(inst.size());
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        for (std::size_t k = j + 1; k < live.size(); ++k) {
          const std::size_t a = live[i], b = live[j], c = live[k];
          const Budget w =
              scheme.round_area(triangle_area(inst.point(a), inst.point(b), inst.point(c)));
          weights.set_triangle(a, b, c, w);
          weights.set_triangle(a, c, b, w);
          weights.set_triangle(b, a, c, w);
          weights.set_triangle(b, c, a, w);
          weights.set_triangle(c, a, b, w);
          weights.set_triangle(c, b, a, w);
        }
      }
    }
    return weights;
  }
  WeightAssignment weights = WeightAssignment::perimeter(inst.size());
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      const Budget w = scheme.round_length(squared_distance(inst.point(live[i]), inst.point(live[j])));
      weights.set_edge(live[i], live[j], w);
      weights.set_edge(live[j], live[i], w);
    }
  }
  return weights;
}

}  // namespace

RoundingScheme RoundingScheme::make(Measure measure, std::size_t n, const Rational& w,
                                    const Rational& eps) {
  require_epsilon(eps);
  if (w.sign() <= 0) throw Error(ErrorKind::InvalidParams, "rounding needs a positive target");
  const std::size_t parts = std::max<std::size_t>(1, measure == Measure::Area ? n : n + 1);
  RoundingScheme s;
  s.theta = eps / Rational(static_cast<unsigned long>(parts));
  s.w = w;
  s.target = saturate((kOne / s.theta).floor());
  return s;
}

Budget RoundingScheme::round_area(const Rational& area) const {
  return saturate((area / (theta * w)).ceil());
}

Budget RoundingScheme::round_length(const Rational& squared_length) const {
  const Rational unit = theta * w;
  return saturate(ceil_sqrt(squared_length / (unit * unit)));
}

Rational lambda_factor(Measure measure) { return Rational(measure == Measure::Area ? 4 : 7); }

Rational approx_pr_ge(const StochasticInstance& inst, Measure measure, const Rational& w,
                      const Rational& eps) {
  require_epsilon(eps);
  if (w.sign() <= 0) return kOne;
  require_exact_ready(inst);
  const auto live = inst.live_indices();
  if (live.size() < 3) return Rational();

  const RoundingScheme scheme = RoundingScheme::make(measure, live.size(), w, eps);
  const WeightAssignment weights = rounded_weights(inst, live, measure, scheme);
  const Rational low = w / lambda_factor(measure);

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t p : live) {
    for (std::size_t q : live) {
      if (inst.point(p).y > inst.point(q).y) cells.emplace_back(p, q);
    }
  }
  std::vector<Rational> parts(cells.size());
  parallel_for(cells.size(), [&](std::size_t c) {
    const auto [p, q] = cells[c];
    const Rational top = pr_top_bottom(inst, p, q);
    if (top.sign() == 0) return;
    const EventContext ctx = EventContext::top_bottom(inst, p, q);
    const Rational certain = pr_lambda_ge(inst, ctx, w, measure);
    const Rational possible = pr_lambda_ge(inst, ctx, low, measure);
    Rational sigma = certain;
    if (possible > certain) {
      const std::vector<std::size_t> strip = strip_points(inst, ctx);
      // Pr[rounded weight >= target and lambda < x | E_{p,q}]: given lambda < x
      // the strip points with measure >= x are absent and the rest stay
      // independent, so the rounded program runs on what remains.
      auto below = [&](const Rational& x, const Rational& pr_lambda_ge_x) {
        const Rational miss = kOne - pr_lambda_ge_x;
        if (miss.sign() == 0) return Rational();
        std::vector<std::size_t> support{p, q};
        for (std::size_t r : strip) {
          if (measure_below(inst.point(p), inst.point(q), inst.point(r), x, measure)) {
            support.push_back(r);
          }
        }
        const EventContext sub(inst, p, q, std::move(support), {{q, kOne}});
        return miss * ConditionedHullDp(inst, sub, weights).tail(scheme.target);
      };
      sigma += below(w, certain) - below(low, possible);
    }
    parts[c] = top * sigma;
  });
  Rational total;
  for (const Rational& part : parts) total += part;
  return total;
}

Rational approx_pr_area_ge(const StochasticInstance& inst, const Rational& w, const Rational& eps) {
  return approx_pr_ge(inst, Measure::Area, w, eps);
}

Rational approx_pr_perimeter_ge(const StochasticInstance& inst, const Rational& w,
                                const Rational& eps) {
  return approx_pr_ge(inst, Measure::Perimeter, w, eps);
}

Point grid_point(const Point& p, const Rational& delta) {
  return {Rational(BigInt(2 * (p.x / delta).floor())), Rational(BigInt(2 * (p.y / delta).floor()))};
}

GridRounding grid_round(const StochasticInstance& inst, const Rational& delta, bool merge) {
  if (delta.sign() <= 0) throw Error(ErrorKind::InvalidParams, "grid step must be positive");
  auto less = [](const Point& a, const Point& b) { return lex_less(a, b); };
  std::map<Point, std::size_t, decltype(less)> slot(less);
  GridRounding out;
  out.delta = delta;
  std::vector<Point> points;
  std::vector<Rational> absent;
  for (std::size_t i : inst.live_indices()) {
    const Point g = grid_point(inst.point(i), delta);
    auto [it, fresh] = slot.emplace(g, points.size());
    if (fresh) {
      points.push_back(g);
      absent.push_back(kOne - inst.prob(i));
      out.origin.push_back({i});
      continue;
    }
    if (!merge) {
      throw Error(ErrorKind::RoundedDegeneracy, "two points round to the same grid point",
                  {out.origin[it->second].front(), i});
    }
    absent[it->second] *= kOne - inst.prob(i);
    out.origin[it->second].push_back(i);
  }
  std::vector<Rational> probs;
  probs.reserve(absent.size());
  for (const Rational& a : absent) probs.push_back(kOne - a);
  out.image = StochasticInstance(std::move(points), std::move(probs));
  return out;
}

Rational pr_area_ge_bounded(const StochasticInstance& inst, const Rational& w, const Rational& eps,
                            const Rational& U, bool merge) {
  if (eps.sign() <= 0) throw Error(ErrorKind::InvalidEpsilon, "epsilon must be positive");
  if (U.sign() <= 0) throw Error(ErrorKind::InvalidParams, "domain bound must be positive");
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Point& p = inst.point(i);
    if (p.x.sign() < 0 || p.y.sign() < 0 || p.x > U || p.y > U) {
      throw Error(ErrorKind::PreconditionViolated, "point outside [0, U]^2", {i});
    }
  }
  if (w.sign() <= 0) return kOne;
  const Rational delta = eps / (Rational(4) * U);
  const GridRounding g = grid_round(inst, delta, merge);
  try {
    require_exact_ready(g.image);
  } catch (const Error& e) {
    std::vector<std::size_t> witness;
    for (std::size_t i : e.witness()) witness.push_back(g.origin[i].front());
    throw Error(ErrorKind::RoundedDegeneracy, std::string("rounded image: ") + e.what(),
                std::move(witness));
  }
  const Rational target((Rational(4) * w / (delta * delta)).ceil());
  return ExactAreaTail(g.image).pr_ge(target);
}

}  // namespace hullprob
