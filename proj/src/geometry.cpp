#include "hullprob/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hullprob/error.hpp"

namespace hullprob {

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Rational cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

int orient(const Point& p, const Point& q, const Point& r) { return cross(p, q, r).sign(); }

Rational triangle_area(const Point& p, const Point& q, const Point& r) {
  return cross(p, q, r).abs() / Rational(2);
}

Rational squared_distance(const Point& p, const Point& q) {
  const Rational dx = q.x - p.x;
  const Rational dy = q.y - p.y;
  return dx * dx + dy * dy;
}

double distance(const Point& p, const Point& q) {
  return std::sqrt(squared_distance(p, q).to_double());
}

SqrtSum length(const Point& p, const Point& q) { return SqrtSum::sqrt_of(squared_distance(p, q)); }

SqrtSum triangle_perimeter(const Point& p, const Point& q, const Point& r) {
  return length(p, q) + length(q, r) + length(r, p);
}

std::vector<std::size_t> convex_hull_indices(std::span<const Point> points,
                                             std::span<const std::size_t> order) {
  std::vector<std::size_t> unique;
  unique.reserve(order.size());
  for (std::size_t idx : order) {
    if (unique.empty() || !(points[unique.back()] == points[idx])) unique.push_back(idx);
  }
  if (unique.size() <= 1) return unique;

  std::vector<std::size_t> hull(2 * unique.size());
  std::size_t k = 0;
  for (std::size_t idx : unique) {
    while (k >= 2 && orient(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = unique.size() - 1; i-- > 0;) {
    const std::size_t idx = unique[i];
    while (k >= lower && orient(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);
  return hull;
}

Hull convex_hull(std::span<const Point> points, bool presorted) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (!presorted) {
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return lex_less(points[a], points[b]); });
  }
  Hull hull;
  for (std::size_t idx : convex_hull_indices(points, order)) hull.vertices.push_back(points[idx]);
  return hull;
}

Rational hull_area(const Hull& hull) {
  if (hull.degenerate()) return Rational();
  const auto& v = hull.vertices;
  Rational twice;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return twice / Rational(2);
}

SqrtSum hull_perimeter(const Hull& hull) {
  SqrtSum total;
  if (hull.degenerate()) return total;
  const auto& v = hull.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) total += length(v[i], v[(i + 1) % v.size()]);
  return total;
}

SqrtSum hull_measure(const Hull& hull, Measure measure) {
  return measure == Measure::Area ? SqrtSum(hull_area(hull)) : hull_perimeter(hull);
}

std::vector<std::size_t> radial_order_indices(const Point& pivot, const Point& ref_from,
                                              std::span<const Point> candidates) {
  if (pivot == ref_from) {
    throw Error(ErrorKind::PreconditionViolated, "radial reference coincides with the pivot");
  }
  const Point origin{Rational(), Rational()};
  const Point d0{pivot.x - ref_from.x, pivot.y - ref_from.y};
  std::vector<Point> dirs;
  dirs.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i] == pivot) {
      throw Error(ErrorKind::PreconditionViolated, "radial candidate coincides with the pivot", {i});
    }
    dirs.push_back({candidates[i].x - pivot.x, candidates[i].y - pivot.y});
  }
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      if (orient(origin, dirs[i], dirs[j]) == 0) {
        throw Error(ErrorKind::CollinearCandidates, "two candidates are collinear with the pivot",
                    {i, j});
      }
    }
  }
  // Half 0 holds angles in [0, pi) from d0, half 1 holds [pi, 2pi).
  auto half = [&](const Point& v) {
    const int s = orient(origin, d0, v);
    if (s > 0) return 0;
    if (s < 0) return 1;
    const Rational dot = d0.x * v.x + d0.y * v.y;
    return dot.sign() > 0 ? 0 : 1;
  };
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<int> halves(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) halves[i] = half(dirs[i]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (halves[a] != halves[b]) return halves[a] < halves[b];
    return orient(origin, dirs[a], dirs[b]) > 0;
  });
  return order;
}

std::vector<Point> radial_order(const Point& pivot, const Point& ref_from,
                                std::span<const Point> candidates) {
  std::vector<Point> out;
  for (std::size_t idx : radial_order_indices(pivot, ref_from, candidates)) {
    out.push_back(candidates[idx]);
  }
  return out;
}

ExtremalTriangle max_extremal_triangle(const Point& p, const Point& q,
                                       std::span<const Point> others, Measure measure) {
  if (others.empty()) throw Error(ErrorKind::EmptyOthers, "no third point for the triangle");
  if (measure == Measure::Area) {
    std::size_t best = 0;
    Rational best_area = triangle_area(p, q, others[0]);
    for (std::size_t i = 1; i < others.size(); ++i) {
      Rational a = triangle_area(p, q, others[i]);
      if (a > best_area) {
        best_area = std::move(a);
        best = i;
      }
    }
    return {SqrtSum(best_area), best};
  }
  // |pq| is common to every candidate; compare |pr| + |rq| only.
  std::size_t best = 0;
  SqrtSum best_sides = length(p, others[0]) + length(others[0], q);
  for (std::size_t i = 1; i < others.size(); ++i) {
    SqrtSum sides = length(p, others[i]) + length(others[i], q);
    if ((sides - best_sides).sign() > 0) {
      best_sides = std::move(sides);
      best = i;
    }
  }
  return {best_sides + length(p, q), best};
}

}  // namespace hullprob
