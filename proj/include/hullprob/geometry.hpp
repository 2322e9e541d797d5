#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hullprob/rational.hpp"
#include "hullprob/sqrt_sum.hpp"

namespace hullprob {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class Measure { Area, Perimeter };

/// Lexicographic (x, then y).
bool lex_less(const Point& a, const Point& b);

/// Twice the signed area of (p, q, r); positive for a left turn.
Rational cross(const Point& p, const Point& q, const Point& r);

/// +1 if r is strictly left of the directed line through p towards q,
/// -1 if strictly right, 0 if collinear.
int orient(const Point& p, const Point& q, const Point& r);

Rational triangle_area(const Point& p, const Point& q, const Point& r);
Rational squared_distance(const Point& p, const Point& q);
/// Approximate (double) Euclidean distance.
double distance(const Point& p, const Point& q);
/// Exact length as a certified real.
SqrtSum length(const Point& p, const Point& q);
SqrtSum triangle_perimeter(const Point& p, const Point& q, const Point& r);

struct Hull {
  /// Counter-clockwise, starting from the lexicographically least vertex.
  /// Collinear boundary points are dropped.
  std::vector<Point> vertices;

  bool empty() const { return vertices.empty(); }
  /// Fewer than three vertices: empty, a point, or a segment.
  bool degenerate() const { return vertices.size() < 3; }
};

/// Monotone chain with exact orientation tests. With `presorted` the input is
/// trusted to be in lex order and a single linear pass is made.
Hull convex_hull(std::span<const Point> points, bool presorted = false);

/// Hull vertex indices into `points`, ccw from the lex-least vertex. `order`
/// lists the candidate indices in lex order (duplicates are collapsed).
std::vector<std::size_t> convex_hull_indices(std::span<const Point> points,
                                             std::span<const std::size_t> order);

/// Degenerate hulls (at most two vertices) measure 0 for both area and perimeter.
Rational hull_area(const Hull& hull);
SqrtSum hull_perimeter(const Hull& hull);
SqrtSum hull_measure(const Hull& hull, Measure measure);

/// Candidates sorted by the counter-clockwise angle of (pivot -> candidate),
/// measured from the direction (ref_from -> pivot). Throws
/// CollinearCandidates if two candidates are collinear with the pivot.
std::vector<std::size_t> radial_order_indices(const Point& pivot, const Point& ref_from,
                                              std::span<const Point> candidates);
std::vector<Point> radial_order(const Point& pivot, const Point& ref_from,
                                std::span<const Point> candidates);

/// Largest measure of a triangle (p, q, r) over r in `others`. Ties keep the
/// first candidate in input order.
struct ExtremalTriangle {
  SqrtSum value;
  std::size_t witness;
};
ExtremalTriangle max_extremal_triangle(const Point& p, const Point& q,
                                       std::span<const Point> others, Measure measure);

}  // namespace hullprob
