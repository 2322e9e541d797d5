#include "hullprob/reductions.hpp"

#include <map>
#include <string>

#include "hullprob/error.hpp"

namespace hullprob {

namespace {

const Rational kOne(1);

void violation(const std::string& property, const std::string& detail) {
  throw Error(ErrorKind::PropertyViolation, "property (" + property + ") failed: " + detail);
}

void require_input(const SubsetSumInstance& ssi, const Rational& rho) {
  if (ssi.a.empty()) throw Error(ErrorKind::InvalidParams, "subset-sum values must be nonempty");
  for (const BigInt& v : ssi.a) {
    if (v <= 0) throw Error(ErrorKind::InvalidParams, "subset-sum values must be positive");
  }
  if (ssi.t < 0) throw Error(ErrorKind::InvalidParams, "target must be natural");
  if (ssi.k > ssi.a.size()) throw Error(ErrorKind::InvalidParams, "cardinality exceeds n");
  if (rho.sign() <= 0 || rho >= kOne) {
    throw Error(ErrorKind::InvalidParams, "rho must lie strictly between 0 and 1");
  }
}

BigInt max_of(const std::vector<BigInt>& a) {
  BigInt m = a.front();
  for (const BigInt& v : a) {
    if (v > m) m = v;
  }
  return m;
}

BigInt sum_of(const std::vector<BigInt>& a) {
  BigInt s = 0;
  for (const BigInt& v : a) s += v;
  return s;
}

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& f, const Point& a) { return {f * a.x, f * a.y}; }
Point midpoint(const Point& a, const Point& b) {
  const Rational half(1, 2);
  return half * (a + b);
}

// Strictly convex, clockwise, in the given cyclic order.
void require_clockwise(const std::vector<Point>& cycle, const std::string& property) {
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]) != -1) {
      violation(property, "vertices " + std::to_string(i) + ".." + std::to_string(i + 2) +
                              " are not a clockwise turn");
    }
  }
}

BigInt require_natural(const Rational& r, const std::string& property, const std::string& what) {
  if (!r.is_integer() || r.sign() < 0) violation(property, what + " = " + r.str() + " is not natural");
  return r.num();
}

Rational tail(const TailEngine& pr_ge, const StochasticInstance& inst, const BigInt& w) {
  return pr_ge(inst, Rational(w));
}

BigInt checked_quotient(const Rational& diff, const Rational& den) {
  const Rational q = diff / den;
  if (!q.is_integer() || q.sign() < 0) {
    throw Error(ErrorKind::NonIntegralCount, "recovered count " + q.str() + " is not natural");
  }
  return q.num();
}

void require_count_params(const SubsetSumInstance& ssi, const Rational& rho) {
  if (ssi.k == 0 || ssi.k > ssi.a.size()) {
    throw Error(ErrorKind::InvalidParams, "recovery needs a cardinality k in [1..n]");
  }
  if (rho.sign() <= 0 || rho >= kOne) {
    throw Error(ErrorKind::InvalidParams, "rho must lie strictly between 0 and 1");
  }
}

}  // namespace

BigInt count_subsets(const SubsetSumInstance& ssi) {
  // by_size[j][s]: number of j-element index sets with sum s.
  const std::size_t n = ssi.a.size();
  std::vector<std::map<BigInt, BigInt>> by_size(n + 1);
  by_size[0][BigInt(0)] = 1;
  for (const BigInt& v : ssi.a) {
    for (std::size_t j = n; j-- > 0;) {
      for (const auto& [s, c] : by_size[j]) by_size[j + 1][s + v] += c;
    }
  }
  BigInt total = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    if (ssi.k != 0 && j != ssi.k) continue;
    if (auto it = by_size[j].find(ssi.t); it != by_size[j].end()) total += it->second;
  }
  return total;
}

SubsetSumInstance pad_to_fixed_cardinality(const SubsetSumInstance& ssi, std::size_t k) {
  if (k < 1 || k > ssi.a.size()) {
    throw Error(ErrorKind::InvalidParams, "cardinality must lie in [1..n]");
  }
  const BigInt M = 1 + sum_of(ssi.a);
  SubsetSumInstance out;
  for (const BigInt& v : ssi.a) out.a.push_back(v + M);
  out.t = ssi.t + BigInt(static_cast<unsigned long>(k)) * M;
  out.k = k;
  return out;
}

std::size_t area_p_index(std::size_t i) { return 2 * (i - 1); }
std::size_t area_q_index(std::size_t i) { return 2 * i - 1; }
std::size_t perimeter_p_index(std::size_t i) { return 2 * (i - 1); }
std::size_t perimeter_s_index(std::size_t i) { return 2 * i - 1; }
std::size_t perimeter_z_index(std::size_t n, std::size_t j) { return 2 * n + j; }
std::size_t perimeter_q_index(std::size_t n, std::size_t i) { return 4 * n + i - 1; }

AreaGadget build_area_gadget(const SubsetSumInstance& ssi, const Rational& rho) {
  require_input(ssi, rho);
  const std::size_t n = ssi.a.size();
  const BigInt top = max_of(ssi.a);
  const Rational nn(static_cast<unsigned long>(n));

  auto p = [](std::size_t i) {
    const long v = 2 * static_cast<long>(i) - 1;
    return Point{Rational(v * v), Rational(v)};
  };
  auto s = [](std::size_t j) {
    const long v = 2 * static_cast<long>(j);
    return Point{Rational(v * v), Rational(v)};
  };

  AreaGadget g;
  g.ssi = ssi;
  g.rho = rho;
  g.scale = 2 * BigInt(static_cast<unsigned long>(n)) * top;
  g.b = 4 * BigInt(static_cast<unsigned long>(n)) * top;
  const Rational scale(g.scale);

  std::vector<Point> points;
  for (std::size_t i = 1; i <= n; ++i) {
    const Point m = midpoint(p(i), p(i + 1));
    const Rational lambda = Rational(ssi.a[i - 1]) / (nn * Rational(top));
    points.push_back(scale * p(i));
    points.push_back(scale * (m + lambda * (s(i) - m)));
  }
  points.push_back(scale * p(n + 1));

  std::vector<Point> chain;
  for (std::size_t i = 1; i <= n + 1; ++i) chain.push_back(points[area_p_index(i)]);
  g.G = require_natural(hull_area(convex_hull(chain)), "e", "G");
  g.instance = StochasticInstance(points, std::vector<Rational>(points.size(), rho));
  verify_area_gadget(g);
  return g;
}

void verify_area_gadget(const AreaGadget& g) {
  const std::size_t n = g.ssi.a.size();
  if (g.instance.size() != 2 * n + 1) violation("a", "expected 2n+1 points");
  const auto pts = g.instance.points();
  auto P = [&](std::size_t i) -> const Point& { return pts[area_p_index(i)]; };
  auto Q = [&](std::size_t i) -> const Point& { return pts[area_q_index(i)]; };

  require_clockwise(std::vector<Point>(pts.begin(), pts.end()), "a");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (g.instance.prob(i) != g.rho) violation("c", "point " + std::to_string(i) + " has pi != rho");
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const Rational area = triangle_area(P(j), Q(j), P(j + 1));
    if (area != Rational(g.b * g.ssi.a[j - 1])) {
      violation("d", "triangle " + std::to_string(j) + " has area " + area.str());
    }
  }
  std::vector<Point> chain;
  for (std::size_t i = 1; i <= n + 1; ++i) chain.push_back(P(i));
  const Rational G = hull_area(convex_hull(chain));
  if (G != Rational(g.G)) violation("e", "G = " + G.str());
  // Every triangle of an instance with even integer coordinates has natural area.
  for (const Point& q : pts) {
    for (const Rational* c : {&q.x, &q.y}) {
      if (!c->is_integer() || c->num() % 2 != 0) violation("e", "coordinate " + c->str() + " is not even");
    }
  }
  const BigInt bound = g.b * sum_of(g.ssi.a);
  if (hull_area(convex_hull(pts)) != Rational(g.G + bound)) violation("e", "A(P) != G + b sum a");
  if (n >= 2) {
    auto check = [&](const Point& x, const Point& y, const Point& z, const std::string& what) {
      const Rational area = triangle_area(x, y, z);
      if (!(area > Rational(bound))) violation("f", what + " has area " + area.str());
    };
    for (std::size_t i = 1; i < n; ++i) check(Q(i), P(i + 1), Q(i + 1), "q_i p_i+1 q_i+1");
    check(P(1), Q(1), P(n + 1), "p_1 q_1 p_n+1");
    check(P(1), Q(n), P(n + 1), "p_1 q_n p_n+1");
  }
}

PerimeterGadget build_perimeter_gadget(const SubsetSumInstance& ssi, const Rational& rho) {
  require_input(ssi, rho);
  const std::size_t n = ssi.a.size();
  const BigInt nn(static_cast<unsigned long>(n));

  PerimeterGadget g;
  g.ssi = ssi;
  g.rho = rho;
  g.c = 320 * nn * nn * nn * nn * max_of(ssi.a);
  g.L = 4 * nn * g.c;
  g.slack = Rational(BigInt(1), 2 * nn);
  const Rational c(g.c);

  auto v = [&](std::size_t k) {
    const Rational kk(static_cast<unsigned long>(k * k));
    return Point{c * (kk - 1) / (kk + 1), c * Rational(static_cast<unsigned long>(2 * k)) / (kk + 1)};
  };

  std::vector<Point> points;
  std::vector<Rational> probs;
  Point p{Rational(), Rational()};
  std::vector<Point> ps{p};
  std::vector<Point> ss;
  for (std::size_t i = 1; i <= n; ++i) {
    const Point s = p + v(2 * i - 1);
    p = s + v(2 * i);
    ss.push_back(s);
    ps.push_back(p);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    points.push_back(ps[i - 1]);
    probs.push_back(kOne);
    points.push_back(ss[i - 1]);
    probs.push_back(rho);
  }
  points.push_back(ps[n]);
  probs.push_back(kOne);
  Point z = ps[n];
  for (std::size_t j = 1; j <= 2 * n - 1; ++j) {
    z = z - v(j);
    points.push_back(z);
    probs.push_back(kOne);
  }

  // q_i = m + t (s - m) with dyadic t: |p q|^2 = |p m|^2 + t^2 |s m|^2 because
  // s m is perpendicular to p p'. Take the least t = num / 2^j with
  // t^2 |s m|^2 >= z, refining j until |p q| < c - a + slack.
  const Rational eps2 = g.slack * g.slack;
  for (std::size_t i = 1; i <= n; ++i) {
    const Point& pi = ps[i - 1];
    const Point& s = ss[i - 1];
    const Point m = midpoint(pi, ps[i]);
    const Rational d2 = squared_distance(pi, m);
    const Rational sm2 = squared_distance(s, m);
    const Rational low = c - Rational(ssi.a[i - 1]);
    const Rational high = low + g.slack;
    const Rational zz = low * low - d2;
    if (zz.sign() <= 0) violation("q", "c - a_" + std::to_string(i) + " does not exceed |p m|");
    // kappa = floor(log2((1 + 2 ceil(sqrt z)) / eps^2)); the argument is >= 4.
    const BigInt ratio = (Rational(BigInt(1 + 2 * ceil_sqrt(zz))) / eps2).floor();
    const std::size_t kappa = mpz_sizeinbase(ratio.get_mpz_t(), 2) - 1;
    bool placed = false;
    for (std::size_t j = kappa + 1; j <= kappa + 256 && !placed; ++j) {
      BigInt pow2 = 1;
      pow2 <<= j;
      const Rational scale_sq(BigInt(pow2 * pow2));
      const BigInt num = ceil_sqrt(zz * scale_sq / sm2);
      const Rational t(num, pow2);
      if (!(t.sign() > 0 && t < kOne)) continue;
      const Rational q2 = d2 + t * t * sm2;
      if (q2 < high * high) {
        points.push_back(m + t * (s - m));
        probs.push_back(kOne);
        placed = true;
      }
    }
    if (!placed) violation("q", "no dyadic placement found for q_" + std::to_string(i));
  }
  g.instance = StochasticInstance(std::move(points), std::move(probs));
  verify_perimeter_gadget(g);
  return g;
}

void verify_perimeter_gadget(const PerimeterGadget& g) {
  const std::size_t n = g.ssi.a.size();
  if (g.instance.size() != 5 * n) violation("chain", "expected 5n points");
  const auto pts = g.instance.points();
  std::vector<Point> chain(pts.begin(), pts.begin() + 4 * n);
  require_clockwise(chain, "chain");
  const Rational c(g.c);
  const Rational c2 = c * c;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (squared_distance(chain[i], chain[(i + 1) % chain.size()]) != c2) {
      violation("chain", "edge " + std::to_string(i) + " does not have length c");
    }
  }
  if (g.L != 4 * BigInt(static_cast<unsigned long>(n)) * g.c) violation("chain", "L != 4nc");
  if (hull_perimeter(convex_hull(chain)) != SqrtSum(Rational(g.L))) {
    violation("chain", "hull perimeter differs from L");
  }
  for (std::size_t i = 0; i < 4 * n; ++i) {
    const bool s_point = i % 2 == 1 && i < 2 * n;
    if (g.instance.prob(i) != (s_point ? g.rho : kOne)) {
      violation("probabilities", "point " + std::to_string(i));
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const Point& p = pts[perimeter_p_index(i)];
    const Point& s = pts[perimeter_s_index(i)];
    const Point& p2 = pts[perimeter_p_index(i + 1)];
    const std::size_t qi = perimeter_q_index(n, i);
    const Point& q = pts[qi];
    if (g.instance.prob(qi) != kOne) violation("probabilities", "q_" + std::to_string(i));
    // Strictly inside the clockwise triangle (p, s, p').
    if (orient(p, s, q) != -1 || orient(s, p2, q) != -1 || orient(p2, p, q) != -1) {
      violation("q", "q_" + std::to_string(i) + " is not inside its triangle");
    }
    const Rational pq = squared_distance(p, q);
    if (pq != squared_distance(q, p2)) violation("q", "|p q| != |q p'| for " + std::to_string(i));
    const Rational low = c - Rational(g.ssi.a[i - 1]);
    const Rational high = low + g.slack;
    if (pq < low * low || !(pq < high * high)) {
      violation("q", "|p_" + std::to_string(i) + " q| outside [c - a, c - a + 1/(2n))");
    }
  }
}

BigInt recover_area_count(const AreaGadget& g, const TailEngine& pr_ge) {
  require_count_params(g.ssi, g.rho);
  const std::size_t n = g.ssi.a.size();
  const std::size_t k = g.ssi.k;
  const Rational full = tail(pr_ge, g.instance, g.G + g.b * sum_of(g.ssi.a));
  if (full != pow(g.rho, static_cast<unsigned>(2 * n + 1))) {
    throw Error(ErrorKind::NonIntegralCount,
                "engine calibration failed: Pr[A >= G + b sum a] = " + full.str());
  }
  const BigInt w = g.G + g.b * g.ssi.t;
  const Rational diff = tail(pr_ge, g.instance, w) - tail(pr_ge, g.instance, w + 1);
  const Rational den = pow(g.rho, static_cast<unsigned>(n + k + 1)) *
                       pow(kOne - g.rho, static_cast<unsigned>(n - k));
  return checked_quotient(diff, den);
}

BigInt recover_perimeter_count(const PerimeterGadget& g, const TailEngine& pr_ge) {
  require_count_params(g.ssi, g.rho);
  const std::size_t n = g.ssi.a.size();
  const std::size_t k = g.ssi.k;
  const Rational full = tail(pr_ge, g.instance, g.L);
  if (full != pow(g.rho, static_cast<unsigned>(n))) {
    throw Error(ErrorKind::NonIntegralCount,
                "engine calibration failed: Pr[P >= L] = " + full.str());
  }
  const BigInt w = g.L - 2 * g.ssi.t;
  const Rational diff = tail(pr_ge, g.instance, w) - tail(pr_ge, g.instance, w + 1);
  const Rational den = pow(kOne - g.rho, static_cast<unsigned>(k)) *
                       pow(g.rho, static_cast<unsigned>(n - k));
  return checked_quotient(diff, den);
}

}  // namespace hullprob
