#include "hullprob/instance.hpp"

#include <algorithm>
#include <string>

#include "hullprob/error.hpp"

namespace hullprob {

StochasticInstance::StochasticInstance(std::vector<Point> points, std::vector<Rational> probs)
    : points_(std::move(points)), probs_(std::move(probs)) {
  if (points_.size() != probs_.size()) {
    throw Error(ErrorKind::InvalidInstance, "point and probability counts differ");
  }
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i].sign() < 0 || probs_[i] > Rational(1)) {
      throw Error(ErrorKind::InvalidInstance,
                  "probability " + probs_[i].str() + " outside [0, 1]", {i});
    }
  }
}

std::vector<std::size_t> StochasticInstance::live_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (probs_[i].sign() > 0) out.push_back(i);
  }
  return out;
}

StochasticInstance StochasticInstance::subset(std::span<const std::size_t> indices) const {
  std::vector<Point> pts;
  std::vector<Rational> prs;
  pts.reserve(indices.size());
  prs.reserve(indices.size());
  for (std::size_t i : indices) {
    pts.push_back(points_.at(i));
    prs.push_back(probs_.at(i));
  }
  return StochasticInstance(std::move(pts), std::move(prs));
}

StochasticInstance StochasticInstance::without_zero_probability() const {
  const auto live = live_indices();
  return subset(live);
}

ValidationReport validate(const StochasticInstance& inst) {
  ValidationReport report;
  const std::size_t n = inst.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (inst.point(i).x == inst.point(j).x) report.shared_vertical.emplace_back(i, j);
      if (inst.point(i).y == inst.point(j).y) report.shared_horizontal.emplace_back(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(inst.point(i), inst.point(j), inst.point(k)) == 0) {
          report.collinear_triples.push_back({i, j, k});
        }
      }
    }
  }
  return report;
}

void require_exact_ready(const StochasticInstance& inst) {
  const auto live = inst.live_indices();
  std::vector<std::size_t> by_y = live;
  std::sort(by_y.begin(), by_y.end(),
            [&](std::size_t i, std::size_t j) { return inst.point(i).y < inst.point(j).y; });
  for (std::size_t k = 1; k < by_y.size(); ++k) {
    if (inst.point(by_y[k]).y == inst.point(by_y[k - 1]).y) {
      throw Error(ErrorKind::DegenerateInstance, "two points share a horizontal line",
                  {std::min(by_y[k - 1], by_y[k]), std::max(by_y[k - 1], by_y[k])});
    }
  }
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

InclusionThreshold inclusion_threshold(const Rational& prob) {
  InclusionThreshold t;
  if (prob >= Rational(1)) {
    t.always = true;
    return t;
  }
  if (prob.sign() <= 0) return t;
  BigInt scaled = prob.num();
  scaled <<= 64;
  scaled /= prob.den();  // floor(pi * 2^64) < 2^64
  t.below = static_cast<std::uint64_t>(mpz_get_ui(scaled.get_mpz_t()));
  return t;
}

Sample draw_sample(const StochasticInstance& inst, std::uint64_t seed) {
  Sample s;
  s.seed = seed;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const std::uint64_t draw = rng.next();
    if (inclusion_threshold(inst.prob(i)).accepts(draw)) s.members.push_back(i);
  }
  return s;
}

}  // namespace hullprob
