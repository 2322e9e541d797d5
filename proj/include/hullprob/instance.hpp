#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hullprob/geometry.hpp"
#include "hullprob/rational.hpp"

namespace hullprob {

/// Points with independent presence probabilities. Immutable once built.
class StochasticInstance {
 public:
  StochasticInstance() = default;
  /// Throws InvalidInstance on size mismatch or a probability outside [0, 1].
  StochasticInstance(std::vector<Point> points, std::vector<Rational> probs);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& point(std::size_t i) const { return points_[i]; }
  const Rational& prob(std::size_t i) const { return probs_[i]; }
  std::span<const Point> points() const noexcept { return points_; }
  std::span<const Rational> probs() const noexcept { return probs_; }

  /// Indices of points with positive probability, in index order.
  std::vector<std::size_t> live_indices() const;
  /// The sub-instance of the given indices, in the given order.
  StochasticInstance subset(std::span<const std::size_t> indices) const;
  /// Drops zero-probability points; they cannot affect any event.
  StochasticInstance without_zero_probability() const;

  friend bool operator==(const StochasticInstance&, const StochasticInstance&) = default;

 private:
  std::vector<Point> points_;
  std::vector<Rational> probs_;
};

struct ValidationReport {
  std::vector<std::array<std::size_t, 3>> collinear_triples;
  std::vector<std::pair<std::size_t, std::size_t>> shared_vertical;
  std::vector<std::pair<std::size_t, std::size_t>> shared_horizontal;

  bool ok() const {
    return collinear_triples.empty() && shared_vertical.empty() && shared_horizontal.empty();
  }
  /// What the exact dynamic programs rely on: strict y order and no three
  /// collinear points. Shared vertical lines are harmless to them.
  bool exact_ready() const { return collinear_triples.empty() && shared_horizontal.empty(); }
};

ValidationReport validate(const StochasticInstance& inst);

/// Throws DegenerateInstance (with witnesses) unless the positive-probability
/// points have distinct y coordinates and no three of them are collinear.
void require_exact_ready(const StochasticInstance& inst);

/// SplitMix64. Small, splittable through seed derivation, identical output on
/// every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// A point is included when a uniform 64-bit draw is below floor(pi * 2^64).
/// Probability 1 is represented separately because 2^64 does not fit.
struct InclusionThreshold {
  bool always = false;
  std::uint64_t below = 0;
  bool accepts(std::uint64_t draw) const noexcept { return always || draw < below; }
};
InclusionThreshold inclusion_threshold(const Rational& prob);

struct Sample {
  std::vector<std::size_t> members;  // increasing point indices
  std::uint64_t seed = 0;
};

/// One draw per point in index order from SplitMix64(seed).
Sample draw_sample(const StochasticInstance& inst, std::uint64_t seed);

}  // namespace hullprob
