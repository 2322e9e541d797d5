#include "hullprob/montecarlo.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>

#include "hullprob/error.hpp"
#include "hullprob/parallel.hpp"

namespace hullprob {

namespace {

// ceil of ln(x) / d bracketed at the given precision; the two values agree
// once the bracket is tight enough.
std::pair<BigInt, BigInt> count_bracket(const Rational& x, const Rational& d, mpfr_prec_t bits) {
  mpfr_t lo, hi;
  mpfr_init2(lo, bits);
  mpfr_init2(hi, bits);
  mpfr_set_q(lo, x.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi, x.raw().get_mpq_t(), MPFR_RNDU);
  mpfr_log(lo, lo, MPFR_RNDD);
  mpfr_log(hi, hi, MPFR_RNDU);
  mpfr_div_q(lo, lo, d.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_div_q(hi, hi, d.raw().get_mpq_t(), MPFR_RNDU);
  mpfr_ceil(lo, lo);
  mpfr_ceil(hi, hi);
  BigInt a, b;
  mpfr_get_z(a.get_mpz_t(), lo, MPFR_RNDN);
  mpfr_get_z(b.get_mpz_t(), hi, MPFR_RNDN);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return {a, b};
}

bool measure_at_least(const Hull& hull, Measure measure, const Rational& w) {
  if (measure == Measure::Area) return hull_area(hull) >= w;
  return (hull_perimeter(hull) - SqrtSum(w)).sign() >= 0;
}

}  // namespace

std::uint64_t sample_count(const Rational& eps, const Rational& delta) {
  const Rational one(1);
  if (eps.sign() <= 0 || eps >= one || delta.sign() <= 0 || delta >= one) {
    throw Error(ErrorKind::InvalidParams, "eps and delta must lie strictly between 0 and 1");
  }
  const Rational x = Rational(2) / delta;
  const Rational d = Rational(2) * eps * eps;
  for (mpfr_prec_t bits = 64; bits <= (mpfr_prec_t{1} << 20); bits *= 2) {
    const auto [a, b] = count_bracket(x, d, bits);
    if (a == b) {
      const BigInt n = std::max(a, BigInt(1));
      if (!n.fits_ulong_p()) throw Error(ErrorKind::InvalidParams, "sample count too large");
      return n.get_ui();
    }
  }
  throw Error(ErrorKind::InvalidParams, "sample count could not be certified");
}

McPlan McPlan::make(const Rational& eps, const Rational& delta, std::uint64_t master_seed) {
  McPlan plan;
  plan.eps = eps;
  plan.delta = delta;
  plan.samples = sample_count(eps, delta);
  plan.master_seed = master_seed;
  return plan;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
  SplitMix64 g(master_seed + trial * 0x9e3779b97f4a7c15ULL);
  return g.next();
}

McResult mc_pr_event(const StochasticInstance& inst, const std::function<bool(const Hull&)>& event,
                     const McPlan& plan) {
  const std::size_t n = inst.size();
  const auto points = inst.points();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(points[a], points[b]); });
  std::vector<InclusionThreshold> thresholds;
  thresholds.reserve(n);
  for (std::size_t i = 0; i < n; ++i) thresholds.push_back(inclusion_threshold(inst.prob(i)));

  const std::uint64_t total = plan.samples;
  const std::size_t chunks = std::min<std::uint64_t>(total, 64 * worker_count());
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    std::vector<char> in(n);
    std::vector<std::size_t> sampled;
    sampled.reserve(n);
    for (std::uint64_t t = begin; t < end; ++t) {
      SplitMix64 g(trial_seed(plan.master_seed, t));
      for (std::size_t i = 0; i < n; ++i) in[i] = thresholds[i].accepts(g.next());
      sampled.clear();
      for (std::size_t i : order) {
        if (in[i]) sampled.push_back(i);
      }
      Hull hull;
      for (std::size_t i : convex_hull_indices(points, sampled)) hull.vertices.push_back(points[i]);
      if (event(hull)) ++hits[c];
    }
  });
  McResult out;
  out.samples = total;
  for (std::uint64_t h : hits) out.hits += h;
  out.pr = Rational(BigInt(static_cast<unsigned long>(out.hits)),
                    BigInt(static_cast<unsigned long>(std::max<std::uint64_t>(total, 1))));
  return out;
}

McResult mc_pr_measure_ge(const StochasticInstance& inst, Measure measure, const Rational& w,
                          const McPlan& plan) {
  return mc_pr_event(
      inst, [&](const Hull& hull) { return measure_at_least(hull, measure, w); }, plan);
}

}  // namespace hullprob
