#include "hullprob/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "hullprob/approx.hpp"
#include "hullprob/error.hpp"
#include "hullprob/parallel.hpp"

namespace hullprob {

namespace {

const Rational kOne(1);

// The sample space: certain points always present, uncertain ones
// enumerated by bit mask. Points are kept in lex order so each sample's hull
// is one monotone-chain pass.
struct SampleSpace {
  std::vector<std::size_t> lex;       // live indices in lex order
  std::vector<int> bit;               // per lex slot: -1 certain, else bit index
  std::vector<std::size_t> uncertain; // bit -> point index
};

SampleSpace sample_space(const StochasticInstance& inst, const OracleOptions& options) {
  SampleSpace s;
  s.lex = inst.live_indices();
  std::sort(s.lex.begin(), s.lex.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(inst.point(a), inst.point(b)); });
  for (std::size_t i : s.lex) {
    if (inst.prob(i) < kOne) {
      s.bit.push_back(static_cast<int>(s.uncertain.size()));
      s.uncertain.push_back(i);
    } else {
      s.bit.push_back(-1);
    }
  }
  if (s.uncertain.size() > options.cap || s.uncertain.size() >= 63) {
    throw Error(ErrorKind::TooLarge, "too many uncertain points for enumeration (" +
                                         std::to_string(s.uncertain.size()) + " > " +
                                         std::to_string(options.cap) + ")");
  }
  return s;
}

// Calls visit(acc, members, hull vertex indices, probability) for every
// sample, with mask ranges split across workers; one accumulator per chunk.
template <class Acc, class Visit>
std::vector<Acc> enumerate(const StochasticInstance& inst, const SampleSpace& s, Visit visit) {
  const std::uint64_t total = std::uint64_t{1} << s.uncertain.size();
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, 256));
  std::vector<Acc> acc(chunks);
  const auto points = inst.points();
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    std::vector<std::size_t> members;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      Rational pr = kOne;
      for (std::size_t b = 0; b < s.uncertain.size(); ++b) {
        const Rational& pi = inst.prob(s.uncertain[b]);
        pr *= (mask >> b) & 1 ? pi : kOne - pi;
      }
      members.clear();
      for (std::size_t k = 0; k < s.lex.size(); ++k) {
        if (s.bit[k] < 0 || ((mask >> s.bit[k]) & 1)) members.push_back(s.lex[k]);
      }
      visit(acc[c], members, convex_hull_indices(points, members), std::move(pr));
    }
  });
  return acc;
}

using HullMass = std::map<std::vector<std::size_t>, Rational>;

Budget add_saturating(Budget a, Budget b) {
  return a > std::numeric_limits<Budget>::max() - b ? std::numeric_limits<Budget>::max() : a + b;
}

Budget weighted_measure(const StochasticInstance& inst, const WeightAssignment& weights,
                        const std::vector<std::size_t>& hull) {
  if (hull.size() < 3) return 0;
  std::size_t start = 0;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if (inst.point(hull[i]).y > inst.point(hull[start]).y) start = i;
  }
  const std::size_t k = hull.size();
  const std::size_t a = hull[start];
  Budget total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t u = hull[(start + i) % k];
    const std::size_t v = hull[(start + i + 1) % k];
    if (weights.mode() == Measure::Perimeter) {
      total = add_saturating(total, weights.edge(u, v));
    } else if (i >= 1 && i + 1 < k) {
      total = add_saturating(total, weights.triangle(a, u, v));
    }
  }
  return total;
}

void require_distinct_y(const StochasticInstance& inst) {
  auto live = inst.live_indices();
  std::sort(live.begin(), live.end(),
            [&](std::size_t i, std::size_t j) { return inst.point(i).y < inst.point(j).y; });
  for (std::size_t k = 1; k < live.size(); ++k) {
    if (inst.point(live[k]).y == inst.point(live[k - 1]).y) {
      throw Error(ErrorKind::DegenerateInstance, "two points share a horizontal line",
                  {live[k - 1], live[k]});
    }
  }
}

Rational weighted_mass(const StochasticInstance& inst, const WeightAssignment& weights, Budget w,
                       std::optional<std::size_t> apex, const OracleOptions& options) {
  if (weights.size() != inst.size()) {
    throw Error(ErrorKind::PreconditionViolated, "weight table does not match the instance size");
  }
  require_distinct_y(inst);
  const SampleSpace s = sample_space(inst, options);
  auto parts = enumerate<Rational>(
      inst, s,
      [&](Rational& acc, const std::vector<std::size_t>& members,
          const std::vector<std::size_t>& hull, Rational pr) {
        if (apex) {
          if (members.empty()) return;
          std::size_t top = members.front();
          for (std::size_t m : members) {
            if (inst.point(m).y > inst.point(top).y) top = m;
          }
          if (top != *apex) return;
        }
        if (w == 0 || weighted_measure(inst, weights, hull) >= w) acc += pr;
      });
  Rational total;
  for (const Rational& p : parts) total += p;
  return total;
}

}  // namespace

Rational DistributionTable::pr_ge(const SqrtSum& w) const {
  Rational total;
  for (const auto& e : entries) {
    if (e.value >= w) total += e.pr;
  }
  return total;
}

SqrtSum DistributionTable::expectation() const {
  SqrtSum total;
  for (const auto& e : entries) total += e.value * e.pr;
  return total;
}

std::uint64_t instance_digest(const StochasticInstance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  for (std::size_t i = 0; i < inst.size(); ++i) {
    feed(inst.point(i).x.str());
    feed(inst.point(i).y.str());
    feed(inst.prob(i).str());
  }
  return h;
}

DistributionTable exact_distribution(const StochasticInstance& inst, Measure measure,
                                     OracleOptions options) {
  const SampleSpace s = sample_space(inst, options);
  auto parts = enumerate<HullMass>(
      inst, s,
      [](HullMass& acc, const std::vector<std::size_t>&, const std::vector<std::size_t>& hull,
         Rational pr) {
        // Only the vertex set matters; degenerate hulls share one key.
        auto key = hull.size() < 3 ? std::vector<std::size_t>{} : hull;
        acc[std::move(key)] += pr;
      });
  HullMass mass;
  for (auto& part : parts) {
    for (auto& [key, pr] : part) mass[key] += pr;
  }

  std::vector<DistributionEntry> raw;
  raw.reserve(mass.size());
  for (const auto& [key, pr] : mass) {
    Hull hull;
    for (std::size_t i : key) hull.vertices.push_back(inst.point(i));
    raw.push_back({hull_measure(hull, measure), pr});
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const DistributionEntry& a, const DistributionEntry& b) {
                     return a.value < b.value;
                   });
  DistributionTable table;
  table.measure = measure;
  table.digest = instance_digest(inst);
  for (auto& e : raw) {
    if (!table.entries.empty() && table.entries.back().value == e.value) {
      table.entries.back().pr += e.pr;
    } else {
      table.entries.push_back(std::move(e));
    }
  }
  return table;
}

Rational oracle_pr_ge(const StochasticInstance& inst, Measure measure, const SqrtSum& w,
                      OracleOptions options) {
  if (w.sign() <= 0) return kOne;
  return exact_distribution(inst, measure, options).pr_ge(w);
}

SqrtSum oracle_expected(const StochasticInstance& inst, Measure measure, OracleOptions options) {
  return exact_distribution(inst, measure, options).expectation();
}

Rational weighted_oracle_pr_ge(const StochasticInstance& inst, const WeightAssignment& weights,
                               Budget w, OracleOptions options) {
  if (w == 0) return kOne;
  return weighted_mass(inst, weights, w, std::nullopt, options);
}

Rational weighted_oracle_pr_ge_given_top(const StochasticInstance& inst,
                                         const WeightAssignment& weights, Budget w,
                                         std::size_t apex, OracleOptions options) {
  const Rational top = pr_topmost(inst, apex);
  if (top.sign() == 0) {
    throw Error(ErrorKind::PreconditionViolated, "the apex is never the topmost point", {apex});
  }
  if (w == 0) return kOne;
  return weighted_mass(inst, weights, w, apex, options) / top;
}

LambdaReport check_lambda_bounds(std::span<const Point> points, Measure measure) {
  const std::size_t n = points.size();
  if (n < 3) throw Error(ErrorKind::DegenerateInput, "need at least three points");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].y == points[j].y) {
        throw Error(ErrorKind::DegenerateInput, "two points share a horizontal line", {i, j});
      }
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(points[i], points[j], points[k]) == 0) {
          throw Error(ErrorKind::DegenerateInput, "three collinear points", {i, j, k});
        }
      }
    }
  }
  LambdaReport r;
  for (std::size_t i = 1; i < n; ++i) {
    if (points[i].y > points[r.top].y) r.top = i;
    if (points[i].y < points[r.bottom].y) r.bottom = i;
  }
  std::vector<Point> others;
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == r.top || i == r.bottom) continue;
    others.push_back(points[i]);
    index.push_back(i);
  }
  const ExtremalTriangle ext = max_extremal_triangle(points[r.top], points[r.bottom], others, measure);
  r.lambda = ext.value;
  r.witness = index[ext.witness];
  r.measure = hull_measure(convex_hull(points), measure);
  r.ratio = r.measure.to_double() / r.lambda.to_double();
  r.within = r.lambda <= r.measure && r.measure <= r.lambda * lambda_factor(measure);
  return r;
}

}  // namespace hullprob
