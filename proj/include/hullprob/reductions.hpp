#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hullprob/instance.hpp"

namespace hullprob {

struct SubsetSumInstance {
  std::vector<BigInt> a;
  BigInt t;
  std::size_t k = 0;  // 0: no cardinality constraint
};

/// Number of index sets J (with |J| = k when k > 0) whose a-values sum to t.
BigInt count_subsets(const SubsetSumInstance& ssi);

/// M = 1 + sum a; a'_i = a_i + M; t' = t + k M. Only k-element sets can reach t'.
SubsetSumInstance pad_to_fixed_cardinality(const SubsetSumInstance& ssi, std::size_t k);

/// 2n+1 points p_1, q_1, ..., p_n, q_n, p_{n+1} (in that index order), all
/// present with probability rho. A(p_j, q_j, p_{j+1}) = b a_j and every
/// sample containing all p's has area G + b * (sum of a_j over present q_j).
struct AreaGadget {
  SubsetSumInstance ssi;
  Rational rho;
  StochasticInstance instance;
  BigInt G;
  BigInt b;
  BigInt scale;
};

/// Throws PropertyViolation naming the failed property if any construction
/// check fails, InvalidParams on bad input.
AreaGadget build_area_gadget(const SubsetSumInstance& ssi, const Rational& rho);
/// Re-runs the construction checks on a (possibly deserialized) gadget.
void verify_area_gadget(const AreaGadget& g);

/// 4n points p_1, s_1, ..., p_n, s_n, p_{n+1}, z_1, ..., z_{2n-1}, q_1, ..., q_n
/// (in that index order). s-points have probability rho, the rest 1. Every
/// hull edge of the p/s/z chain has length c and the chain's perimeter is
/// L = 4nc. Each q_i satisfies c - a_i <= |p_i q_i| = |q_i p_{i+1}| < c - a_i + 1/(2n).
struct PerimeterGadget {
  SubsetSumInstance ssi;
  Rational rho;
  StochasticInstance instance;
  BigInt L;
  BigInt c;
  Rational slack;  // 1/(2n)
};

PerimeterGadget build_perimeter_gadget(const SubsetSumInstance& ssi, const Rational& rho);
void verify_perimeter_gadget(const PerimeterGadget& g);

/// Indices into the gadget instances.
std::size_t area_p_index(std::size_t i);  // i in [1..n+1]
std::size_t area_q_index(std::size_t i);  // i in [1..n]
std::size_t perimeter_p_index(std::size_t i);
std::size_t perimeter_s_index(std::size_t i);
std::size_t perimeter_z_index(std::size_t n, std::size_t j);
std::size_t perimeter_q_index(std::size_t n, std::size_t i);

/// Pr[m(S) >= w] from some exact engine.
using TailEngine = std::function<Rational(const StochasticInstance&, const Rational&)>;

/// f(t) from the two-threshold identity. Before dividing, the engine is
/// calibrated on the all-present threshold (G + b sum a for area, L for
/// perimeter), whose mass is known in closed form; a mismatch or a
/// non-natural quotient raises NonIntegralCount.
BigInt recover_area_count(const AreaGadget& g, const TailEngine& pr_ge);
BigInt recover_perimeter_count(const PerimeterGadget& g, const TailEngine& pr_ge);

}  // namespace hullprob
