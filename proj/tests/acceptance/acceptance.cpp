// Acceptance harness: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hullprob/approx.hpp"
#include "hullprob/error.hpp"
#include "hullprob/hull_dp.hpp"
#include "hullprob/io.hpp"
#include "hullprob/montecarlo.hpp"
#include "hullprob/oracle.hpp"
#include "hullprob/reductions.hpp"
#include "support/generators.hpp"

using namespace hullprob;
namespace fs = std::filesystem;
namespace gen = hullprob::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

std::vector<Rational> distinct_values(const DistributionTable& t) {
  std::vector<Rational> out;
  for (const auto& e : t.entries) out.push_back(e.value.rational_part());
  return out;
}

// 1
void exact_equivalence(Outcome& o) {
  std::mt19937_64 rng(1);
  std::size_t checks = 0;
  for (int rep = 0; rep < 100; ++rep) {
    gen::InstanceSpec spec;
    spec.n = 4 + rep % 6;
    spec.coord_max = 40;
    spec.step = 2;
    spec.denom_max = 8;
    const auto inst = gen::random_instance(rng, spec);
    const auto table = exact_distribution(inst, Measure::Area);
    std::set<Rational> ws{Rational(1)};
    for (const Rational& v : distinct_values(table)) {
      ws.insert(v);
      ws.insert(v + Rational(1));
    }
    ExactAreaTail tail(inst);
    for (const Rational& w : ws) {
      ++checks;
      o.expect(tail.pr_ge(w) == table.pr_ge(w), "instance " + std::to_string(rep) + " w=" + w.str());
      o.expect(pr_area_ge_exact(inst, w) == table.pr_ge(w), "one-shot path, w=" + w.str());
    }
  }
  o.note << checks << " thresholds on 100 instances";
}

// 2
void weighted_equivalence(Outcome& o) {
  std::mt19937_64 rng(2);
  std::size_t checks = 0;
  for (int rep = 0; rep < 50; ++rep) {
    gen::InstanceSpec spec;
    spec.n = 3 + rep % 6;
    const auto inst = gen::random_instance(rng, spec);
    for (Measure m : {Measure::Area, Measure::Perimeter}) {
      const auto weights = gen::random_weights(rng, m, inst.size(), 20);
      // largest possible boundary/fan weight bounds the interesting range
      const Budget total = m == Measure::Area ? 20 * (inst.size() - 2) : 20 * inst.size();
      WeightedTail tail(inst, weights);
      for (Budget w = 0; w <= total + 1; ++w) {
        ++checks;
        o.expect(tail.pr_ge(w) == weighted_oracle_pr_ge(inst, weights, w),
                 "instance " + std::to_string(rep) + " w=" + std::to_string(w));
      }
    }
  }
  o.note << checks << " thresholds, both modes";
}

std::vector<Rational> thresholds(std::mt19937_64& rng, const DistributionTable& table) {
  std::vector<Rational> out;
  BigInt top = table.entries.back().value.floor() + 1;
  for (const auto& e : table.entries) {
    if (e.value.sign() > 0 && out.size() < 3) out.push_back(Rational(e.value.floor() + 1));
  }
  std::uniform_int_distribution<long> d(1, top.get_si() * 4);
  while (out.size() < 5) out.push_back(Rational(d(rng), 4));
  return out;
}

void sandwich(Outcome& o, Measure m, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::size_t checks = 0;
  for (int rep = 0; rep < 20; ++rep) {
    gen::InstanceSpec spec;
    spec.n = 3 + rep % 5;
    const auto inst = gen::random_instance(rng, spec);
    const auto table = exact_distribution(inst, m);
    for (const Rational& eps : {Rational(1, 10), Rational(3, 10)}) {
      for (const Rational& w : thresholds(rng, table)) {
        const Rational s = approx_pr_ge(inst, m, w, eps);
        const Rational lo = table.pr_ge(SqrtSum(w));
        const Rational hi = table.pr_ge(SqrtSum((Rational(1) - eps) * w));
        ++checks;
        o.expect(lo <= s && s <= hi, "instance " + std::to_string(rep) + " w=" + w.str() +
                                         " eps=" + eps.str() + " got " + s.str());
      }
    }
  }
  o.note << checks << " sandwich checks";
}

// 3
void area_sandwich(Outcome& o) {
  sandwich(o, Measure::Area, 3);
  const Rational forced = approx_pr_area_ge(gen::q4(), Rational(116), Rational(1, 10));
  o.expect(forced == Rational(1, 16), "Q4 w=116 eps=1/10 gave " + forced.str());
  o.note << ", Q4 forced value " << forced.str();
}

// 4
void perimeter_sandwich(Outcome& o) { sandwich(o, Measure::Perimeter, 4); }

// 5
void lambda_bounds(Outcome& o) {
  std::mt19937_64 rng(5);
  double worst_area = 0;
  double worst_perimeter = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    gen::InstanceSpec spec;
    spec.n = 3 + rep % 10;
    spec.coord_max = 60;
    spec.step = 1;
    spec.rational_denom = 1 + rep % 5;
    const auto pts = gen::random_points(rng, spec);
    const LambdaReport a = check_lambda_bounds(pts, Measure::Area);
    const LambdaReport p = check_lambda_bounds(pts, Measure::Perimeter);
    o.expect(a.within, "area set " + std::to_string(rep));
    o.expect(p.within, "perimeter set " + std::to_string(rep));
    worst_area = std::max(worst_area, a.ratio);
    worst_perimeter = std::max(worst_perimeter, p.ratio);
  }
  o.note << "1000 sets, max ratio area " << worst_area << ", perimeter " << worst_perimeter;
}

// 6
void monte_carlo(Outcome& o) {
  const auto inst = gen::q4();
  const Rational truth(5, 16);
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const McPlan plan = McPlan::make(Rational(1, 10), Rational(1, 100), seed);
    o.expect(plan.samples == 265, "N = " + std::to_string(plan.samples));
    const McResult r = mc_pr_measure_ge(inst, Measure::Area, Rational(58), plan);
    if ((r.pr - truth).abs() < Rational(1, 10)) ++good;
  }
  o.expect(good >= 97, std::to_string(good) + " of 100 within 0.1");
  const McPlan plan = McPlan::make(Rational(1, 10), Rational(1, 100), 7);
  const std::string first = mc_pr_measure_ge(inst, Measure::Area, Rational(58), plan).pr.str();
  setenv("HULLPROB_THREADS", "1", 1);
  const std::string serial = mc_pr_measure_ge(inst, Measure::Area, Rational(58), plan).pr.str();
  unsetenv("HULLPROB_THREADS");
  const std::string again = mc_pr_measure_ge(inst, Measure::Area, Rational(58), plan).pr.str();
  o.expect(first == serial && first == again, "seed 7 not reproducible");
  o.note << "N=265, " << good << "/100 seeds within 0.1, seed 7 -> " << first;
}

// 7
void grid_sandwich(Outcome& o) {
  const auto inst = gen::q4();
  const Rational U(14);
  const Rational eps(1);
  for (long w : {58L, 116L}) {
    const Rational s = pr_area_ge_bounded(inst, Rational(w), eps, U);
    const Rational lo = oracle_pr_ge(inst, Measure::Area, Rational(w + 1));
    const Rational hi = oracle_pr_ge(inst, Measure::Area, Rational(w - 1));
    o.expect(lo <= s && s <= hi, "w=" + std::to_string(w) + " got " + s.str());
    o.note << "w=" << w << ": " << s.str() << "; ";
  }
  std::mt19937_64 rng(7);
  const Rational delta = eps / (Rational(4) * U);
  const Rational bound = Rational(4) * delta * U;
  std::uniform_int_distribution<long> coord(0, 14 * 97);
  std::uniform_int_distribution<int> size(3, 10);
  for (int rep = 0; rep < 1000; ++rep) {
    std::vector<Point> pts;
    std::vector<Point> rounded;
    const int k = size(rng);
    for (int i = 0; i < k; ++i) {
      pts.push_back({Rational(coord(rng), 97), Rational(coord(rng), 97)});
      rounded.push_back(grid_point(pts.back(), delta));
    }
    const Rational a = hull_area(convex_hull(pts));
    const Rational b = delta * delta / Rational(4) * hull_area(convex_hull(rounded));
    o.expect((a - b).abs() < bound, "rounding sample " + std::to_string(rep));
  }
  o.note << "1000 rounding samples within 4 delta U";
}

BigInt direct_count(const SubsetSumInstance& s) {
  BigInt count = 0;
  const std::size_t n = s.a.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    BigInt sum = 0;
    std::size_t size = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        sum += s.a[i];
        ++size;
      }
    }
    if (sum == s.t && size == s.k) ++count;
  }
  return count;
}

// 8
void gadget_round_trip(Outcome& o) {
  std::mt19937_64 rng(8);
  std::size_t positive = 0;
  for (int rep = 0; rep < 25; ++rep) {
    SubsetSumInstance s;
    const std::size_t n = 1 + rep % 4;
    std::uniform_int_distribution<long> val(1, 6);
    long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      s.a.push_back(BigInt(val(rng)));
      total += s.a.back().get_si();
    }
    s.t = std::uniform_int_distribution<long>(0, total)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    s.k = k;
    const BigInt expected = direct_count(s);
    if (expected > 0) ++positive;
    const SubsetSumInstance padded = pad_to_fixed_cardinality(SubsetSumInstance{s.a, s.t, 0}, k);
    const std::string tag = "case " + std::to_string(rep);
    try {
      const Rational rho(1, 2 + rep % 2);
      const AreaGadget ag = build_area_gadget(padded, rho);
      verify_area_gadget(ag);
      for (std::size_t j = 1; j <= n; ++j) {
        const Rational area = triangle_area(ag.instance.point(area_p_index(j)),
                                            ag.instance.point(area_q_index(j)),
                                            ag.instance.point(area_p_index(j + 1)));
        o.expect(area == Rational(ag.b * padded.a[j - 1]), tag + " triangle area b a_j");
      }
      const BigInt via_oracle = recover_area_count(ag, [](const StochasticInstance& inst, const Rational& w) {
        return oracle_pr_ge(inst, Measure::Area, SqrtSum(w));
      });
      const BigInt via_exact = recover_area_count(ag, [](const StochasticInstance& inst, const Rational& w) {
        return pr_area_ge_exact(inst, w);
      });
      o.expect(via_oracle == expected, tag + " area oracle count");
      o.expect(via_exact == expected, tag + " area exact count");

      const PerimeterGadget pg = build_perimeter_gadget(padded, rho);
      verify_perimeter_gadget(pg);
      const BigInt via_perimeter =
          recover_perimeter_count(pg, [](const StochasticInstance& inst, const Rational& w) {
            return oracle_pr_ge(inst, Measure::Perimeter, SqrtSum(w));
          });
      o.expect(via_perimeter == expected, tag + " perimeter oracle count");
    } catch (const Error& e) {
      o.expect(false, tag + ": " + e.what());
    }
  }
  o.note << "25 instances (" << positive << " with solutions), both gadgets verified";
}

// 9
void expectations(Outcome& o) {
  std::mt19937_64 rng(9);
  double worst = 0;
  for (int rep = 0; rep < 50; ++rep) {
    gen::InstanceSpec spec;
    spec.n = 1 + rep % 8;
    const auto inst = gen::random_instance(rng, spec);
    o.expect(SqrtSum(expected_area(inst)) == oracle_expected(inst, Measure::Area),
             "area instance " + std::to_string(rep));
    const SqrtSum p = expected_perimeter(inst);
    const SqrtSum q = oracle_expected(inst, Measure::Perimeter);
    worst = std::max(worst, std::abs(p.to_double() - q.to_double()));
    o.expect(p == q, "perimeter instance " + std::to_string(rep));
  }
  o.note << "50 instances, area identical, perimeter exactly equal (max float gap " << worst
         << ")";
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(HULLPROB_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 10
void cli_contract(Outcome& o) {
  const fs::path dir = fs::temp_directory_path() / ("hullprob_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);
  std::mt19937_64 rng(10);

  for (int rep = 0; rep < 10; ++rep) {
    gen::InstanceSpec spec;
    spec.n = 6;
    spec.rational_denom = 3 + rep;
    const auto inst = gen::random_instance(rng, spec);
    const std::string text = instance_json(inst);
    const auto back = parse_instance(text);
    o.expect(back == inst && instance_json(back) == text, "round trip " + std::to_string(rep));
  }

  for (int rep = 0; rep < 5; ++rep) {
    gen::InstanceSpec spec;
    spec.n = 6;
    const auto inst = gen::random_instance(rng, spec);
    const fs::path file = dir / ("sweep" + std::to_string(rep) + ".json");
    write_file(file, instance_json(inst));
    for (const char* engine : {"exact", "oracle"}) {
      const Run r = run_cli("sweep " + file.string() + " --engine " + engine + " --grid 0:800:41");
      o.expect(r.code == 0, std::string("sweep ") + engine);
      std::istringstream lines(r.out);
      std::string line;
      std::getline(lines, line);
      o.expect(line == "w,pr", "csv header");
      Rational prev(1);
      std::size_t rows = 0;
      while (std::getline(lines, line)) {
        const Rational pr = Rational::parse(line.substr(line.find(',') + 1));
        o.expect(pr <= prev, std::string("monotone ") + engine);
        prev = pr;
        ++rows;
      }
      o.expect(rows == 41, "row count");
    }
  }

  const fs::path half = dir / "half.json";
  write_file(half, R"({"points":[{"x":0,"y":0,"p":"1/2"},{"x":3,"y":1,"p":"1/2"},{"x":1,"y":2,"p":"1/2"}]})");
  const Run nonint = run_cli("exact " + half.string() + " --measure area --w 1");
  o.expect(nonint.code == 2 && nonint.out.find("NonIntegerAreas") != std::string::npos,
           "non-integer areas exit code");

  const fs::path gdir = dir / "gadget";
  const Run built = run_cli("gadget area --a 1,2,3 --t 3 --k 2 --rho 1/2 --out " + gdir.string());
  o.expect(built.code == 0, "gadget build");
  auto side = nlohmann::json::parse(read_file(gdir / "sidecar.json"));
  side["b"] = BigInt(BigInt(side["b"].get<std::string>()) + 1).get_str();
  write_file(gdir / "sidecar.json", side.dump());
  const Run tampered = run_cli("recover " + gdir.string() + " --engine oracle");
  o.expect(tampered.code == 2 && tampered.out.find("NonIntegralCount") != std::string::npos,
           "tampered sidecar exit code");

  const Run missing = run_cli("exact " + (dir / "missing.json").string() + " --w 1");
  o.expect(missing.code == 1, "missing file exit code");
  fs::remove_all(dir);
  o.note << "round trips, 10 monotone sweeps, exit codes 2/2/1";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"exact area program equals enumeration", exact_equivalence},
      {"weighted programs equal weighted enumeration", weighted_equivalence},
      {"area approximation sandwich", area_sandwich},
      {"perimeter approximation sandwich", perimeter_sandwich},
      {"extremal triangle bounds", lambda_bounds},
      {"Monte Carlo accuracy and determinism", monte_carlo},
      {"grid rounding sandwich", grid_sandwich},
      {"hardness gadget round trip", gadget_round_trip},
      {"expectations equal enumeration", expectations},
      {"CLI contract", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failed;
    std::printf("[%s] %zu. %s (%.1fs): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.note.str().c_str());
    std::fflush(stdout);
  }
  return failed;
}
