// hullprob command-line front end. Results go to stdout as JSON (or CSV for
// sweep); failures go to stderr as {"error": ..., "message": ..., "witness": [...]}
// with exit code 1 for I/O and parse problems and 2 for everything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hullprob/approx.hpp"
#include "hullprob/error.hpp"
#include "hullprob/events.hpp"
#include "hullprob/hull_dp.hpp"
#include "hullprob/io.hpp"
#include "hullprob/montecarlo.hpp"
#include "hullprob/oracle.hpp"
#include "hullprob/reductions.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace hullprob;

namespace {

struct Options {
  std::string input;
  std::string measure = "area";
  std::string w = "0";
  std::string eps;
  std::string delta;
  std::string U;
  std::string weights;
  std::uint64_t seed = 0;
  bool merge = false;
  std::size_t cap = 20;
  std::string grid;
  std::string engine = "exact";
  std::string recover_engine = "oracle";
  std::string format = "rational";
  std::string kind;
  std::string a;
  std::string t = "0";
  std::size_t k = 1;
  std::string rho = "1/2";
  std::string out;
};

Measure measure_of(const std::string& name) {
  return name == "perimeter" ? Measure::Perimeter : Measure::Area;
}

Rational rational_arg(const std::string& text, const char* name) {
  if (text.empty()) {
    throw Error(ErrorKind::InvalidParams, std::string("--") + name + " is required");
  }
  return Rational::parse(text);
}

StochasticInstance load(const std::string& path) { return parse_instance(read_file(path)); }

json probability(const Rational& pr) {
  return {{"pr", pr.fraction_str()}, {"decimal", json::parse(to_decimal(pr))}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Tail engine for exact runs: the area program on true areas, or the weighted
// program when a weights file is given. Thresholds are rounded up.
std::function<Rational(const Rational&)> exact_engine(const StochasticInstance& inst,
                                                      Measure measure,
                                                      const std::string& weights_path) {
  if (weights_path.empty()) {
    if (measure == Measure::Perimeter) {
      throw Error(ErrorKind::PreconditionViolated,
                  "exact perimeter needs integer edge weights (--weights)");
    }
    auto tail = std::make_shared<ExactAreaTail>(inst);
    return [tail](const Rational& w) { return tail->pr_ge(w); };
  }
  const WeightAssignment weights = parse_weights(read_file(weights_path), inst.size());
  if (weights.mode() != measure) {
    throw Error(ErrorKind::PreconditionViolated, "weights file mode does not match --measure");
  }
  require_exact_ready(inst);
  auto tail = std::make_shared<WeightedTail>(inst, weights);
  return [tail](const Rational& w) {
    if (w.sign() <= 0) return Rational(1);
    return tail->pr_ge(to_budget(w));
  };
}

void run_exact(const Options& o) {
  const StochasticInstance inst = load(o.input);
  const Rational w = rational_arg(o.w, "w");
  emit(probability(exact_engine(inst, measure_of(o.measure), o.weights)(w)));
}

void run_approx(const Options& o) {
  const StochasticInstance inst = load(o.input);
  const Rational w = rational_arg(o.w, "w");
  const Rational eps = rational_arg(o.eps, "eps");
  const Measure m = measure_of(o.measure);
  json j = probability(approx_pr_ge(inst, m, w, eps));
  const char* sym = m == Measure::Area ? "A" : "P";
  j["sandwich"] = std::string("Pr[") + sym + " >= w] <= pr <= Pr[" + sym + " >= (1 - eps) w]";
  j["w"] = w.str();
  j["eps"] = eps.str();
  emit(j);
}

void run_bounded(const Options& o) {
  const StochasticInstance inst = load(o.input);
  const Rational w = rational_arg(o.w, "w");
  const Rational eps = rational_arg(o.eps, "eps");
  const Rational U = rational_arg(o.U, "U");
  json j = probability(pr_area_ge_bounded(inst, w, eps, U, o.merge));
  j["sandwich"] = "Pr[A >= w + eps] <= pr <= Pr[A >= w - eps]";
  j["w"] = w.str();
  j["eps"] = eps.str();
  j["U"] = U.str();
  emit(j);
}

McPlan plan_of(const Options& o) {
  return McPlan::make(rational_arg(o.eps, "eps"), rational_arg(o.delta, "delta"), o.seed);
}

void run_mc(const Options& o) {
  const StochasticInstance inst = load(o.input);
  const Rational w = rational_arg(o.w, "w");
  const McPlan plan = plan_of(o);
  const McResult r = mc_pr_measure_ge(inst, measure_of(o.measure), w, plan);
  emit({{"pr", json::parse(to_decimal(r.pr, 17))},
        {"N", r.samples},
        {"hits", r.hits},
        {"seed", plan.master_seed}});
}

void run_oracle(const Options& o) {
  const StochasticInstance inst = load(o.input);
  const Rational w = rational_arg(o.w, "w");
  emit(probability(oracle_pr_ge(inst, measure_of(o.measure), w, {o.cap})));
}

void run_expect(const Options& o) {
  const StochasticInstance inst = load(o.input);
  const Measure m = measure_of(o.measure);
  const SqrtSum e = expected_measure(inst, m);
  json j;
  j["expected"] = e.str();
  j["decimal"] = e.to_double();
  emit(j);
}

std::vector<Rational> grid_of(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw Error(ErrorKind::InvalidParams, "--grid must be min:max:steps");
  const Rational lo = Rational::parse(parts[0]);
  const Rational hi = Rational::parse(parts[1]);
  const Rational steps = Rational::parse(parts[2]);
  if (!steps.is_integer() || steps.sign() <= 0 || hi < lo) {
    throw Error(ErrorKind::InvalidParams, "--grid needs min <= max and a positive step count");
  }
  const long n = steps.num().get_si();
  std::vector<Rational> out;
  for (long i = 0; i < n; ++i) {
    out.push_back(n == 1 ? lo : lo + (hi - lo) * Rational(i) / Rational(n - 1));
  }
  return out;
}

void run_sweep(const Options& o) {
  const StochasticInstance inst = load(o.input);
  const Measure m = measure_of(o.measure);
  const std::vector<Rational> grid = grid_of(o.grid);
  if (o.format != "rational" && o.format != "decimal") {
    throw Error(ErrorKind::InvalidParams, "--format must be rational or decimal");
  }
  std::function<Rational(const Rational&)> engine;
  if (o.engine == "exact") {
    engine = exact_engine(inst, m, o.weights);
  } else if (o.engine == "approx") {
    const Rational eps = rational_arg(o.eps, "eps");
    engine = [&, eps](const Rational& w) { return approx_pr_ge(inst, m, w, eps); };
  } else if (o.engine == "mc") {
    const McPlan plan = plan_of(o);
    engine = [&, plan](const Rational& w) { return mc_pr_measure_ge(inst, m, w, plan).pr; };
  } else if (o.engine == "oracle") {
    auto table = std::make_shared<DistributionTable>(exact_distribution(inst, m, {o.cap}));
    engine = [table](const Rational& w) {
      return w.sign() <= 0 ? Rational(1) : table->pr_ge(w);
    };
  } else {
    throw Error(ErrorKind::InvalidParams, "--engine must be exact, approx, mc or oracle");
  }
  std::string csv = "w,pr\n";
  for (const Rational& w : grid) {
    const Rational pr = engine(w);
    csv += w.str() + "," + (o.format == "rational" ? pr.str() : to_decimal(pr)) + "\n";
  }
  std::cout << csv;
}

std::vector<BigInt> list_of(const std::string& text) {
  std::vector<BigInt> out;
  std::string cur;
  auto flush = [&] {
    const Rational r = Rational::parse(cur);
    if (!r.is_integer()) throw Error(ErrorKind::Parse, "--a entries must be integers");
    out.push_back(r.num());
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

void run_gadget(const Options& o) {
  SubsetSumInstance ssi;
  ssi.a = list_of(o.a);
  const Rational t = Rational::parse(o.t);
  if (!t.is_integer()) throw Error(ErrorKind::Parse, "--t must be an integer");
  ssi.t = t.num();
  for (const BigInt& v : ssi.a) {
    if (v <= 0) throw Error(ErrorKind::InvalidParams, "subset-sum values must be positive");
  }
  if (ssi.t < 0) throw Error(ErrorKind::InvalidParams, "target must be natural");
  const SubsetSumInstance padded = pad_to_fixed_cardinality(ssi, o.k);
  const Rational rho = rational_arg(o.rho, "rho");
  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + o.out + ": " + ec.message());
  json j;
  if (o.kind == "area") {
    const AreaGadget g = build_area_gadget(padded, rho);
    write_file(fs::path(o.out) / "instance.json", instance_json(g.instance));
    write_file(fs::path(o.out) / "sidecar.json", area_sidecar_json(g));
    j = json::parse(area_sidecar_json(g));
    j["points"] = g.instance.size();
  } else {
    const PerimeterGadget g = build_perimeter_gadget(padded, rho);
    write_file(fs::path(o.out) / "instance.json", instance_json(g.instance));
    write_file(fs::path(o.out) / "sidecar.json", perimeter_sidecar_json(g));
    j = json::parse(perimeter_sidecar_json(g));
    j["points"] = g.instance.size();
  }
  j["out"] = o.out;
  emit(j);
}

void run_recover(const Options& o) {
  const fs::path dir(o.input);
  StochasticInstance inst = parse_instance(read_file(dir / "instance.json"));
  const Gadget gadget = parse_gadget(read_file(dir / "sidecar.json"), std::move(inst));
  BigInt f;
  if (const auto* g = std::get_if<AreaGadget>(&gadget)) {
    TailEngine engine;
    if (o.recover_engine == "exact") {
      auto tail = std::make_shared<ExactAreaTail>(g->instance);
      engine = [tail](const StochasticInstance&, const Rational& w) { return tail->pr_ge(w); };
    } else {
      auto table =
          std::make_shared<DistributionTable>(exact_distribution(g->instance, Measure::Area, {o.cap}));
      engine = [table](const StochasticInstance&, const Rational& w) { return table->pr_ge(w); };
    }
    f = recover_area_count(*g, engine);
  } else {
    const auto& pg = std::get<PerimeterGadget>(gadget);
    if (o.recover_engine == "exact") {
      throw Error(ErrorKind::PreconditionViolated,
                  "perimeter gadgets have irrational lengths; use --engine oracle");
    }
    auto table = std::make_shared<DistributionTable>(
        exact_distribution(pg.instance, Measure::Perimeter, {o.cap}));
    f = recover_perimeter_count(
        pg, [table](const StochasticInstance&, const Rational& w) { return table->pr_ge(w); });
  }
  emit({{"f", f.get_str()}});
}

int fail(const Error& e) {
  json j;
  j["error"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  j["witness"] = e.witness();
  std::cerr << j.dump() << "\n";
  return e.kind() == ErrorKind::Io || e.kind() == ErrorKind::Parse ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tail probabilities of convex-hull area and perimeter for stochastic points"};
  app.require_subcommand(1);
  Options o;
  std::function<void(const Options&)> action;

  auto common = [&](CLI::App* sub, bool needs_w) {
    sub->add_option("input", o.input, "instance JSON file")->required();
    sub->add_option("--measure", o.measure, "area or perimeter")
        ->check(CLI::IsMember({"area", "perimeter"}));
    if (needs_w) sub->add_option("--w", o.w, "threshold (rational)");
  };

  auto* exact = app.add_subcommand("exact", "exact probability by dynamic programming");
  common(exact, true);
  exact->add_option("--weights", o.weights, "natural weight table (JSON)");
  exact->callback([&] { action = run_exact; });

  auto* approx = app.add_subcommand("approx", "sandwich approximation");
  common(approx, true);
  approx->add_option("--eps", o.eps, "epsilon in (0,1)")->required();
  approx->callback([&] { action = run_approx; });

  auto* bounded = app.add_subcommand("bounded", "grid-rounded area probability for [0,U]^2");
  bounded->add_option("input", o.input, "instance JSON file")->required();
  bounded->add_option("--w", o.w, "threshold (rational)");
  bounded->add_option("--eps", o.eps, "additive slack")->required();
  bounded->add_option("--U", o.U, "domain bound")->required();
  bounded->add_flag("--merge", o.merge, "merge points that round together");
  bounded->callback([&] { action = run_bounded; });

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate");
  common(mc, true);
  mc->add_option("--eps", o.eps, "additive error")->required();
  mc->add_option("--delta", o.delta, "failure probability")->required();
  mc->add_option("--seed", o.seed, "master seed");
  mc->callback([&] { action = run_mc; });

  auto* oracle = app.add_subcommand("oracle", "exact probability by enumeration");
  common(oracle, true);
  oracle->add_option("--cap", o.cap, "maximum number of uncertain points");
  oracle->callback([&] { action = run_oracle; });

  auto* expect = app.add_subcommand("expect", "exact expected area or perimeter");
  common(expect, false);
  expect->callback([&] { action = run_expect; });

  auto* sweep = app.add_subcommand("sweep", "tail probabilities over a threshold grid (CSV)");
  common(sweep, false);
  sweep->add_option("--grid", o.grid, "min:max:steps")->required();
  sweep->add_option("--engine", o.engine, "exact, approx, mc or oracle")
      ->check(CLI::IsMember({"exact", "approx", "mc", "oracle"}));
  sweep->add_option("--format", o.format, "rational or decimal")
      ->check(CLI::IsMember({"rational", "decimal"}));
  sweep->add_option("--weights", o.weights, "natural weight table for the exact engine");
  sweep->add_option("--eps", o.eps, "epsilon (approx, mc)");
  sweep->add_option("--delta", o.delta, "failure probability (mc)");
  sweep->add_option("--seed", o.seed, "master seed (mc)");
  sweep->add_option("--cap", o.cap, "enumeration cap (oracle)");
  sweep->callback([&] { action = run_sweep; });

  auto* gadget = app.add_subcommand("gadget", "write a hardness gadget instance and sidecar");
  gadget->add_option("kind", o.kind, "area or perimeter")
      ->required()
      ->check(CLI::IsMember({"area", "perimeter"}));
  gadget->add_option("--a", o.a, "comma-separated positive integers")->required();
  gadget->add_option("--t", o.t, "target");
  gadget->add_option("--k", o.k, "cardinality");
  gadget->add_option("--rho", o.rho, "presence probability");
  gadget->add_option("--out", o.out, "output directory")->required();
  gadget->callback([&] { action = run_gadget; });

  auto* recover = app.add_subcommand("recover", "recover the subset count from a gadget");
  recover->add_option("dir", o.input, "gadget directory")->required();
  recover->add_option("--engine", o.recover_engine, "oracle or exact")
      ->check(CLI::IsMember({"oracle", "exact"}));
  recover->add_option("--cap", o.cap, "enumeration cap (oracle)");
  recover->callback([&] { action = run_recover; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    action(o);
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}, {"witness", json::array()}}.dump()
              << "\n";
    return 2;
  }
  return 0;
}
