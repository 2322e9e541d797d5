#include "hullprob/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "hullprob/error.hpp"

namespace hullprob {

namespace {

using json = nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

Rational rational_of(const json& v, const char* what) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational::parse(v.dump());
  throw Error(ErrorKind::Parse, std::string(what) + " must be a rational string");
}

BigInt integer_of(const json& v, const char* what) {
  const Rational r = rational_of(v, what);
  if (!r.is_integer()) throw Error(ErrorKind::Parse, std::string(what) + " must be an integer");
  return r.num();
}

std::size_t index_of(const json& v, std::size_t n, const char* what) {
  if (!v.is_number_unsigned()) {
    throw Error(ErrorKind::Parse, std::string(what) + " must be a point index");
  }
  const auto i = v.get<std::uint64_t>();
  if (i >= n) throw Error(ErrorKind::Parse, std::string(what) + " index out of range");
  return static_cast<std::size_t>(i);
}

Budget budget_of(const json& v) {
  if (!v.is_number_unsigned()) throw Error(ErrorKind::Parse, "weights must be natural numbers");
  return v.get<std::uint64_t>();
}

json strings(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const BigInt& v : values) out.push_back(v.get_str());
  return out;
}

SubsetSumInstance ssi_of(const json& j) {
  SubsetSumInstance ssi;
  const json& a = field(j, "a");
  if (!a.is_array()) throw Error(ErrorKind::Parse, "\"a\" must be an array");
  for (const json& v : a) ssi.a.push_back(integer_of(v, "a"));
  ssi.t = integer_of(field(j, "t"), "t");
  const json& k = field(j, "k");
  if (!k.is_number_unsigned()) throw Error(ErrorKind::Parse, "\"k\" must be a natural number");
  ssi.k = k.get<std::size_t>();
  return ssi;
}

}  // namespace

StochasticInstance parse_instance(const std::string& text) {
  const json root = parse_json(text);
  const json& list = field(root, "points");
  if (!list.is_array()) throw Error(ErrorKind::Parse, "\"points\" must be an array");
  std::vector<Point> points;
  std::vector<Rational> probs;
  for (const json& item : list) {
    points.push_back({rational_of(field(item, "x"), "x"), rational_of(field(item, "y"), "y")});
    probs.push_back(rational_of(field(item, "p"), "p"));
  }
  return StochasticInstance(std::move(points), std::move(probs));
}

std::string instance_json(const StochasticInstance& inst) {
  json list = json::array();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    list.push_back({{"x", inst.point(i).x.str()},
                    {"y", inst.point(i).y.str()},
                    {"p", inst.prob(i).str()}});
  }
  json root;
  root["points"] = std::move(list);
  return root.dump(2) + "\n";
}

WeightAssignment parse_weights(const std::string& text, std::size_t n) {
  const json root = parse_json(text);
  const json& mode = field(root, "mode");
  if (mode == "perimeter") {
    WeightAssignment w = WeightAssignment::perimeter(n);
    for (const json& e : field(root, "edges")) {
      if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::Parse, "edge entries are [u, v, w]");
      w.set_edge(index_of(e[0], n, "u"), index_of(e[1], n, "v"), budget_of(e[2]));
    }
    return w;
  }
  if (mode == "area") {
    WeightAssignment w = WeightAssignment::area(n);
    for (const json& t : field(root, "triangles")) {
      if (!t.is_array() || t.size() != 4) {
        throw Error(ErrorKind::Parse, "triangle entries are [apex, u, v, w]");
      }
      w.set_triangle(index_of(t[0], n, "apex"), index_of(t[1], n, "u"), index_of(t[2], n, "v"),
                     budget_of(t[3]));
    }
    return w;
  }
  throw Error(ErrorKind::Parse, "weights mode must be \"area\" or \"perimeter\"");
}

std::string area_sidecar_json(const AreaGadget& g) {
  json j;
  j["kind"] = "area";
  j["a"] = strings(g.ssi.a);
  j["t"] = g.ssi.t.get_str();
  j["k"] = g.ssi.k;
  j["rho"] = g.rho.str();
  j["G"] = g.G.get_str();
  j["b"] = g.b.get_str();
  j["scale"] = g.scale.get_str();
  return j.dump(2) + "\n";
}

std::string perimeter_sidecar_json(const PerimeterGadget& g) {
  json j;
  j["kind"] = "perimeter";
  j["a"] = strings(g.ssi.a);
  j["t"] = g.ssi.t.get_str();
  j["k"] = g.ssi.k;
  j["rho"] = g.rho.str();
  j["L"] = g.L.get_str();
  j["c"] = g.c.get_str();
  j["slack"] = g.slack.str();
  return j.dump(2) + "\n";
}

Gadget parse_gadget(const std::string& sidecar, StochasticInstance instance) {
  const json j = parse_json(sidecar);
  const json& kind = field(j, "kind");
  if (kind == "area") {
    AreaGadget g;
    g.ssi = ssi_of(j);
    g.rho = rational_of(field(j, "rho"), "rho");
    g.G = integer_of(field(j, "G"), "G");
    g.b = integer_of(field(j, "b"), "b");
    g.scale = integer_of(field(j, "scale"), "scale");
    g.instance = std::move(instance);
    return g;
  }
  if (kind == "perimeter") {
    PerimeterGadget g;
    g.ssi = ssi_of(j);
    g.rho = rational_of(field(j, "rho"), "rho");
    g.L = integer_of(field(j, "L"), "L");
    g.c = integer_of(field(j, "c"), "c");
    g.slack = rational_of(field(j, "slack"), "slack");
    g.instance = std::move(instance);
    return g;
  }
  throw Error(ErrorKind::Parse, "sidecar kind must be \"area\" or \"perimeter\"");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "failed reading " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

}  // namespace hullprob
