#include "bnchain/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bnchain::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const Json& require(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) fail(std::string(context) + ": missing key \"" + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* context) {
  if (!j.is_number_integer()) fail(std::string(context) + ": expected an integer, got " + j.dump());
  return j.get<int>();
}

std::int64_t as_int64(const Json& j, const char* context) {
  if (!j.is_number_integer()) fail(std::string(context) + ": expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::vector<int> int_array(const Json& j, const char* context) {
  if (!j.is_array()) fail(std::string(context) + ": expected an array, got " + j.dump());
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, context));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  fail("expected a rational string such as \"3/2\", got " + j.dump());
}

Json to_json(const Partition& p) { return Json(p.rows()); }

Partition partition_from_json(const Json& j) { return Partition(int_array(j, "partition")); }

Json to_json(const ResidueSet& s) {
  switch (s.kind()) {
    case ResidueSet::Kind::kEmpty:
      return Json{{"kind", "empty"}};
    case ResidueSet::Kind::kSingleton:
      return Json{{"kind", "singleton"}, {"z", s.representative()}};
    case ResidueSet::Kind::kResidueClass:
      break;
  }
  return Json{{"kind", "residue"}, {"z", s.representative()}, {"mod", s.modulus()}};
}

Json to_json(const TorsionProfile& m) {
  Json j{{"genus", m.genus()}, {"profile", m.orders()}};
  if (m.m1()) j["m1"] = *m.m1();
  return j;
}

Json to_json(const DisplacementTableau& t) { return Json{{"shape", to_json(t.shape())}, {"rows", t.rows()}}; }

DisplacementTableau tableau_from_json(const Json& j, int alphabet) {
  std::vector<std::vector<int>> rows;
  const Json& r = require(j, "rows", "tableau");
  if (!r.is_array()) fail("tableau: rows must be an array of arrays");
  for (const auto& row : r) rows.push_back(int_array(row, "tableau row"));
  DisplacementTableau t(std::move(rows), alphabet);
  if (j.contains("shape") && partition_from_json(j.at("shape")) != t.shape()) {
    fail("tableau: shape " + j.at("shape").dump() + " does not match the row lengths");
  }
  return t;
}

Json to_json(const ChainSpec& spec) {
  if (!spec.is_metric()) {
    Json j{{"genus", spec.genus()}, {"profile", spec.profile().orders()}};
    if (spec.profile().m1()) j["m1"] = *spec.profile().m1();
    return j;
  }
  Json cycles = Json::array();
  for (const auto& c : spec.cycles()) cycles.push_back(Json{{"cw", c.clockwise.str()}, {"total", c.total.str()}});
  Json j{{"cycles", cycles}};
  if (!spec.bridges().empty()) {
    Json bridges = Json::array();
    for (const auto& b : spec.bridges()) bridges.push_back(b.str());
    j["bridges"] = bridges;
  }
  return j;
}

ChainSpec chain_from_json(const Json& j) {
  if (!j.is_object()) fail("chain: expected an object");
  if (j.contains("cycles")) {
    const Json& cs = j.at("cycles");
    if (!cs.is_array()) fail("chain: cycles must be an array");
    std::vector<CycleLengths> cycles;
    for (const auto& c : cs) {
      cycles.push_back({rational_from_json(require(c, "cw", "cycle")), rational_from_json(require(c, "total", "cycle"))});
    }
    std::vector<Rational> bridges;
    if (j.contains("bridges")) {
      if (!j.at("bridges").is_array()) fail("chain: bridges must be an array");
      for (const auto& b : j.at("bridges")) bridges.push_back(rational_from_json(b));
    }
    return ChainSpec::metric(std::move(cycles), std::move(bridges));
  }
  const int g = as_int(require(j, "genus", "chain"), "chain genus");
  std::vector<int> orders = j.contains("profile") ? int_array(j.at("profile"), "chain profile") : std::vector<int>(
                                                                                                    static_cast<std::size_t>(std::max(0, g - 1)), 0);
  std::optional<int> m1;
  if (j.contains("m1")) m1 = as_int(j.at("m1"), "chain m1");
  return ChainSpec::abstract(TorsionProfile(g, std::move(orders), m1));
}

Json to_json(const ChainDivisor& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms()) {
    if (const auto* p = std::get_if<CyclePoint>(&t.location)) {
      terms.push_back(Json{{"cycle", p->cycle}, {"xi", p->xi.str()}, {"mult", t.mult}});
    } else {
      terms.push_back(Json{{"bridge", std::get<BridgePoint>(t.location).index}, {"mult", t.mult}});
    }
  }
  return Json{{"terms", terms}, {"wg", d.marked()}};
}

ChainDivisor divisor_from_json(const Json& j) {
  if (!j.is_object()) fail("divisor: expected an object");
  ChainDivisor d;
  if (j.contains("terms")) {
    if (!j.at("terms").is_array()) fail("divisor: terms must be an array");
    for (const auto& t : j.at("terms")) {
      const std::int64_t mult = t.contains("mult") ? as_int64(t.at("mult"), "divisor mult") : 1;
      if (t.contains("cycle")) {
        d.add_point(as_int(t.at("cycle"), "divisor cycle"), rational_from_json(require(t, "xi", "divisor term")), mult);
      } else if (t.contains("bridge")) {
        d.add_bridge(as_int(t.at("bridge"), "divisor bridge"), mult);
      } else {
        fail("divisor term needs \"cycle\" or \"bridge\": " + t.dump());
      }
    }
  }
  if (j.contains("wg")) d.add_marked(as_int64(j.at("wg"), "divisor wg"));
  return d;
}

Json to_json(const StandardForm& f) {
  Json xi = Json::array();
  for (const auto& x : f.xi) xi.push_back(x.str());
  return Json{{"xi", xi}, {"degree", f.degree}};
}

StandardForm standard_form_from_json(const Json& j) {
  StandardForm f;
  const Json& xi = require(j, "xi", "standard form");
  if (!xi.is_array()) fail("standard form: xi must be an array");
  for (const auto& x : xi) f.xi.push_back(rational_from_json(x));
  f.degree = as_int64(require(j, "degree", "standard form"), "standard form degree");
  return f;
}

Json to_json(const TorusDescriptor& t) {
  Json fixed = Json::object();
  Json free = Json::array();
  for (std::size_t i = 0; i < t.cycles.size(); ++i) {
    const auto& c = t.cycles[i];
    if (c.fixed) {
      fixed[std::to_string(i + 1)] = Json{{"z", c.z}, {"mod", c.modulus}};
    } else {
      free.push_back(i + 1);
    }
  }
  return Json{{"fixed", fixed}, {"free", free}};
}

Json to_json(const Component& c) {
  return Json{{"tableau", to_json(c.tableau)}, {"torus", to_json(c.torus)}, {"dim", c.torus.dimension()},
              {"stable", c.stable}};
}

Json to_json(const GeneralityVerdict& v) {
  Json j{{"general", v.general}, {"reason", v.reason}};
  if (v.index) j["index"] = *v.index;
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const ExpectedClass& c) {
  return Json{{"theta_power", c.theta_power},
              {"coefficient", c.coefficient.str()},
              {"expected_dim", c.expected_dim},
              {"syt_count", c.syt_count}};
}

Json to_json(const CrossCheckReport& r) {
  Json j{{"rank_wp", r.rank_wp}, {"rank_oracle", r.rank_oracle}, {"match", r.match}};
  if (!r.match) {
    j["standard_form"] = to_json(r.standard);
    j["weierstrass"] = to_json(r.weierstrass);
    j["vertices"] = r.vertex_count;
    j["scale"] = r.scale;
    j["chips"] = r.chips;
    j["reduced"] = r.reduced;
  }
  return j;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json load_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open " + arg);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(arg + ": " + e.what());
  }
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, end - start));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) fail("expected a comma-separated list of integers, got \"" + std::string(text) + "\"");
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

}  // namespace bnchain::json_io
