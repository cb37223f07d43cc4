#include "skyring/sequence_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "skyring/error.hpp"

namespace skyring {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::schema_violation, path + ": " + what);
}

const json& field(const json& obj, const char* name, const std::string& path) {
  auto it = obj.find(name);
  if (it == obj.end()) schema_error(path, std::string("missing field '") + name + "'");
  return *it;
}

Int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  return v.get<Int>();
}

int as_index(const json& v, const std::string& path) {
  Int x = as_int(v, path);
  if (x < INT32_MIN || x > INT32_MAX) schema_error(path, "index out of range");
  return static_cast<int>(x);
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) schema_error(path, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) schema_error(path, "expected an array");
  return v;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key)) schema_error(path, "unknown field '" + key + "'");
}

std::vector<int> index_list(const json& v, const std::string& path) {
  std::vector<int> out;
  const json& arr = as_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(as_index(arr[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Proximity parse_proximity(const json& v, const std::string& path) {
  std::string s = as_string(v, path);
  if (s == "proximate") return Proximity::proximate;
  if (s == "t_proximate") return Proximity::t_proximate;
  schema_error(path, "expected 'proximate' or 't_proximate'");
}

Placement parse_placement(const json& p, const std::string& path) {
  if (!p.is_object()) schema_error(path, "expected an object");
  const std::string type = as_string(field(p, "type", path), path + ".type");
  if (type == "ambient_curve") {
    check_keys(p, {"type", "degree", "meets", "splitting"}, path);
    AmbientCurve c;
    c.degree = as_int(field(p, "degree", path), path + ".degree");
    if (auto it = p.find("meets"); it != p.end()) {
      const json& arr = as_array(*it, path + ".meets");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string mp = path + ".meets[" + std::to_string(i) + "]";
        check_keys(arr[i], {"index", "count"}, mp);
        c.meets.push_back({as_index(field(arr[i], "index", mp), mp + ".index"),
                           as_int(field(arr[i], "count", mp), mp + ".count")});
      }
    }
    if (auto it = p.find("splitting"); it != p.end() && !it->is_null())
      c.splitting = as_int(*it, path + ".splitting");
    return c;
  }
  if (type == "exceptional_section") {
    check_keys(p, {"type", "host", "subbundle_degree"}, path);
    return ExceptionalSection{as_index(field(p, "host", path), path + ".host"),
                              as_int(field(p, "subbundle_degree", path), path + ".subbundle_degree")};
  }
  if (type == "exceptional_plane_curve") {
    check_keys(p, {"type", "host", "plane_degree"}, path);
    return ExceptionalPlaneCurve{as_index(field(p, "host", path), path + ".host"),
                                 as_int(field(p, "plane_degree", path), path + ".plane_degree")};
  }
  if (type == "exceptional_fiber") {
    check_keys(p, {"type", "host"}, path);
    return ExceptionalFiber{as_index(field(p, "host", path), path + ".host")};
  }
  if (type == "ambient_point") {
    check_keys(p, {"type", "on"}, path);
    AmbientPoint a;
    if (auto it = p.find("on"); it != p.end()) a.on = index_list(*it, path + ".on");
    return a;
  }
  if (type == "raw_mu") {
    check_keys(p, {"type", "mu", "contained_in", "c1"}, path);
    RawMu r;
    if (auto it = p.find("mu"); it != p.end()) {
      const json& arr = as_array(*it, path + ".mu");
      for (std::size_t i = 0; i < arr.size(); ++i)
        r.mu.push_back(as_int(arr[i], path + ".mu[" + std::to_string(i) + "]"));
    }
    if (auto it = p.find("contained_in"); it != p.end())
      r.contained_in = index_list(*it, path + ".contained_in");
    if (auto it = p.find("c1"); it != p.end() && !it->is_null()) r.c1 = as_int(*it, path + ".c1");
    return r;
  }
  schema_error(path + ".type", "unknown placement type '" + type + "'");
}

json placement_json(const Placement& placement) {
  json out;
  out["type"] = std::string(placement_name(placement));
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, AmbientCurve>) {
          out["degree"] = p.degree;
          json meets = json::array();
          for (const Meet& m : p.meets) meets.push_back({{"index", m.index}, {"count", m.count}});
          out["meets"] = meets;
          if (p.splitting) out["splitting"] = *p.splitting;
        } else if constexpr (std::is_same_v<P, ExceptionalSection>) {
          out["host"] = p.host;
          out["subbundle_degree"] = p.subbundle_degree;
        } else if constexpr (std::is_same_v<P, ExceptionalPlaneCurve>) {
          out["host"] = p.host;
          out["plane_degree"] = p.plane_degree;
        } else if constexpr (std::is_same_v<P, ExceptionalFiber>) {
          out["host"] = p.host;
        } else if constexpr (std::is_same_v<P, AmbientPoint>) {
          out["on"] = p.on;
        } else {
          out["mu"] = p.mu;
          out["contained_in"] = p.contained_in;
          if (p.c1) out["c1"] = *p.c1;
        }
      },
      placement);
  return out;
}

}  // namespace

BlowUpSequence parse_sequence(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::schema_violation, std::string("malformed JSON: ") + e.what(), e.byte);
  }
  check_keys(doc, {"ground", "centers", "component_proximities", "intersections", "name", "description"}, "$");
  BlowUpSequence seq;
  seq.ground = as_string(field(doc, "ground", "$"), "$.ground");
  const json& centers = as_array(field(doc, "centers", "$"), "$.centers");
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const std::string path = "$.centers[" + std::to_string(i) + "]";
    check_keys(centers[i], {"index", "kind", "placement"}, path);
    CenterSpec c;
    c.index = as_index(field(centers[i], "index", path), path + ".index");
    const std::string kind = as_string(field(centers[i], "kind", path), path + ".kind");
    if (kind == "point") c.kind = CenterKind::point;
    else if (kind == "curve") c.kind = CenterKind::curve;
    else schema_error(path + ".kind", "expected 'point' or 'curve'");
    c.placement = parse_placement(field(centers[i], "placement", path), path + ".placement");
    seq.centers.push_back(std::move(c));
  }
  if (auto it = doc.find("component_proximities"); it != doc.end()) {
    const json& arr = as_array(*it, "$.component_proximities");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "$.component_proximities[" + std::to_string(i) + "]";
      check_keys(arr[i], {"source", "target", "kind"}, path);
      seq.component_proximities.push_back({as_index(field(arr[i], "source", path), path + ".source"),
                                           as_index(field(arr[i], "target", path), path + ".target"),
                                           parse_proximity(field(arr[i], "kind", path), path + ".kind")});
    }
  }
  if (auto it = doc.find("intersections"); it != doc.end()) {
    const json& arr = as_array(*it, "$.intersections");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "$.intersections[" + std::to_string(i) + "]";
      std::vector<int> pair = index_list(arr[i], path);
      if (pair.size() != 2) schema_error(path, "expected a pair of indices");
      seq.intersections.emplace_back(pair[0], pair[1]);
    }
  }
  return seq;
}

BlowUpSequence load_sequence(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::file_not_found, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_sequence(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what(), e.position());
  }
}

std::string to_json(const BlowUpSequence& seq, int indent) {
  json doc;
  doc["ground"] = seq.ground;
  json centers = json::array();
  for (const CenterSpec& c : seq.centers)
    centers.push_back({{"index", c.index},
                       {"kind", std::string(to_string(c.kind))},
                       {"placement", placement_json(c.placement)}});
  doc["centers"] = centers;
  if (!seq.component_proximities.empty()) {
    json rel = json::array();
    for (const auto& r : seq.component_proximities)
      rel.push_back({{"source", r.source}, {"target", r.target}, {"kind", std::string(to_string(r.kind))}});
    doc["component_proximities"] = rel;
  }
  if (!seq.intersections.empty()) {
    json inter = json::array();
    for (const auto& [i, j] : seq.intersections) inter.push_back({i, j});
    doc["intersections"] = inter;
  }
  return doc.dump(indent);
}

}  // namespace skyring
