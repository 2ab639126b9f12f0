#include "walklab/instances.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace walklab {

namespace {

nlohmann::ordered_json to_json(const InstanceFile& inst) {
  nlohmann::ordered_json j;
  j["problem"] = inst.problem;
  j["n"] = inst.n;
  if (!inst.values.empty() || (inst.points.empty() && inst.lines.empty())) {
    j["values"] = inst.values;
  }
  if (!inst.points.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const Point& p : inst.points) arr.push_back({p.x, p.y});
    j["points"] = std::move(arr);
  }
  if (!inst.lines.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const Line& l : inst.lines) arr.push_back({l.a, l.b, l.c});
    j["lines"] = std::move(arr);
  }
  j["seed"] = inst.seed;
  return j;
}

InstanceFile from_json(const nlohmann::json& j) {
  InstanceFile inst;
  inst.problem = j.at("problem").get<std::string>();
  inst.n = j.at("n").get<std::int64_t>();
  if (j.contains("values")) {
    inst.values = j.at("values").get<std::vector<std::int64_t>>();
  }
  if (j.contains("points")) {
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) {
        fail(ErrorCode::parse_error, "point entries must be [x, y]");
      }
      inst.points.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
    }
  }
  if (j.contains("lines")) {
    for (const auto& l : j.at("lines")) {
      if (!l.is_array() || l.size() != 3) {
        fail(ErrorCode::parse_error, "line entries must be [a, b, c]");
      }
      inst.lines.push_back({l[0].get<std::int64_t>(), l[1].get<std::int64_t>(),
                            l[2].get<std::int64_t>()});
    }
  }
  if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
  return inst;
}

}  // namespace

std::string instance_to_json_text(const InstanceFile& inst) {
  return to_json(inst).dump(2) + "\n";
}

InstanceFile parse_instance_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, e.what());
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, e.what());
  }
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_json_text(buf.str());
}

void write_instance_file(const std::string& path, const InstanceFile& inst) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::parse_error, "cannot open " + path + " for writing");
  out << instance_to_json_text(inst);
}

}  // namespace walklab
