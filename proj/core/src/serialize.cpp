#include "shuffle/serialize.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace shuffle {

namespace {

using nlohmann::json;

json sym_to_obj(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [lam, c] : f.terms()) {
    json term;
    term["shape"] = lam.parts();
    term["coeff"] = c.to_string();
    terms.push_back(term);
  }
  json obj;
  obj["basis"] = std::string(1, static_cast<char>(f.basis()));
  obj["maxdeg"] = f.max_degree();
  obj["terms"] = terms;
  return obj;
}

SymFunc sym_from_obj(const json& obj) {
  std::string b = obj.at("basis").get<std::string>();
  if (b.size() != 1 || std::string("mehps").find(b[0]) == std::string::npos)
    throw std::invalid_argument("unknown basis: " + b);
  SymFunc f(static_cast<Basis>(b[0]));
  for (const auto& term : obj.at("terms")) {
    Partition lam(term.at("shape").get<std::vector<int>>());
    f.add_to(lam, QtScalar::parse(term.at("coeff").get<std::string>()));
  }
  return f;
}

json velem_to_obj(const VElem& v) {
  json terms = json::array();
  for (const auto& [e, g] : v.terms()) {
    json term;
    term["y"] = e;
    term["sym"] = sym_to_obj(g);
    terms.push_back(term);
  }
  json obj;
  obj["level"] = v.level();
  obj["terms"] = terms;
  return obj;
}

}  // namespace

std::string to_json(const SymFunc& f) { return sym_to_obj(f).dump(); }

SymFunc symfunc_from_json(const std::string& text) {
  return sym_from_obj(json::parse(text));
}

std::string to_json(const DyckPath& pi) {
  json obj;
  obj["start"] = pi.start_height();
  obj["steps"] = pi.steps();
  return obj.dump();
}

DyckPath path_from_json(const std::string& text) {
  json obj = json::parse(text);
  return DyckPath::from_steps(obj.value("start", 0),
                              obj.at("steps").get<std::string>());
}

std::string to_json(const VElem& v) { return velem_to_obj(v).dump(); }

VElem velem_from_json(const std::string& text) {
  json obj = json::parse(text);
  VElem v(obj.at("level").get<int>());
  for (const auto& term : obj.at("terms"))
    v.add_to(term.at("y").get<std::vector<int>>(),
             sym_from_obj(term.at("sym")));
  return v;
}

std::string to_json(const Partition& lam) { return json(lam.parts()).dump(); }

Partition partition_from_json(const std::string& text) {
  return Partition(json::parse(text).get<std::vector<int>>());
}

std::string to_json(const Composition& alpha) {
  return json(alpha.parts()).dump();
}

Composition composition_from_json(const std::string& text) {
  return Composition(json::parse(text).get<std::vector<int>>());
}

Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size() || v <= 0)
      throw std::invalid_argument("bad composition part: " + item);
    parts.push_back(v);
  }
  return Composition(parts);
}

Partition parse_partition(const std::string& text) {
  auto parts = parse_composition(text).parts();
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  return Partition(parts);
}

}  // namespace shuffle
