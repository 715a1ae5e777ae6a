#include "ortholog/spec_io.hpp"

#include <algorithm>
#include <fstream>

#include "ortholog/error.hpp"

namespace ortholog {

namespace {

using nlohmann::json;

std::vector<std::pair<std::string, std::string>> read_pairs(const json& arr, const char* key) {
  if (!arr.is_array()) throw Error(ErrorKind::SpecFormat, std::string("\"") + key + "\" must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw Error(ErrorKind::SpecFormat,
                  std::string("\"") + key + "\" entries must be 2-arrays of strings, got " + item.dump());
    }
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

}  // namespace

LatticeSpec parse_lattice_spec(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::SpecFormat, "lattice spec must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "elements" && key != "leq" && key != "covers" && key != "ortho") {
      throw Error(ErrorKind::SpecFormat, "unknown key \"" + key + "\"");
    }
  }
  LatticeSpec spec;
  if (!doc.contains("name") || !doc["name"].is_string()) {
    throw Error(ErrorKind::SpecFormat, "\"name\" must be a string");
  }
  spec.name = doc["name"].get<std::string>();

  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw Error(ErrorKind::SpecFormat, "\"elements\" must be an array of strings");
  }
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw Error(ErrorKind::SpecFormat, "\"elements\" must be an array of strings");
    spec.elements.push_back(e.get<std::string>());
  }

  const bool has_leq = doc.contains("leq");
  const bool has_covers = doc.contains("covers");
  if (has_leq == has_covers) {
    throw Error(ErrorKind::SpecFormat, "exactly one of \"leq\" or \"covers\" is required");
  }
  spec.relation_is_covers = has_covers;
  spec.relation = read_pairs(has_covers ? doc["covers"] : doc["leq"], has_covers ? "covers" : "leq");

  if (!doc.contains("ortho") || !doc["ortho"].is_object()) {
    throw Error(ErrorKind::SpecFormat, "\"ortho\" must be an object of label -> label");
  }
  // Declared element order keeps the pair list deterministic regardless of
  // the JSON object's key order.
  for (const auto& label : spec.elements) {
    if (!doc["ortho"].contains(label)) continue;
    const auto& value = doc["ortho"][label];
    if (!value.is_string()) throw Error(ErrorKind::SpecFormat, "\"ortho\" values must be strings");
    spec.ortho.emplace_back(label, value.get<std::string>());
  }
  for (const auto& [key, value] : doc["ortho"].items()) {
    if (std::find(spec.elements.begin(), spec.elements.end(), key) == spec.elements.end()) {
      throw Error(ErrorKind::UnknownLabel, "ortho key '" + key + "' is not a declared element");
    }
  }
  return spec;
}

LatticeSpec read_lattice_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SpecFormat, "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SpecFormat, path.string() + ": " + e.what());
  }
  try {
    return parse_lattice_spec(doc);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail());
  }
}

OrthoLattice load_lattice(const std::filesystem::path& path, const ValidateOptions& options) {
  return validate(read_lattice_spec(path), options);
}

json to_json(const OrthoLattice& l) {
  json doc;
  doc["name"] = l.name();
  doc["elements"] = l.labels();
  json covers = json::array();
  for (const auto& [lo, hi] : l.covers()) covers.push_back({l.label(lo), l.label(hi)});
  doc["covers"] = covers;
  json ortho = json::object();
  for (Elem x = 0; x < l.size(); ++x) ortho[l.label(x)] = l.label(l.ortho(x));
  doc["ortho"] = ortho;
  return doc;
}

}  // namespace ortholog
