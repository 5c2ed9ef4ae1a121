// wsnet -- web service network extraction and analysis
// SPDX-License-Identifier: Apache-2.0
#include "wsnet/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wsnet {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string trimmed(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_file(const fs::path& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

const json& expect(const json& obj, const char* field, const char* where) {
  auto it = obj.find(field);
  if (it == obj.end())
    throw ParseError(std::string(where) + " lacks required field '" + field +
                     "'");
  return *it;
}

std::vector<Parameter> read_parameter_list(const json& arr, Direction dir,
                                           const std::string& op_id) {
  if (!arr.is_array()) throw ParseError("parameter list must be an array");
  std::vector<Parameter> params;
  for (const auto& item : arr) {
    if (!item.is_object())
      throw ParseError("parameter entries must be objects");
    Parameter p;
    p.name = expect(item, "name", "parameter").get<std::string>();
    if (auto it = item.find("concept"); it != item.end() && !it->is_null())
      p.concept_id = it->get<std::string>();
    p.direction = dir;
    p.owner = op_id;
    params.push_back(std::move(p));
  }
  return params;
}

/// Collapses duplicate (name, concept) pairs and orders by key.
void canonicalize_side(std::vector<Parameter>& params) {
  std::map<std::pair<std::string, std::string>, Parameter> by_key;
  for (auto& p : params) by_key.emplace(p.key(), std::move(p));
  params.clear();
  for (auto& [k, p] : by_key) params.push_back(std::move(p));
}

void validate_and_canonicalize(ServiceCollection& coll) {
  std::set<std::string> service_ids;
  std::set<std::string> operation_ids;

  for (auto& svc : coll.services) {
    if (trimmed(svc.id).empty())
      throw ValidationError("service with empty id");
    if (!service_ids.insert(svc.id).second)
      throw ValidationError("duplicate service id: " + svc.id);
    if (svc.operations.empty())
      throw ValidationError("service '" + svc.id + "' has no operations");

    for (auto& op : svc.operations) {
      if (trimmed(op.id).empty())
        throw ValidationError("operation with empty id in service '" + svc.id +
                              "'");
      if (!operation_ids.insert(op.id).second)
        throw ValidationError("duplicate operation id: " + op.id);
      op.service = svc.id;
      for (auto* side : {&op.inputs, &op.outputs}) {
        for (auto& p : *side) {
          if (trimmed(p.name).empty())
            throw ValidationError("empty parameter name in operation '" +
                                  op.id + "'");
          p.owner = op.id;
        }
        canonicalize_side(*side);
      }
      for (auto& p : op.inputs) p.direction = Direction::input;
      for (auto& p : op.outputs) p.direction = Direction::output;
    }
    std::sort(svc.operations.begin(), svc.operations.end(),
              [](const Operation& a, const Operation& b) { return a.id < b.id; });
  }
  std::sort(coll.services.begin(), coll.services.end(),
            [](const Service& a, const Service& b) { return a.id < b.id; });
}

void check_concepts_resolve(const ServiceCollection& coll,
                            const Ontology& ontology) {
  for (const auto& svc : coll.services)
    for (const auto& op : svc.operations)
      for (const auto* side : {&op.inputs, &op.outputs})
        for (const auto& p : *side)
          if (p.concept_id && !ontology.declares(*p.concept_id))
            throw ValidationError("dangling concept '" + *p.concept_id +
                                  "' on parameter '" + p.name +
                                  "' of operation '" + op.id + "'");
}

} // namespace

ServiceCollection make_collection(std::vector<Service> services,
                                  std::vector<std::string> ontology_files) {
  ServiceCollection coll;
  coll.services = std::move(services);
  coll.ontology_files = std::move(ontology_files);
  validate_and_canonicalize(coll);
  return coll;
}

ServiceCollection load_manifest(const fs::path& path) {
  const json doc = parse_json_file(path);
  if (!doc.is_object()) throw ParseError(path.string() + ": not a JSON object");

  ServiceCollection coll;
  const json& services = expect(doc, "services", "manifest");
  if (!services.is_array())
    throw ParseError(path.string() + ": 'services' must be an array");

  for (const auto& svc_json : services) {
    Service svc;
    svc.id = expect(svc_json, "id", "service").get<std::string>();
    const json& ops = expect(svc_json, "operations", "service");
    if (!ops.is_array())
      throw ParseError("service '" + svc.id + "': 'operations' must be an array");
    for (const auto& op_json : ops) {
      Operation op;
      op.id = expect(op_json, "id", "operation").get<std::string>();
      op.service = svc.id;
      if (auto it = op_json.find("inputs"); it != op_json.end())
        op.inputs = read_parameter_list(*it, Direction::input, op.id);
      if (auto it = op_json.find("outputs"); it != op_json.end())
        op.outputs = read_parameter_list(*it, Direction::output, op.id);
      svc.operations.push_back(std::move(op));
    }
    coll.services.push_back(std::move(svc));
  }

  if (auto it = doc.find("ontologyFiles"); it != doc.end()) {
    if (!it->is_array())
      throw ParseError(path.string() + ": 'ontologyFiles' must be an array");
    const fs::path base = fs::absolute(path).parent_path();
    for (const auto& entry : *it) {
      fs::path p = entry.get<std::string>();
      if (p.is_relative()) p = base / p;
      p = p.lexically_normal();
      if (!fs::exists(p))
        throw ValidationError("referenced ontology file does not exist: " +
                              p.string());
      coll.ontology_files.push_back(p.string());
    }
  }

  validate_and_canonicalize(coll);

  if (!coll.ontology_files.empty()) {
    std::vector<fs::path> paths(coll.ontology_files.begin(),
                                coll.ontology_files.end());
    check_concepts_resolve(coll, load_ontology(paths));
  }
  return coll;
}

std::string manifest_json(const ServiceCollection& coll) {
  json doc;
  doc["services"] = json::array();
  for (const auto& svc : coll.services) {
    json svc_json;
    svc_json["id"] = svc.id;
    svc_json["operations"] = json::array();
    for (const auto& op : svc.operations) {
      json op_json;
      op_json["id"] = op.id;
      auto dump_side = [](const std::vector<Parameter>& side) {
        json arr = json::array();
        for (const auto& p : side) {
          json pj;
          pj["name"] = p.name;
          if (p.concept_id) pj["concept"] = *p.concept_id;
          arr.push_back(std::move(pj));
        }
        return arr;
      };
      op_json["inputs"] = dump_side(op.inputs);
      op_json["outputs"] = dump_side(op.outputs);
      svc_json["operations"].push_back(std::move(op_json));
    }
    doc["services"].push_back(std::move(svc_json));
  }
  if (!coll.ontology_files.empty()) doc["ontologyFiles"] = coll.ontology_files;
  return doc.dump(2) + "\n";
}

void save_manifest(const ServiceCollection& coll, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << manifest_json(coll);
}

Ontology load_ontology(const std::vector<fs::path>& paths) {
  std::set<std::string> concepts;
  std::vector<std::pair<std::string, std::string>> edges;

  for (const auto& path : paths) {
    const json doc = parse_json_file(path);
    if (!doc.is_object())
      throw ParseError(path.string() + ": not a JSON object");
    const std::string iri = expect(doc, "iri", "ontology").get<std::string>();
    auto resolve = [&](const std::string& name) {
      return name.find('#') != std::string::npos ? name : iri + "#" + name;
    };
    const json& decl = expect(doc, "concepts", "ontology");
    if (!decl.is_array())
      throw ParseError(path.string() + ": 'concepts' must be an array");
    for (const auto& c : decl) concepts.insert(resolve(c.get<std::string>()));

    if (auto it = doc.find("subClassOf"); it != doc.end()) {
      if (!it->is_array())
        throw ParseError(path.string() + ": 'subClassOf' must be an array");
      for (const auto& pair : *it) {
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError(path.string() +
                           ": subClassOf entries must be [child, parent]");
        edges.emplace_back(resolve(pair[0].get<std::string>()),
                           resolve(pair[1].get<std::string>()));
      }
    }
  }
  return Ontology(std::move(concepts), std::move(edges));
}

} // namespace wsnet
