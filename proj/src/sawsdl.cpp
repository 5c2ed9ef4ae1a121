// wsnet -- web service network extraction and analysis
// SPDX-License-Identifier: Apache-2.0
//
// Minimal SAWSDL-style reader: enough of WSDL 1.1 to recover one service,
// its operations, and the named message parts (with optional modelReference
// concept annotations). Everything else is either declared skippable or
// rejected with the element path.
#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <map>
#include <optional>
#include <sstream>

#include "wsnet/ingest.hpp"

namespace wsnet {

namespace {

using boost::property_tree::ptree;

std::string local_name(const std::string& qname) {
  auto pos = qname.rfind(':');
  return pos == std::string::npos ? qname : qname.substr(pos + 1);
}

bool is_meta_key(const std::string& key) {
  return key == "<xmlattr>" || key == "<xmlcomment>" || key == "<xmltext>";
}

std::optional<std::string> attribute(const ptree& element,
                                     const std::string& local) {
  if (auto attrs = element.get_child_optional("<xmlattr>")) {
    for (const auto& [key, value] : *attrs)
      if (local_name(key) == local) return value.data();
  }
  return std::nullopt;
}

std::string require_attribute(const ptree& element, const std::string& local,
                              const std::string& path) {
  if (auto v = attribute(element, local)) return *v;
  throw UnsupportedFeature(path + ": missing '" + local + "' attribute");
}

struct MessagePart {
  std::string name;
  std::optional<std::string> concept_id;
};

// Sections that never contribute to the extracted service/operation/parameter
// model.
bool skippable_in_definitions(const std::string& local) {
  return local == "types" || local == "binding" || local == "documentation" ||
         local == "import";
}

} // namespace

Service load_sawsdl_subset(const std::filesystem::path& path,
                           std::vector<std::string>* warnings) {
  ptree doc;
  try {
    boost::property_tree::read_xml(path.string(), doc,
                                   boost::property_tree::xml_parser::no_comments);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }

  const ptree* definitions = nullptr;
  for (const auto& [key, child] : doc) {
    if (is_meta_key(key)) continue;
    if (local_name(key) != "definitions")
      throw UnsupportedFeature("/" + key + ": expected a definitions root");
    if (definitions)
      throw UnsupportedFeature("/: multiple definitions roots");
    definitions = &child;
  }
  if (!definitions) throw ParseError(path.string() + ": no root element");

  std::map<std::string, std::vector<MessagePart>> messages;
  std::vector<const ptree*> port_types;
  std::vector<const ptree*> services;

  for (const auto& [key, child] : *definitions) {
    if (is_meta_key(key)) continue;
    const std::string local = local_name(key);
    if (local == "message") {
      const std::string msg_name =
          require_attribute(child, "name", "definitions/message");
      std::vector<MessagePart> parts;
      int part_index = 0;
      for (const auto& [part_key, part] : child) {
        if (is_meta_key(part_key)) continue;
        const std::string part_local = local_name(part_key);
        if (part_local == "documentation") continue;
        const std::string part_path = "definitions/message[" + msg_name +
                                      "]/" + part_local + "[" +
                                      std::to_string(++part_index) + "]";
        if (part_local != "part")
          throw UnsupportedFeature(part_path + ": unexpected element");
        MessagePart mp;
        mp.name = require_attribute(part, "name", part_path);
        if (auto ref = attribute(part, "modelReference")) {
          std::istringstream iris(*ref);
          std::string first, second;
          iris >> first >> second;
          if (!second.empty() && warnings)
            warnings->push_back(part_path +
                                ": multiple modelReference IRIs, taking " +
                                first);
          if (!first.empty()) mp.concept_id = first;
        }
        parts.push_back(std::move(mp));
      }
      messages[msg_name] = std::move(parts);
    } else if (local == "portType") {
      port_types.push_back(&child);
    } else if (local == "service") {
      services.push_back(&child);
    } else if (!skippable_in_definitions(local)) {
      throw UnsupportedFeature("definitions/" + key + ": outside the subset");
    }
  }

  if (services.empty())
    throw UnsupportedFeature("definitions: no service element");
  if (services.size() > 1)
    throw UnsupportedFeature("definitions: " + std::to_string(services.size()) +
                             " service elements (subset supports exactly one)");
  if (port_types.empty())
    throw UnsupportedFeature("definitions: no portType element");

  Service service;
  service.id = require_attribute(*services.front(), "name", "definitions/service");

  auto parts_for = [&](const ptree& io_element,
                       const std::string& io_path) -> const std::vector<MessagePart>& {
    const std::string qname = require_attribute(io_element, "message", io_path);
    const std::string msg_name = local_name(qname);
    auto it = messages.find(msg_name);
    if (it == messages.end())
      throw UnsupportedFeature(io_path + ": message '" + qname +
                               "' is not defined in this document");
    return it->second;
  };

  std::map<std::string, bool> seen_op_names;
  for (const ptree* port_type : port_types) {
    const std::string pt_name =
        attribute(*port_type, "name").value_or("(unnamed)");
    for (const auto& [key, op_el] : *port_type) {
      if (is_meta_key(key)) continue;
      const std::string local = local_name(key);
      if (local == "documentation") continue;
      const std::string pt_path = "definitions/portType[" + pt_name + "]";
      if (local != "operation")
        throw UnsupportedFeature(pt_path + "/" + key + ": outside the subset");

      const std::string op_name =
          require_attribute(op_el, "name", pt_path + "/operation");
      const std::string op_path = pt_path + "/operation[" + op_name + "]";
      if (seen_op_names[op_name])
        throw UnsupportedFeature(op_path + ": duplicate operation name");
      seen_op_names[op_name] = true;

      Operation op;
      op.id = service.id + "." + op_name;
      op.service = service.id;

      const ptree* input = nullptr;
      const ptree* output = nullptr;
      for (const auto& [io_key, io_el] : op_el) {
        if (is_meta_key(io_key)) continue;
        const std::string io_local = local_name(io_key);
        if (io_local == "documentation" || io_local == "fault") continue;
        if (io_local == "input") {
          if (input)
            throw UnsupportedFeature(op_path + ": multiple input elements");
          input = &io_el;
        } else if (io_local == "output") {
          if (output)
            throw UnsupportedFeature(op_path + ": multiple output elements");
          output = &io_el;
        } else {
          throw UnsupportedFeature(op_path + "/" + io_key +
                                   ": outside the subset");
        }
      }

      auto fill = [&](const ptree* io_el, Direction dir, const char* io_name,
                      std::vector<Parameter>& side) {
        if (!io_el) return;
        for (const auto& mp : parts_for(*io_el, op_path + "/" + io_name)) {
          Parameter p;
          p.name = mp.name;
          p.concept_id = mp.concept_id;
          p.direction = dir;
          p.owner = op.id;
          side.push_back(std::move(p));
        }
      };
      fill(input, Direction::input, "input", op.inputs);
      fill(output, Direction::output, "output", op.outputs);
      service.operations.push_back(std::move(op));
    }
  }

  if (service.operations.empty())
    throw UnsupportedFeature("definitions: no operations found");
  return service;
}

} // namespace wsnet
