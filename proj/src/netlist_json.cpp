#include "mvq/netlist_json.hpp"

#include <map>
#include <set>

namespace mvq {

using nlohmann::json;

namespace {

SignalType parse_type(const json& value) {
  const auto text = value.get<std::string>();
  if (text == "bin") {
    return SignalType::Binary;
  }
  if (text == "quat") {
    return SignalType::Quaternary;
  }
  throw NetlistError(NetlistErrc::MalformedDocument, "unknown signal type '" + text + "'");
}

std::vector<PortSpec> parse_ports(const json& doc, const char* key) {
  std::vector<PortSpec> ports;
  for (const auto& entry : doc.at(key)) {
    ports.push_back({entry.at("name").get<std::string>(), parse_type(entry.at("type"))});
  }
  return ports;
}

struct GateRecord {
  GateKind kind;
  Level level;
  std::vector<std::int64_t> inputs;
  std::int64_t output;
};

}  // namespace

json to_json(const Netlist& netlist) {
  json doc;
  doc["inputs"] = json::array();
  for (const auto& port : netlist.inputs()) {
    doc["inputs"].push_back({{"name", port.name}, {"type", to_string(port.type)}});
  }
  doc["outputs"] = json::array();
  for (const auto& port : netlist.outputs()) {
    json entry{{"name", port.name}, {"type", to_string(port.type)}};
    entry["net"] = port.net ? json(port.net->index) : json(nullptr);
    doc["outputs"].push_back(std::move(entry));
  }
  doc["gates"] = json::array();
  std::uint32_t id = 0;
  for (const auto& gate : netlist.gates()) {
    json entry{{"id", id++}, {"kind", to_string(gate.kind)}};
    entry["inputs"] = json::array();
    for (NetId in : gate.inputs) {
      entry["inputs"].push_back(in.index);
    }
    entry["output"] = gate.output.index;
    if (gate.kind == GateKind::QConst) {
      entry["level"] = gate.param;
    }
    doc["gates"].push_back(std::move(entry));
  }
  return doc;
}

std::string export_json(const Netlist& netlist) { return to_json(netlist).dump(2) + "\n"; }

Netlist netlist_from_json(const json& doc) {
  try {
    Netlist netlist(parse_ports(doc, "inputs"), parse_ports(doc, "outputs"));

    std::map<std::int64_t, NetId> nets;
    for (std::uint32_t i = 0; i < netlist.inputs().size(); ++i) {
      nets.emplace(i, NetId{i});
    }

    std::vector<GateRecord> pending;
    std::set<std::int64_t> declared;
    for (const auto& entry : doc.at("gates")) {
      const auto kind_name = entry.at("kind").get<std::string>();
      const auto kind = gate_kind_from_string(kind_name);
      if (!kind) {
        throw NetlistError(NetlistErrc::MalformedDocument, "unknown gate kind '" + kind_name + "'");
      }
      GateRecord record{*kind, 0, entry.at("inputs").get<std::vector<std::int64_t>>(),
                        entry.at("output").get<std::int64_t>()};
      if (*kind == GateKind::QConst) {
        record.level = entry.at("level").get<Level>();
      }
      if (nets.contains(record.output) || !declared.insert(record.output).second) {
        throw NetlistError(NetlistErrc::MalformedDocument,
                           "net " + std::to_string(record.output) + " has more than one driver");
      }
      pending.push_back(std::move(record));
    }

    // Place gates once all their inputs exist.
    while (!pending.empty()) {
      std::vector<GateRecord> blocked;
      for (auto& record : pending) {
        std::vector<NetId> ins;
        bool ready = true;
        for (auto id : record.inputs) {
          const auto it = nets.find(id);
          if (it == nets.end()) {
            if (!declared.contains(id)) {
              throw NetlistError(NetlistErrc::UnknownNet, "n" + std::to_string(id));
            }
            ready = false;
            break;
          }
          ins.push_back(it->second);
        }
        if (ready) {
          nets.emplace(record.output, netlist.add_gate(record.kind, ins, record.level));
        } else {
          blocked.push_back(std::move(record));
        }
      }
      if (blocked.size() == pending.size()) {
        throw NetlistError(NetlistErrc::CombinationalCycle,
                           "cycle through net n" + std::to_string(blocked.front().output));
      }
      pending = std::move(blocked);
    }

    for (const auto& entry : doc.at("outputs")) {
      const auto& net = entry.at("net");
      if (net.is_null()) {
        continue;
      }
      const auto it = nets.find(net.get<std::int64_t>());
      if (it == nets.end()) {
        throw NetlistError(NetlistErrc::UnknownNet, "n" + std::to_string(net.get<std::int64_t>()));
      }
      netlist.connect_output(entry.at("name").get<std::string>(), it->second);
    }
    netlist.validate();
    return netlist;
  } catch (const json::exception& e) {
    throw NetlistError(NetlistErrc::MalformedDocument, e.what());
  }
}

Netlist import_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw NetlistError(NetlistErrc::MalformedDocument, e.what());
  }
  return netlist_from_json(doc);
}

CostTable cost_table_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw NetlistError(NetlistErrc::MalformedDocument, "cost table must be a JSON object");
  }
  CostTable costs;
  for (const auto& [name, value] : doc.items()) {
    const auto kind = gate_kind_from_string(name);
    if (!kind) {
      throw NetlistError(NetlistErrc::MalformedDocument, "unknown gate kind '" + name + "'");
    }
    if (!value.is_number_integer() || value.get<int>() < 0) {
      throw NetlistError(NetlistErrc::MalformedDocument,
                         "cost for " + name + " must be a non-negative integer");
    }
    costs[*kind] = value.get<int>();
  }
  return costs;
}

json to_json(const CostTable& costs) {
  json doc = json::object();
  for (const auto& [kind, cost] : costs) {
    doc[std::string(to_string(kind))] = cost;
  }
  return doc;
}

}  // namespace mvq
