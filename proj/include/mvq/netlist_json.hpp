#pragma once

// JSON interchange for netlists and cost tables.
//
//   {"inputs":  [{"name": "x1", "type": "bin"}, ...],
//    "outputs": [{"name": "a1", "type": "bin", "net": 7}, ...],
//    "gates":   [{"id": 0, "kind": "XOR2", "inputs": [0, 2], "output": 4}, ...]}
//
// Input port i drives net i. QCONST gates carry an extra "level" field.

#include <string>
#include <string_view>

#include <json.hpp>

#include "mvq/netlist.hpp"

namespace mvq {

[[nodiscard]] nlohmann::json to_json(const Netlist& netlist);
[[nodiscard]] std::string export_json(const Netlist& netlist);

/// Builds and validates a netlist. Gates may appear in any order.
[[nodiscard]] Netlist netlist_from_json(const nlohmann::json& doc);
[[nodiscard]] Netlist import_json(std::string_view text);

/// {"XOR2": 10, "AND2": 6, ...}
[[nodiscard]] CostTable cost_table_from_json(const nlohmann::json& doc);
[[nodiscard]] nlohmann::json to_json(const CostTable& costs);

}  // namespace mvq
