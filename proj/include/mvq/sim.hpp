#pragma once

// Exhaustive stimulus sweeps and waveform export (CSV, VCD).

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mvq/netlist.hpp"

namespace mvq {

enum class SimErrc { PortMismatch, MalformedTrace, InvalidVoltageMap };

class SimError : public std::runtime_error {
public:
  SimError(SimErrc code, const std::string& detail);
  [[nodiscard]] SimErrc code() const { return code_; }

private:
  SimErrc code_;
};

/// Input levels per step, positional over `ports`.
struct Stimulus {
  std::vector<PortSpec> ports;
  std::vector<std::vector<Level>> steps;
  int step_duration = 1;

  static Stimulus from_assignments(std::vector<PortSpec> ports,
                                   const std::vector<std::map<std::string, Level>>& steps,
                                   int step_duration = 1);
};

/// One row per step; columns are the input ports followed by the output ports.
struct Trace {
  std::string scope = "top";
  std::vector<PortSpec> signals;
  std::size_t input_count = 0;
  std::vector<std::vector<Level>> rows;
  int step_duration = 1;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Every input combination once, first-declared port slowest-varying.
[[nodiscard]] Stimulus sweep_all(const Netlist& netlist);

/// Evaluates each step independently.
[[nodiscard]] Trace run(const Netlist& netlist, const Stimulus& stimulus,
                        std::string scope = "top");

/// Header `time,<names...>`, then one row per step with time = index * duration.
[[nodiscard]] std::string export_csv(const Trace& trace);

/// Inverse of export_csv. `signals` supplies the signal types, which the CSV
/// does not carry; `step_duration` is used when there are fewer than two rows.
[[nodiscard]] Trace parse_csv(std::string_view text, const std::vector<PortSpec>& signals,
                              int step_duration = 1);

/// Quaternary signals are dumped as 2-bit vectors in the natural encoding.
[[nodiscard]] std::string export_vcd(const Trace& trace);

struct VoltageMap {
  std::array<double, 4> quaternary{0.0, 1.1, 2.2, 3.3};
  std::array<double, 2> binary{0.0, 3.3};

  /// Throws SimError unless both maps are strictly increasing.
  void validate() const;
};

/// {"quaternary": [v0, v1, v2, v3], "binary": [v0, v1]}; missing keys keep defaults.
[[nodiscard]] VoltageMap voltage_map_from_json(const nlohmann::json& doc);

/// Same layout as export_csv with levels replaced by voltages (one decimal).
[[nodiscard]] std::string voltage_view(const Trace& trace, const VoltageMap& vmap);

}  // namespace mvq
