#include "mvq/sim.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace mvq {

namespace {

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) {
      return fields;
    }
    start = comma + 1;
  }
}

long parse_long(const std::string& text) {
  long value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw SimError(SimErrc::MalformedTrace, "not a number: '" + text + "'");
  }
  return value;
}

/// Short printable identifiers: !, ", #, ... then two characters.
std::string vcd_id(std::size_t index) {
  constexpr std::size_t kBase = 94;
  std::string id;
  do {
    id += static_cast<char>('!' + index % kBase);
    index /= kBase;
  } while (index > 0);
  return id;
}

std::string vcd_value(SignalType type, Level level, const std::string& id) {
  if (type == SignalType::Binary) {
    return std::to_string(level) + id;
  }
  std::string bits = "b";
  bits += (level & 2) ? '1' : '0';
  bits += (level & 1) ? '1' : '0';
  return bits + " " + id;
}

std::string format_volts(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

template <typename Cell>
std::string csv_with(const Trace& trace, Cell cell) {
  std::string out = "time";
  for (const auto& s : trace.signals) {
    out += ',';
    out += s.name;
  }
  out += '\n';
  for (std::size_t step = 0; step < trace.rows.size(); ++step) {
    out += std::to_string(static_cast<long>(step) * trace.step_duration);
    for (std::size_t i = 0; i < trace.signals.size(); ++i) {
      out += ',';
      out += cell(trace.signals[i].type, trace.rows[step][i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

SimError::SimError(SimErrc code, const std::string& detail)
    : std::runtime_error(detail), code_(code) {}

Stimulus Stimulus::from_assignments(std::vector<PortSpec> ports,
                                    const std::vector<std::map<std::string, Level>>& steps,
                                    int step_duration) {
  Stimulus s{std::move(ports), {}, step_duration};
  for (const auto& step : steps) {
    if (step.size() != s.ports.size()) {
      throw SimError(SimErrc::PortMismatch, "step must assign every input port exactly once");
    }
    std::vector<Level> levels;
    for (const auto& port : s.ports) {
      const auto it = step.find(port.name);
      if (it == step.end()) {
        throw SimError(SimErrc::PortMismatch, "step does not assign " + port.name);
      }
      if (it->second >= level_count(port.type)) {
        throw SimError(SimErrc::PortMismatch, "level out of range for " + port.name);
      }
      levels.push_back(it->second);
    }
    s.steps.push_back(std::move(levels));
  }
  return s;
}

Stimulus sweep_all(const Netlist& netlist) {
  return Stimulus{netlist.inputs(), enumerate_inputs(netlist.inputs()), 1};
}

Trace run(const Netlist& netlist, const Stimulus& stimulus, std::string scope) {
  if (stimulus.ports != netlist.inputs()) {
    throw SimError(SimErrc::PortMismatch, "stimulus ports differ from netlist inputs");
  }
  Trace trace;
  trace.scope = std::move(scope);
  trace.signals = netlist.inputs();
  trace.input_count = netlist.inputs().size();
  for (auto& port : netlist.output_specs()) {
    trace.signals.push_back(std::move(port));
  }
  trace.step_duration = stimulus.step_duration;
  trace.rows.reserve(stimulus.steps.size());
  for (const auto& step : stimulus.steps) {
    auto row = step;
    const auto outputs = netlist.evaluate(step);
    row.insert(row.end(), outputs.begin(), outputs.end());
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

std::string export_csv(const Trace& trace) {
  return csv_with(trace, [](SignalType, Level level) { return std::to_string(level); });
}

Trace parse_csv(std::string_view text, const std::vector<PortSpec>& signals, int step_duration) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) {
    throw SimError(SimErrc::MalformedTrace, "missing header");
  }
  const auto header = split_csv(line);
  if (header.size() != signals.size() + 1 || header.front() != "time") {
    throw SimError(SimErrc::MalformedTrace, "header does not match signal list");
  }
  for (std::size_t i = 0; i < signals.size(); ++i) {
    if (header[i + 1] != signals[i].name) {
      throw SimError(SimErrc::MalformedTrace, "unexpected column " + header[i + 1]);
    }
  }
  Trace trace;
  trace.signals = signals;
  std::vector<long> times;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      throw SimError(SimErrc::MalformedTrace, "ragged row: " + line);
    }
    times.push_back(parse_long(fields[0]));
    std::vector<Level> row;
    for (std::size_t i = 0; i < signals.size(); ++i) {
      const long level = parse_long(fields[i + 1]);
      if (level < 0 || level >= level_count(signals[i].type)) {
        throw SimError(SimErrc::MalformedTrace, "level out of range in " + signals[i].name);
      }
      row.push_back(static_cast<Level>(level));
    }
    trace.rows.push_back(std::move(row));
  }
  trace.step_duration = times.size() >= 2 ? static_cast<int>(times[1]) : step_duration;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] != static_cast<long>(i) * trace.step_duration) {
      throw SimError(SimErrc::MalformedTrace, "non-uniform time column");
    }
  }
  return trace;
}

std::string export_vcd(const Trace& trace) {
  std::ostringstream out;
  out << "$version mvq $end\n";
  out << "$timescale 1ns $end\n";
  out << "$scope module " << trace.scope << " $end\n";
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < trace.signals.size(); ++i) {
    ids.push_back(vcd_id(i));
    const auto& s = trace.signals[i];
    out << "$var wire " << (s.type == SignalType::Binary ? 1 : 2) << ' ' << ids.back() << ' '
        << s.name << " $end\n";
  }
  out << "$upscope $end\n";
  out << "$enddefinitions $end\n";

  for (std::size_t step = 0; step < trace.rows.size(); ++step) {
    const auto& row = trace.rows[step];
    if (step == 0) {
      out << "#0\n$dumpvars\n";
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << vcd_value(trace.signals[i].type, row[i], ids[i]) << '\n';
      }
      out << "$end\n";
      continue;
    }
    const auto& prev = trace.rows[step - 1];
    bool stamped = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == prev[i]) {
        continue;
      }
      if (!stamped) {
        out << '#' << static_cast<long>(step) * trace.step_duration << '\n';
        stamped = true;
      }
      out << vcd_value(trace.signals[i].type, row[i], ids[i]) << '\n';
    }
  }
  return out.str();
}

void VoltageMap::validate() const {
  for (std::size_t i = 1; i < quaternary.size(); ++i) {
    if (!(quaternary[i] > quaternary[i - 1])) {
      throw SimError(SimErrc::InvalidVoltageMap, "quaternary voltages must strictly increase");
    }
  }
  if (!(binary[1] > binary[0])) {
    throw SimError(SimErrc::InvalidVoltageMap, "binary voltages must strictly increase");
  }
}

VoltageMap voltage_map_from_json(const nlohmann::json& doc) {
  VoltageMap vmap;
  try {
    if (doc.contains("quaternary")) {
      vmap.quaternary = doc.at("quaternary").get<std::array<double, 4>>();
    }
    if (doc.contains("binary")) {
      vmap.binary = doc.at("binary").get<std::array<double, 2>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw SimError(SimErrc::InvalidVoltageMap, e.what());
  }
  vmap.validate();
  return vmap;
}

std::string voltage_view(const Trace& trace, const VoltageMap& vmap) {
  vmap.validate();
  return csv_with(trace, [&](SignalType type, Level level) {
    return format_volts(type == SignalType::Binary ? vmap.binary.at(level)
                                                   : vmap.quaternary.at(level));
  });
}

}  // namespace mvq
