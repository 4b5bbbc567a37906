#include "mvq/netlist.hpp"

#include <algorithm>
#include <set>

namespace mvq {

namespace {

constexpr SignalType B = SignalType::Binary;
constexpr SignalType Q = SignalType::Quaternary;

constexpr std::array<SignalType, 0> kNone{};
constexpr std::array<SignalType, 1> kB1{B};
constexpr std::array<SignalType, 2> kB2{B, B};
constexpr std::array<SignalType, 3> kB3{B, B, B};
constexpr std::array<SignalType, 4> kB4{B, B, B, B};
constexpr std::array<SignalType, 1> kQ1{Q};
constexpr std::array<SignalType, 5> kQ5{Q, Q, Q, Q, Q};

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::span<const SignalType> inputs;
  SignalType output;
};

constexpr std::array<KindInfo, 20> kKindInfo = {{
    {GateKind::Not, "NOT", kB1, B},
    {GateKind::And2, "AND2", kB2, B},
    {GateKind::And3, "AND3", kB3, B},
    {GateKind::And4, "AND4", kB4, B},
    {GateKind::Or2, "OR2", kB2, B},
    {GateKind::Or3, "OR3", kB3, B},
    {GateKind::Or4, "OR4", kB4, B},
    {GateKind::Xor2, "XOR2", kB2, B},
    {GateKind::Nand2, "NAND2", kB2, B},
    {GateKind::Nor2, "NOR2", kB2, B},
    {GateKind::AndN2, "ANDN2", kB2, B},
    {GateKind::Const0, "CONST0", kNone, B},
    {GateKind::Const1, "CONST1", kNone, B},
    {GateKind::BMux2, "BMUX2", kB3, B},
    {GateKind::Dlc1, "DLC1", kQ1, B},
    {GateKind::Dlc2, "DLC2", kQ1, B},
    {GateKind::Dlc3, "DLC3", kQ1, B},
    {GateKind::B2Q, "B2Q", kB2, Q},
    {GateKind::QConst, "QCONST", kNone, Q},
    {GateKind::QMux4, "QMUX4", kQ5, Q},
}};

const KindInfo& info(GateKind kind) {
  return kKindInfo.at(static_cast<std::size_t>(kind));
}

std::string net_name(NetId net) { return "n" + std::to_string(net.index); }

}  // namespace

std::string_view to_string(SignalType type) {
  return type == SignalType::Binary ? "bin" : "quat";
}

GateSignature signature(GateKind kind) {
  const auto& i = info(kind);
  return {i.inputs, i.output};
}

std::string_view to_string(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_string(std::string_view name) {
  for (const auto& i : kKindInfo) {
    if (i.name == name) {
      return i.kind;
    }
  }
  return std::nullopt;
}

Level eval_gate(GateKind kind, std::span<const Level> in, Level param) {
  auto all = [&] { return std::all_of(in.begin(), in.end(), [](Level v) { return v != 0; }); };
  auto any = [&] { return std::any_of(in.begin(), in.end(), [](Level v) { return v != 0; }); };
  switch (kind) {
    case GateKind::Not: return in[0] ? 0 : 1;
    case GateKind::And2:
    case GateKind::And3:
    case GateKind::And4: return all() ? 1 : 0;
    case GateKind::Or2:
    case GateKind::Or3:
    case GateKind::Or4: return any() ? 1 : 0;
    case GateKind::Xor2: return (in[0] != 0) != (in[1] != 0) ? 1 : 0;
    case GateKind::Nand2: return all() ? 0 : 1;
    case GateKind::Nor2: return any() ? 0 : 1;
    case GateKind::AndN2: return (!in[0] && in[1]) ? 1 : 0;
    case GateKind::Const0: return 0;
    case GateKind::Const1: return 1;
    case GateKind::BMux2: return in[0] ? in[1] : in[2];
    case GateKind::Dlc1: return in[0] < 1 ? 1 : 0;
    case GateKind::Dlc2: return in[0] < 2 ? 1 : 0;
    case GateKind::Dlc3: return in[0] < 3 ? 1 : 0;
    case GateKind::B2Q: return static_cast<Level>(2 * in[0] + in[1]);
    case GateKind::QConst: return param;
    case GateKind::QMux4: return in[1 + in[0]];
  }
  return 0;
}

std::string_view to_string(NetlistErrc code) {
  switch (code) {
    case NetlistErrc::DuplicatePortName: return "DuplicatePortName";
    case NetlistErrc::UnknownPort: return "UnknownPort";
    case NetlistErrc::ArityMismatch: return "ArityMismatch";
    case NetlistErrc::TypeMismatch: return "TypeMismatch";
    case NetlistErrc::UnknownNet: return "UnknownNet";
    case NetlistErrc::CombinationalCycle: return "CombinationalCycle";
    case NetlistErrc::UndrivenOutput: return "UndrivenOutput";
    case NetlistErrc::NotValidated: return "NotValidated";
    case NetlistErrc::MissingAssignment: return "MissingAssignment";
    case NetlistErrc::LevelOutOfRange: return "LevelOutOfRange";
    case NetlistErrc::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case NetlistErrc::MissingCostEntry: return "MissingCostEntry";
    case NetlistErrc::MalformedDocument: return "MalformedDocument";
    case NetlistErrc::PortShapeMismatch: return "PortShapeMismatch";
  }
  return "?";
}

NetlistError::NetlistError(NetlistErrc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

// ---------------------------------------------------------------------------

Netlist::Netlist(std::vector<PortSpec> inputs, std::vector<PortSpec> outputs)
    : inputs_(std::move(inputs)) {
  std::set<std::string, std::less<>> names;
  auto claim = [&](const std::string& name) {
    if (!names.insert(name).second) {
      throw NetlistError(NetlistErrc::DuplicatePortName, name);
    }
  };
  for (const auto& port : inputs_) {
    claim(port.name);
    new_net(port.type);
  }
  for (auto& port : outputs) {
    claim(port.name);
    outputs_.push_back({std::move(port.name), port.type, std::nullopt});
  }
}

NetId Netlist::new_net(SignalType type) {
  net_types_.push_back(type);
  net_driver_.push_back(std::nullopt);
  return NetId{static_cast<std::uint32_t>(net_types_.size() - 1)};
}

void Netlist::check_net(NetId net) const {
  if (net.index >= net_types_.size()) {
    throw NetlistError(NetlistErrc::UnknownNet, net_name(net));
  }
}

SignalType Netlist::net_type(NetId net) const {
  check_net(net);
  return net_types_[net.index];
}

NetId Netlist::input_net(std::string_view name) const {
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (inputs_[i].name == name) {
      return NetId{static_cast<std::uint32_t>(i)};
    }
  }
  throw NetlistError(NetlistErrc::UnknownPort, std::string(name));
}

NetId Netlist::add_gate(GateKind kind, std::span<const NetId> inputs, Level param) {
  const auto sig = signature(kind);
  if (inputs.size() != sig.inputs.size()) {
    throw NetlistError(NetlistErrc::ArityMismatch,
                       std::string(to_string(kind)) + " expects " +
                           std::to_string(sig.inputs.size()) + " inputs, got " +
                           std::to_string(inputs.size()));
  }
  for (std::size_t pin = 0; pin < inputs.size(); ++pin) {
    if (net_type(inputs[pin]) != sig.inputs[pin]) {
      throw NetlistError(NetlistErrc::TypeMismatch,
                         std::string(to_string(kind)) + " pin " + std::to_string(pin) +
                             " expects " + std::string(to_string(sig.inputs[pin])) + ", got " +
                             net_name(inputs[pin]));
    }
  }
  if (kind == GateKind::QConst && param > 3) {
    throw NetlistError(NetlistErrc::LevelOutOfRange, "QCONST level " + std::to_string(param));
  }
  invalidate();
  const NetId out = new_net(sig.output);
  net_driver_[out.index] = static_cast<std::uint32_t>(gates_.size());
  gates_.push_back(Gate{kind, kind == GateKind::QConst ? param : Level{0},
                        std::vector<NetId>(inputs.begin(), inputs.end()), out});
  return out;
}

void Netlist::connect_output(std::string_view name, NetId net) {
  for (auto& port : outputs_) {
    if (port.name == name) {
      if (net_type(net) != port.type) {
        throw NetlistError(NetlistErrc::TypeMismatch,
                           "output " + port.name + " is " + std::string(to_string(port.type)));
      }
      port.net = net;
      invalidate();
      return;
    }
  }
  throw NetlistError(NetlistErrc::UnknownPort, std::string(name));
}

void Netlist::rewire(GateId gate, std::size_t pin, NetId net) {
  if (gate.index >= gates_.size()) {
    throw NetlistError(NetlistErrc::UnknownNet, "gate g" + std::to_string(gate.index));
  }
  auto& g = gates_[gate.index];
  if (pin >= g.inputs.size()) {
    throw NetlistError(NetlistErrc::ArityMismatch, "pin " + std::to_string(pin));
  }
  if (net_type(net) != signature(g.kind).inputs[pin]) {
    throw NetlistError(NetlistErrc::TypeMismatch, net_name(net));
  }
  g.inputs[pin] = net;
  invalidate();
}

void Netlist::permute_gates(std::span<const std::size_t> order) {
  if (order.size() != gates_.size()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<Gate> reordered;
  reordered.reserve(gates_.size());
  std::vector<bool> seen(gates_.size(), false);
  for (std::size_t src : order) {
    if (src >= gates_.size() || seen[src]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[src] = true;
    reordered.push_back(gates_[src]);
  }
  gates_ = std::move(reordered);
  for (std::uint32_t g = 0; g < gates_.size(); ++g) {
    net_driver_[gates_[g].output.index] = g;
  }
  invalidate();
}

std::vector<NetId> Netlist::instantiate(const Netlist& sub, std::span<const NetId> inputs) {
  if (!sub.validated()) {
    throw NetlistError(NetlistErrc::NotValidated, "instantiated netlist");
  }
  if (inputs.size() != sub.inputs().size()) {
    throw NetlistError(NetlistErrc::PortShapeMismatch, "instance input count");
  }
  std::vector<std::optional<NetId>> map(sub.net_count());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (net_type(inputs[i]) != sub.inputs()[i].type) {
      throw NetlistError(NetlistErrc::TypeMismatch, "instance input " + sub.inputs()[i].name);
    }
    map[i] = inputs[i];
  }
  for (std::uint32_t g : sub.topological_order()) {
    const Gate& gate = sub.gates()[g];
    std::vector<NetId> ins;
    ins.reserve(gate.inputs.size());
    for (NetId n : gate.inputs) {
      ins.push_back(*map[n.index]);
    }
    map[gate.output.index] = add_gate(gate.kind, ins, gate.param);
  }
  std::vector<NetId> outs;
  for (const auto& port : sub.outputs()) {
    outs.push_back(*map[port.net->index]);
  }
  return outs;
}

void Netlist::validate() {
  for (const auto& port : outputs_) {
    if (!port.net) {
      throw NetlistError(NetlistErrc::UndrivenOutput, port.name);
    }
    check_net(*port.net);
    if (net_types_[port.net->index] != port.type) {
      throw NetlistError(NetlistErrc::TypeMismatch, "output " + port.name);
    }
  }
  for (const auto& gate : gates_) {
    const auto sig = signature(gate.kind);
    if (gate.inputs.size() != sig.inputs.size()) {
      throw NetlistError(NetlistErrc::ArityMismatch, std::string(to_string(gate.kind)));
    }
    for (std::size_t pin = 0; pin < gate.inputs.size(); ++pin) {
      check_net(gate.inputs[pin]);
      if (net_types_[gate.inputs[pin].index] != sig.inputs[pin]) {
        throw NetlistError(NetlistErrc::TypeMismatch, net_name(gate.inputs[pin]));
      }
    }
  }

  // Iterative DFS; a gray node reached again closes a cycle.
  enum class Mark : std::uint8_t { White, Gray, Black };
  std::vector<Mark> mark(gates_.size(), Mark::White);
  std::vector<std::uint32_t> order;
  order.reserve(gates_.size());
  for (std::uint32_t root = 0; root < gates_.size(); ++root) {
    if (mark[root] != Mark::White) {
      continue;
    }
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::Gray;
    while (!stack.empty()) {
      auto& [g, pin] = stack.back();
      if (pin == gates_[g].inputs.size()) {
        mark[g] = Mark::Black;
        order.push_back(g);
        stack.pop_back();
        continue;
      }
      const NetId in = gates_[g].inputs[pin++];
      const auto driver = net_driver_[in.index];
      if (!driver) {
        continue;
      }
      if (mark[*driver] == Mark::Gray) {
        throw NetlistError(NetlistErrc::CombinationalCycle, "cycle through net " + net_name(in));
      }
      if (mark[*driver] == Mark::White) {
        mark[*driver] = Mark::Gray;
        stack.emplace_back(*driver, 0);
      }
    }
  }
  order_ = std::move(order);
  validated_ = true;
}

const std::vector<std::uint32_t>& Netlist::topological_order() const {
  if (!validated_) {
    throw NetlistError(NetlistErrc::NotValidated, "call validate() first");
  }
  return order_;
}

std::vector<PortSpec> Netlist::output_specs() const {
  std::vector<PortSpec> specs;
  specs.reserve(outputs_.size());
  for (const auto& port : outputs_) {
    specs.push_back({port.name, port.type});
  }
  return specs;
}

std::vector<Level> Netlist::evaluate(std::span<const Level> inputs) const {
  if (!validated_) {
    throw NetlistError(NetlistErrc::NotValidated, "call validate() first");
  }
  if (inputs.size() != inputs_.size()) {
    throw NetlistError(NetlistErrc::MissingAssignment,
                       "expected " + std::to_string(inputs_.size()) + " input levels");
  }
  std::vector<Level> value(net_types_.size(), 0);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i] >= level_count(inputs_[i].type)) {
      throw NetlistError(NetlistErrc::LevelOutOfRange,
                         inputs_[i].name + "=" + std::to_string(inputs[i]));
    }
    value[i] = inputs[i];
  }
  std::array<Level, 5> pins{};
  for (std::uint32_t g : order_) {
    const Gate& gate = gates_[g];
    for (std::size_t pin = 0; pin < gate.inputs.size(); ++pin) {
      pins[pin] = value[gate.inputs[pin].index];
    }
    value[gate.output.index] =
        eval_gate(gate.kind, std::span<const Level>(pins.data(), gate.inputs.size()), gate.param);
  }
  std::vector<Level> out;
  out.reserve(outputs_.size());
  for (const auto& port : outputs_) {
    out.push_back(value[port.net->index]);
  }
  return out;
}

std::map<std::string, Level> Netlist::evaluate(
    const std::map<std::string, Level>& assignment) const {
  std::vector<Level> levels;
  levels.reserve(inputs_.size());
  for (const auto& port : inputs_) {
    const auto it = assignment.find(port.name);
    if (it == assignment.end()) {
      throw NetlistError(NetlistErrc::MissingAssignment, port.name);
    }
    levels.push_back(it->second);
  }
  const auto values = evaluate(levels);
  std::map<std::string, Level> result;
  for (std::size_t i = 0; i < outputs_.size(); ++i) {
    result.emplace(outputs_[i].name, values[i]);
  }
  return result;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Level>> enumerate_inputs(std::span<const PortSpec> ports) {
  std::size_t total = 1;
  for (const auto& port : ports) {
    total *= static_cast<std::size_t>(level_count(port.type));
    if (total > kMaxStateSpace) {
      throw NetlistError(NetlistErrc::StateSpaceTooLarge,
                         "more than " + std::to_string(kMaxStateSpace) + " input combinations");
    }
  }
  std::vector<std::vector<Level>> rows;
  rows.reserve(total);
  std::vector<Level> current(ports.size(), 0);
  for (std::size_t r = 0; r < total; ++r) {
    rows.push_back(current);
    // Odometer increment, last port fastest.
    for (std::size_t i = ports.size(); i-- > 0;) {
      if (++current[i] < level_count(ports[i].type)) {
        break;
      }
      current[i] = 0;
    }
  }
  return rows;
}

TruthTable truth_table(const Netlist& netlist) {
  TruthTable table{netlist.inputs(), netlist.output_specs(), {}};
  for (auto& inputs : enumerate_inputs(netlist.inputs())) {
    auto outputs = netlist.evaluate(inputs);
    table.rows.push_back({std::move(inputs), std::move(outputs)});
  }
  return table;
}

CostTable default_cost_table() {
  return {
      {GateKind::Not, 2},    {GateKind::Nand2, 4}, {GateKind::Nor2, 4},  {GateKind::And2, 6},
      {GateKind::Or2, 6},    {GateKind::And3, 8},  {GateKind::Or3, 8},   {GateKind::And4, 10},
      {GateKind::Or4, 10},   {GateKind::Xor2, 10}, {GateKind::AndN2, 6}, {GateKind::BMux2, 6},
      {GateKind::Dlc1, 2},   {GateKind::Dlc2, 2},  {GateKind::Dlc3, 2},  {GateKind::B2Q, 8},
      {GateKind::QMux4, 24},
  };
}

Metrics metrics(const Netlist& netlist, const CostTable& costs) {
  Metrics m;
  std::vector<int> depth(netlist.net_count(), 0);
  for (std::uint32_t g : netlist.topological_order()) {
    const Gate& gate = netlist.gates()[g];
    if (is_constant(gate.kind)) {
      continue;
    }
    const auto cost = costs.find(gate.kind);
    if (cost == costs.end()) {
      throw NetlistError(NetlistErrc::MissingCostEntry, std::string(to_string(gate.kind)));
    }
    ++m.gate_count;
    ++m.kind_counts[gate.kind];
    m.transistor_estimate += cost->second;
    int deepest = 0;
    for (NetId in : gate.inputs) {
      deepest = std::max(deepest, depth[in.index]);
    }
    depth[gate.output.index] = deepest + 1;
  }
  for (const auto& port : netlist.outputs()) {
    m.depth = std::max(m.depth, depth[port.net->index]);
  }
  return m;
}

}  // namespace mvq
