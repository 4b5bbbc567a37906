#pragma once

// Typed combinational gate graph over binary and quaternary nets.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mvq {

/// A signal value: {0,1} on binary nets, {0..3} on quaternary nets.
using Level = std::uint8_t;

enum class SignalType : std::uint8_t { Binary, Quaternary };

[[nodiscard]] constexpr int level_count(SignalType type) {
  return type == SignalType::Binary ? 2 : 4;
}
[[nodiscard]] std::string_view to_string(SignalType type);

enum class GateKind : std::uint8_t {
  Not,
  And2,
  And3,
  And4,
  Or2,
  Or3,
  Or4,
  Xor2,
  Nand2,
  Nor2,
  AndN2,  // a' & b
  Const0,
  Const1,
  BMux2,  // (sel, a, b) -> sel ? a : b
  Dlc1,   // 1 iff input < 1
  Dlc2,   // 1 iff input < 2
  Dlc3,   // 1 iff input < 3
  B2Q,    // (x1, x2) -> 2*x1 + x2
  QConst,
  QMux4,  // (sel, d0, d1, d2, d3) -> d[sel]
};

inline constexpr std::array<GateKind, 20> kAllGateKinds = {
    GateKind::Not,    GateKind::And2,  GateKind::And3,  GateKind::And4,  GateKind::Or2,
    GateKind::Or3,    GateKind::Or4,   GateKind::Xor2,  GateKind::Nand2, GateKind::Nor2,
    GateKind::AndN2,  GateKind::Const0, GateKind::Const1, GateKind::BMux2, GateKind::Dlc1,
    GateKind::Dlc2,   GateKind::Dlc3,  GateKind::B2Q,   GateKind::QConst, GateKind::QMux4};

struct GateSignature {
  std::span<const SignalType> inputs;
  SignalType output;
};

[[nodiscard]] GateSignature signature(GateKind kind);
[[nodiscard]] std::string_view to_string(GateKind kind);
[[nodiscard]] std::optional<GateKind> gate_kind_from_string(std::string_view name);

/// Constant sources carry no logic and are excluded from gate count and depth.
[[nodiscard]] constexpr bool is_constant(GateKind kind) {
  return kind == GateKind::Const0 || kind == GateKind::Const1 || kind == GateKind::QConst;
}

/// Function table of a single gate. `param` is the level of a QConst.
[[nodiscard]] Level eval_gate(GateKind kind, std::span<const Level> inputs, Level param = 0);

struct NetId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(NetId, NetId) = default;
};

struct GateId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(GateId, GateId) = default;
};

enum class NetlistErrc {
  DuplicatePortName,
  UnknownPort,
  ArityMismatch,
  TypeMismatch,
  UnknownNet,
  CombinationalCycle,
  UndrivenOutput,
  NotValidated,
  MissingAssignment,
  LevelOutOfRange,
  StateSpaceTooLarge,
  MissingCostEntry,
  MalformedDocument,
  PortShapeMismatch,
};

[[nodiscard]] std::string_view to_string(NetlistErrc code);

class NetlistError : public std::runtime_error {
public:
  NetlistError(NetlistErrc code, const std::string& detail);
  [[nodiscard]] NetlistErrc code() const { return code_; }

private:
  NetlistErrc code_;
};

struct PortSpec {
  std::string name;
  SignalType type = SignalType::Binary;
  friend bool operator==(const PortSpec&, const PortSpec&) = default;
};

struct OutputPort {
  std::string name;
  SignalType type = SignalType::Binary;
  std::optional<NetId> net;
};

struct Gate {
  GateKind kind = GateKind::Not;
  Level param = 0;
  std::vector<NetId> inputs;
  NetId output;
};

class Netlist {
public:
  /// Input port i drives net i.
  Netlist(std::vector<PortSpec> inputs, std::vector<PortSpec> outputs);

  NetId add_gate(GateKind kind, std::span<const NetId> inputs, Level param = 0);
  NetId add_gate(GateKind kind, std::initializer_list<NetId> inputs, Level param = 0) {
    return add_gate(kind, std::span<const NetId>(inputs.begin(), inputs.size()), param);
  }
  NetId add_qconst(Level level) { return add_gate(GateKind::QConst, {}, level); }

  void connect_output(std::string_view name, NetId net);

  /// Reconnects one input pin of an existing gate. May introduce a cycle,
  /// which validate() reports.
  void rewire(GateId gate, std::size_t pin, NetId net);

  /// Reorders the gate list; net ids are unchanged.
  void permute_gates(std::span<const std::size_t> order);

  /// Copies a validated netlist into this one, feeding its input ports from
  /// `inputs`. Returns the nets driving the copy's output ports.
  std::vector<NetId> instantiate(const Netlist& sub, std::span<const NetId> inputs);

  /// Checks connectivity, typing and acyclicity and caches a topological
  /// order. Throws NetlistError.
  void validate();
  [[nodiscard]] bool validated() const { return validated_; }

  /// Positional evaluation: one level per input port, in declaration order.
  [[nodiscard]] std::vector<Level> evaluate(std::span<const Level> inputs) const;
  [[nodiscard]] std::map<std::string, Level> evaluate(
      const std::map<std::string, Level>& assignment) const;

  [[nodiscard]] const std::vector<PortSpec>& inputs() const { return inputs_; }
  [[nodiscard]] const std::vector<OutputPort>& outputs() const { return outputs_; }
  [[nodiscard]] std::vector<PortSpec> output_specs() const;
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] std::size_t net_count() const { return net_types_.size(); }
  [[nodiscard]] SignalType net_type(NetId net) const;
  [[nodiscard]] NetId input_net(std::string_view name) const;
  /// Gate indices in dependency order; requires validate().
  [[nodiscard]] const std::vector<std::uint32_t>& topological_order() const;

private:
  NetId new_net(SignalType type);
  void check_net(NetId net) const;
  void invalidate() { validated_ = false; }

  std::vector<PortSpec> inputs_;
  std::vector<OutputPort> outputs_;
  std::vector<Gate> gates_;
  std::vector<SignalType> net_types_;
  std::vector<std::optional<std::uint32_t>> net_driver_;  // gate index; nullopt for input ports
  std::vector<std::uint32_t> order_;
  bool validated_ = false;
};

// ---------------------------------------------------------------------------
// Exhaustive views

inline constexpr std::size_t kMaxStateSpace = std::size_t{1} << 16;

/// All input combinations in lexicographic order, first port slowest-varying.
[[nodiscard]] std::vector<std::vector<Level>> enumerate_inputs(std::span<const PortSpec> ports);

struct TruthRow {
  std::vector<Level> inputs;
  std::vector<Level> outputs;
  friend bool operator==(const TruthRow&, const TruthRow&) = default;
};

struct TruthTable {
  std::vector<PortSpec> inputs;
  std::vector<PortSpec> outputs;
  std::vector<TruthRow> rows;
  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

[[nodiscard]] TruthTable truth_table(const Netlist& netlist);

// ---------------------------------------------------------------------------
// Metrics

using CostTable = std::map<GateKind, int>;

/// Static-CMOS transistor counts per gate kind.
[[nodiscard]] CostTable default_cost_table();

struct Metrics {
  int gate_count = 0;
  int depth = 0;
  long transistor_estimate = 0;
  std::map<GateKind, int> kind_counts;
  std::optional<int> reference_transistors;
  std::string reference_note;
};

/// Gate count and depth exclude constant sources; depth is the longest
/// input-to-output path measured in gates.
[[nodiscard]] Metrics metrics(const Netlist& netlist, const CostTable& costs);

}  // namespace mvq
