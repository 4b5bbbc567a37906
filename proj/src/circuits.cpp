#include "mvq/circuits.hpp"

#include <algorithm>

namespace mvq {

namespace {

constexpr SignalType B = SignalType::Binary;
constexpr SignalType Q = SignalType::Quaternary;

struct CircuitInfo {
  CircuitId id;
  std::string_view name;
  std::optional<OpKind> op;
};

constexpr std::array<CircuitInfo, 10> kInfo = {{
    {CircuitId::Q2B, "q2b", std::nullopt},
    {CircuitId::B2Q, "b2q", std::nullopt},
    {CircuitId::Mod4Add, "mod4-add", OpKind::Mod4Add},
    {CircuitId::Mod4Sub, "mod4-sub", OpKind::Mod4Sub},
    {CircuitId::Mod4Mul, "mod4-mul", OpKind::Mod4Mul},
    {CircuitId::Mod4Neg, "mod4-neg", OpKind::Mod4Neg},
    {CircuitId::Mod4Dbl, "mod4-dbl", OpKind::Mod4Double},
    {CircuitId::Gf4Add, "gf4-add", OpKind::Gf4Add},
    {CircuitId::Gf4MulSop, "gf4-mul-sop", OpKind::Gf4Mul},
    {CircuitId::Gf4MulMux, "gf4-mul-mux", OpKind::Gf4Mul},
}};

const CircuitInfo& info(CircuitId id) { return kInfo.at(static_cast<std::size_t>(id)); }

Netlist binary_shell(bool binary_op, const std::string& prefix) {
  std::vector<PortSpec> inputs{{"x1", B}, {"x2", B}};
  if (binary_op) {
    inputs.push_back({"y1", B});
    inputs.push_back({"y2", B});
  }
  return Netlist(std::move(inputs), {{prefix + "1", B}, {prefix + "2", B}});
}

Quat quat_of(BitPair p) { return decode_b2q(p); }

BitPair bits_at(std::span<const Level> levels, std::size_t offset) {
  return {levels[offset] != 0, levels[offset + 1] != 0};
}

}  // namespace

std::string_view to_string(CircuitId id) { return info(id).name; }

std::optional<CircuitId> circuit_from_string(std::string_view name) {
  for (const auto& i : kInfo) {
    if (i.name == name) {
      return i.id;
    }
  }
  return std::nullopt;
}

std::optional<OpKind> op_kind(CircuitId id) { return info(id).op; }

bool has_binary_core(CircuitId id) {
  return id != CircuitId::Q2B && id != CircuitId::B2Q && id != CircuitId::Gf4MulMux;
}

// ---------------------------------------------------------------------------

Netlist build_q2b() {
  Netlist n({{"Q", Q}}, {{"x1", B}, {"x2", B}});
  const NetId q = n.input_net("Q");
  const NetId dlc1 = n.add_gate(GateKind::Dlc1, {q});
  const NetId dlc2 = n.add_gate(GateKind::Dlc2, {q});
  const NetId dlc3 = n.add_gate(GateKind::Dlc3, {q});
  // DLC outputs are complemented; the inverters restore the natural encoding.
  const NetId mux = n.add_gate(GateKind::BMux2, {dlc2, dlc1, dlc3});
  n.connect_output("x1", n.add_gate(GateKind::Not, {dlc2}));
  n.connect_output("x2", n.add_gate(GateKind::Not, {mux}));
  n.validate();
  return n;
}

Netlist build_b2q() {
  Netlist n({{"x1", B}, {"x2", B}}, {{"Q", Q}});
  n.connect_output("Q", n.add_gate(GateKind::B2Q, {n.input_net("x1"), n.input_net("x2")}));
  n.validate();
  return n;
}

Netlist build_mod4_adder() {
  Netlist n = binary_shell(true, "a");
  const NetId x1 = n.input_net("x1"), x2 = n.input_net("x2");
  const NetId y1 = n.input_net("y1"), y2 = n.input_net("y2");
  const NetId high = n.add_gate(GateKind::Xor2, {x1, y1});
  const NetId carry = n.add_gate(GateKind::And2, {x2, y2});
  n.connect_output("a1", n.add_gate(GateKind::Xor2, {high, carry}));
  n.connect_output("a2", n.add_gate(GateKind::Xor2, {x2, y2}));
  n.validate();
  return n;
}

Netlist build_mod4_subtractor() {
  Netlist n = binary_shell(true, "s");
  const NetId x1 = n.input_net("x1"), x2 = n.input_net("x2");
  const NetId y1 = n.input_net("y1"), y2 = n.input_net("y2");
  const NetId high = n.add_gate(GateKind::Xor2, {x1, y1});
  const NetId borrow = n.add_gate(GateKind::AndN2, {x2, y2});  // x2' y2
  n.connect_output("s1", n.add_gate(GateKind::Xor2, {high, borrow}));
  n.connect_output("s2", n.add_gate(GateKind::Xor2, {x2, y2}));
  n.validate();
  return n;
}

Netlist build_mod4_multiplier() {
  Netlist n = binary_shell(true, "m");
  const NetId x1 = n.input_net("x1"), x2 = n.input_net("x2");
  const NetId y1 = n.input_net("y1"), y2 = n.input_net("y2");
  const NetId cross_a = n.add_gate(GateKind::And2, {x1, y2});
  const NetId cross_b = n.add_gate(GateKind::And2, {x2, y1});
  n.connect_output("m1", n.add_gate(GateKind::Xor2, {cross_a, cross_b}));
  n.connect_output("m2", n.add_gate(GateKind::And2, {x2, y2}));
  n.validate();
  return n;
}

Netlist build_mod4_negator() {
  Netlist n = binary_shell(false, "n");
  const NetId x1 = n.input_net("x1"), x2 = n.input_net("x2");
  n.connect_output("n1", n.add_gate(GateKind::Xor2, {x1, x2}));
  n.connect_output("n2", x2);
  n.validate();
  return n;
}

Netlist build_mod4_doubler() {
  Netlist n = binary_shell(false, "d");
  n.connect_output("d1", n.input_net("x2"));
  n.connect_output("d2", n.add_gate(GateKind::Const0, {}));
  n.validate();
  return n;
}

Netlist build_gf4_adder() {
  Netlist n = binary_shell(true, "a");
  n.connect_output("a1", n.add_gate(GateKind::Xor2, {n.input_net("x1"), n.input_net("y1")}));
  n.connect_output("a2", n.add_gate(GateKind::Xor2, {n.input_net("x2"), n.input_net("y2")}));
  n.validate();
  return n;
}

Netlist build_gf4_mul_sop() {
  Netlist n = binary_shell(true, "m");
  const NetId x1 = n.input_net("x1"), x2 = n.input_net("x2");
  const NetId y1 = n.input_net("y1"), y2 = n.input_net("y2");
  const NetId nx1 = n.add_gate(GateKind::Not, {x1});
  const NetId nx2 = n.add_gate(GateKind::Not, {x2});
  const NetId ny1 = n.add_gate(GateKind::Not, {y1});
  const NetId ny2 = n.add_gate(GateKind::Not, {y2});

  // m1 = x1 y1' y2 + x1 x2' y1 y2' + x1' x2 y1 + x2 y1 y2
  const NetId t1 = n.add_gate(GateKind::And3, {x1, ny1, y2});
  const NetId t2 = n.add_gate(GateKind::And4, {x1, nx2, y1, ny2});
  const NetId t3 = n.add_gate(GateKind::And3, {nx1, x2, y1});
  const NetId t4 = n.add_gate(GateKind::And3, {x2, y1, y2});
  n.connect_output("m1", n.add_gate(GateKind::Or4, {t1, t2, t3, t4}));

  // m2 = x1 y1 ^ x2 y2
  const NetId high = n.add_gate(GateKind::And2, {x1, y1});
  const NetId low = n.add_gate(GateKind::And2, {x2, y2});
  n.connect_output("m2", n.add_gate(GateKind::Xor2, {high, low}));
  n.validate();
  return n;
}

Netlist build_gf4_mul_mux() {
  Netlist n({{"X", Q}, {"Y", Q}}, {{"Q", Q}});
  const NetId x = n.input_net("X"), y = n.input_net("Y");
  const std::array<NetId, 4> level = {n.add_qconst(0), n.add_qconst(1), n.add_qconst(2),
                                      n.add_qconst(3)};
  // Rows of the product table for X = 2 and X = 3, indexed by Y.
  const NetId times2 = n.add_gate(GateKind::QMux4, {y, level[0], level[2], level[3], level[1]});
  const NetId times3 = n.add_gate(GateKind::QMux4, {y, level[0], level[3], level[1], level[2]});
  n.connect_output("Q", n.add_gate(GateKind::QMux4, {x, level[0], y, times2, times3}));
  n.validate();
  return n;
}

Netlist compose_with_converters(const Netlist& core) {
  const auto& ins = core.inputs();
  const auto& outs = core.outputs();
  const bool binary_op = ins.size() == 4;
  const std::array<std::string_view, 4> expected_names = {"x1", "x2", "y1", "y2"};
  bool ok = (ins.size() == 2 || ins.size() == 4) && outs.size() == 2;
  for (std::size_t i = 0; ok && i < ins.size(); ++i) {
    ok = ins[i].type == B && ins[i].name == expected_names[i];
  }
  for (std::size_t i = 0; ok && i < outs.size(); ++i) {
    ok = outs[i].type == B;
  }
  if (!ok) {
    throw NetlistError(NetlistErrc::PortShapeMismatch,
                       "expected binary ports (x1, x2[, y1, y2]) -> (out1, out2)");
  }

  std::vector<PortSpec> q_inputs{{"X", Q}};
  if (binary_op) {
    q_inputs.push_back({"Y", Q});
  }
  Netlist n(std::move(q_inputs), {{"Q", Q}});
  const Netlist q2b = build_q2b();
  std::vector<NetId> bits;
  for (std::size_t operand = 0; operand < n.inputs().size(); ++operand) {
    const std::array<NetId, 1> q{NetId{static_cast<std::uint32_t>(operand)}};
    const auto pair = n.instantiate(q2b, q);
    bits.insert(bits.end(), pair.begin(), pair.end());
  }
  const auto result = n.instantiate(core, bits);
  n.connect_output("Q", n.instantiate(build_b2q(), result).front());
  n.validate();
  return n;
}

Netlist build(CircuitId id) {
  switch (id) {
    case CircuitId::Q2B: return build_q2b();
    case CircuitId::B2Q: return build_b2q();
    case CircuitId::Mod4Add: return build_mod4_adder();
    case CircuitId::Mod4Sub: return build_mod4_subtractor();
    case CircuitId::Mod4Mul: return build_mod4_multiplier();
    case CircuitId::Mod4Neg: return build_mod4_negator();
    case CircuitId::Mod4Dbl: return build_mod4_doubler();
    case CircuitId::Gf4Add: return build_gf4_adder();
    case CircuitId::Gf4MulSop: return build_gf4_mul_sop();
    case CircuitId::Gf4MulMux: return build_gf4_mul_mux();
  }
  throw std::invalid_argument("unknown circuit");
}

Netlist quaternary_view(CircuitId id) {
  return has_binary_core(id) ? compose_with_converters(build(id)) : build(id);
}

// ---------------------------------------------------------------------------
// Oracles. These go through arith_core only.

std::vector<Level> expected_quaternary_outputs(CircuitId id, std::span<const Level> in) {
  switch (id) {
    case CircuitId::Q2B: {
      const BitPair p = encode_q2b(Quat{in[0]});
      return {Level{p.x1}, Level{p.x2}};
    }
    case CircuitId::B2Q:
      return {static_cast<Level>(quat_of(bits_at(in, 0)).value())};
    default: {
      const OpKind op = *op_kind(id);
      const Quat a{in[0]};
      const Quat b = is_unary(op) ? Quat{0} : Quat{in[1]};
      return {static_cast<Level>(apply(op, a, b).value())};
    }
  }
}

std::vector<Level> expected_outputs(CircuitId id, std::span<const Level> in) {
  if (!has_binary_core(id)) {
    return expected_quaternary_outputs(id, in);
  }
  const OpKind op = *op_kind(id);
  const Quat a = quat_of(bits_at(in, 0));
  const Quat b = is_unary(op) ? Quat{0} : quat_of(bits_at(in, 2));
  const BitPair r = encode_q2b(apply(op, a, b));
  return {Level{r.x1}, Level{r.x2}};
}

VerifyResult verify(CircuitId id, const Netlist& netlist) {
  const Netlist reference = build(id);
  if (netlist.inputs() != reference.inputs() ||
      netlist.output_specs() != reference.output_specs()) {
    throw NetlistError(NetlistErrc::PortShapeMismatch,
                       "netlist ports differ from circuit " + std::string(to_string(id)));
  }
  VerifyResult result;
  for (const auto& row : truth_table(netlist).rows) {
    ++result.vectors;
    auto expected = expected_outputs(id, row.inputs);
    if (expected != row.outputs) {
      if (result.mismatches++ == 0) {
        result.first_failure = Counterexample{row.inputs, std::move(expected), row.outputs};
      }
    }
  }
  return result;
}

std::optional<PublishedCount> published_transistor_count(CircuitId id) {
  switch (id) {
    case CircuitId::Mod4Add: return PublishedCount{40, "total for the 4-gate adder"};
    case CircuitId::Mod4Mul: return PublishedCount{24, "total for the 4-gate multiplier"};
    case CircuitId::Gf4Add: return PublishedCount{24, "total for the 2-gate adder"};
    case CircuitId::Gf4MulSop:
      return PublishedCount{54, "m1 sum of products alone, excluding the converters"};
    case CircuitId::Gf4MulMux: return PublishedCount{72, "total for the three-multiplexer multiplier"};
    default: return std::nullopt;
  }
}

Metrics circuit_metrics(CircuitId id, const CostTable& costs) {
  Metrics m = metrics(build(id), costs);
  if (const auto published = published_transistor_count(id)) {
    m.reference_transistors = published->transistors;
    m.reference_note = "reference only (" + std::string(published->note) +
                       "); the published counts follow no single per-gate cost table, so "
                       "they are never asserted against the estimate";
  }
  return m;
}

}  // namespace mvq
