#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mvq/netlist.hpp"
#include "mvq/netlist_json.hpp"

using namespace mvq;

namespace {

constexpr SignalType B = SignalType::Binary;
constexpr SignalType Q = SignalType::Quaternary;

NetlistErrc error_of(auto&& fn) {
  try {
    fn();
  } catch (const NetlistError& e) {
    return e.code();
  }
  FAIL("expected NetlistError");
  return NetlistErrc::MalformedDocument;
}

// (a ^ b) & c, with an extra NOT feeding nowhere.
Netlist small_netlist() {
  Netlist n({{"a", B}, {"b", B}, {"c", B}}, {{"f", B}});
  const NetId x = n.add_gate(GateKind::Xor2, {n.input_net("a"), n.input_net("b")});
  (void)n.add_gate(GateKind::Not, {x});
  n.connect_output("f", n.add_gate(GateKind::And2, {x, n.input_net("c")}));
  n.validate();
  return n;
}

/// Reference semantics written independently of eval_gate.
int documented(GateKind kind, const std::vector<int>& in, int param) {
  switch (kind) {
    case GateKind::Not: return 1 - in[0];
    case GateKind::And2: return in[0] * in[1];
    case GateKind::And3: return in[0] * in[1] * in[2];
    case GateKind::And4: return in[0] * in[1] * in[2] * in[3];
    case GateKind::Or2: return std::min(1, in[0] + in[1]);
    case GateKind::Or3: return std::min(1, in[0] + in[1] + in[2]);
    case GateKind::Or4: return std::min(1, in[0] + in[1] + in[2] + in[3]);
    case GateKind::Xor2: return (in[0] + in[1]) % 2;
    case GateKind::Nand2: return 1 - in[0] * in[1];
    case GateKind::Nor2: return 1 - std::min(1, in[0] + in[1]);
    case GateKind::AndN2: return (1 - in[0]) * in[1];
    case GateKind::Const0: return 0;
    case GateKind::Const1: return 1;
    case GateKind::BMux2: return in[0] == 1 ? in[1] : in[2];
    case GateKind::Dlc1: return in[0] < 1;
    case GateKind::Dlc2: return in[0] < 2;
    case GateKind::Dlc3: return in[0] < 3;
    case GateKind::B2Q: return 2 * in[0] + in[1];
    case GateKind::QConst: return param;
    case GateKind::QMux4: return in[static_cast<std::size_t>(1 + in[0])];
  }
  return -1;
}

}  // namespace

TEST_CASE("construction") {
  Netlist shell({{"x", Q}}, {{"x1", B}, {"x2", B}});
  CHECK(shell.inputs().size() == 1);
  CHECK(shell.outputs().size() == 2);
  CHECK(shell.gates().empty());
  CHECK(shell.net_count() == 1);
  CHECK(shell.net_type(shell.input_net("x")) == Q);

  CHECK(error_of([] { Netlist({{"x", B}, {"x", B}}, {}); }) == NetlistErrc::DuplicatePortName);
  CHECK(error_of([] { Netlist({{"x", B}}, {{"x", B}}); }) == NetlistErrc::DuplicatePortName);

  Netlist constant({}, {{"k", Q}});
  constant.connect_output("k", constant.add_qconst(2));
  constant.validate();
  const auto table = truth_table(constant);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].outputs == std::vector<Level>{2});
}

TEST_CASE("add_gate checks arity, types and nets") {
  Netlist n({{"a", B}, {"b", B}, {"q", Q}}, {{"f", B}});
  const NetId a = n.input_net("a"), b = n.input_net("b"), q = n.input_net("q");
  CHECK(n.net_type(n.add_gate(GateKind::Xor2, {a, b})) == B);
  CHECK(n.net_type(n.add_gate(GateKind::Dlc2, {q})) == B);
  CHECK(n.net_type(n.add_gate(GateKind::B2Q, {a, b})) == Q);
  CHECK(error_of([&] { (void)n.add_gate(GateKind::Xor2, {a, q}); }) == NetlistErrc::TypeMismatch);
  CHECK(error_of([&] { (void)n.add_gate(GateKind::Dlc1, {a}); }) == NetlistErrc::TypeMismatch);
  CHECK(error_of([&] { (void)n.add_gate(GateKind::And2, {a}); }) == NetlistErrc::ArityMismatch);
  CHECK(error_of([&] { (void)n.add_gate(GateKind::Not, {NetId{99}}); }) == NetlistErrc::UnknownNet);
  CHECK(error_of([&] { (void)n.add_qconst(4); }) == NetlistErrc::LevelOutOfRange);
  CHECK(error_of([&] { n.connect_output("f", q); }) == NetlistErrc::TypeMismatch);
  CHECK(error_of([&] { n.connect_output("g", a); }) == NetlistErrc::UnknownPort);
}

TEST_CASE("validate rejects cycles and undriven outputs") {
  Netlist n({{"a", B}}, {{"f", B}});
  const NetId x = n.add_gate(GateKind::And2, {n.input_net("a"), n.input_net("a")});
  n.connect_output("f", x);
  n.validate();
  n.rewire(GateId{0}, 1, x);
  CHECK_FALSE(n.validated());
  try {
    n.validate();
    FAIL("cycle not detected");
  } catch (const NetlistError& e) {
    CHECK(e.code() == NetlistErrc::CombinationalCycle);
    CHECK(std::string(e.what()).find("n1") != std::string::npos);
  }

  Netlist open({{"a", B}}, {{"f", B}, {"g", B}});
  open.connect_output("f", open.input_net("a"));
  CHECK(error_of([&] { open.validate(); }) == NetlistErrc::UndrivenOutput);
}

TEST_CASE("evaluate") {
  Netlist n = small_netlist();
  CHECK(n.evaluate(std::map<std::string, Level>{{"a", 1}, {"b", 0}, {"c", 1}}).at("f") == 1);
  CHECK(n.evaluate(std::vector<Level>{1, 1, 1}) == std::vector<Level>{0});
  CHECK(error_of([&] { (void)n.evaluate(std::map<std::string, Level>{{"a", 1}, {"b", 0}}); }) ==
        NetlistErrc::MissingAssignment);
  CHECK(error_of([&] { (void)n.evaluate(std::vector<Level>{2, 0, 0}); }) ==
        NetlistErrc::LevelOutOfRange);

  Netlist unvalidated({{"a", B}}, {{"f", B}});
  unvalidated.connect_output("f", unvalidated.input_net("a"));
  CHECK(error_of([&] { (void)unvalidated.evaluate(std::vector<Level>{0}); }) ==
        NetlistErrc::NotValidated);
}

TEST_CASE("evaluation is deterministic across calls and re-validation") {
  Netlist n = small_netlist();
  const auto first = truth_table(n);
  for (int i = 0; i < 3; ++i) {
    n.validate();
    CHECK(truth_table(n) == first);
  }
}

TEST_CASE("truth table ordering and size limits") {
  Netlist n({{"p", B}, {"q", Q}}, {{"o", Q}});
  n.connect_output("o", n.input_net("q"));
  n.validate();
  const auto table = truth_table(n);
  REQUIRE(table.rows.size() == 8);
  CHECK(table.rows[0].inputs == std::vector<Level>{0, 0});
  CHECK(table.rows[1].inputs == std::vector<Level>{0, 1});
  CHECK(table.rows[4].inputs == std::vector<Level>{1, 0});

  std::vector<PortSpec> eight(8, PortSpec{"", Q});
  std::vector<PortSpec> nine(9, PortSpec{"", Q});
  CHECK(enumerate_inputs(eight).size() == 65536);
  CHECK(error_of([&] { (void)enumerate_inputs(nine); }) == NetlistErrc::StateSpaceTooLarge);
}

TEST_CASE("down-literal gates follow the threshold table") {
  // Rows: input level; columns DLC1..3 in the {0, 3} voltage-level form.
  const int table[4][3] = {{3, 3, 3}, {0, 3, 3}, {0, 0, 3}, {0, 0, 0}};
  const GateKind dlc[3] = {GateKind::Dlc1, GateKind::Dlc2, GateKind::Dlc3};
  for (Level in = 0; in < 4; ++in) {
    for (int k = 0; k < 3; ++k) {
      const std::array<Level, 1> pin{in};
      CHECK(eval_gate(dlc[k], pin) == (table[in][k] == 3 ? 1 : 0));
    }
  }
}

TEST_CASE("QMUX4 selects the addressed data line") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> level(0, 3);
  for (int trial = 0; trial < 64; ++trial) {
    std::array<Level, 5> pins{};
    for (auto& p : pins) {
      p = static_cast<Level>(level(rng));
    }
    for (Level sel = 0; sel < 4; ++sel) {
      pins[0] = sel;
      CHECK(eval_gate(GateKind::QMux4, pins) == pins[1 + sel]);
    }
  }
}

TEST_CASE("every gate kind matches its documented function table") {
  for (GateKind kind : kAllGateKinds) {
    const auto sig = signature(kind);
    std::vector<PortSpec> ports;
    for (auto t : sig.inputs) {
      ports.push_back({"", t});
    }
    const int params = kind == GateKind::QConst ? 4 : 1;
    for (int param = 0; param < params; ++param) {
      for (const auto& row : enumerate_inputs(ports)) {
        const std::vector<int> ints(row.begin(), row.end());
        CHECK_MESSAGE(eval_gate(kind, row, static_cast<Level>(param)) ==
                          documented(kind, ints, param),
                      to_string(kind));
      }
    }
    CHECK(gate_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_FALSE(gate_kind_from_string("XOR3").has_value());
}

TEST_CASE("metrics: counting rules") {
  const auto m = metrics(small_netlist(), default_cost_table());
  CHECK(m.gate_count == 3);
  CHECK(m.depth == 2);
  CHECK(m.transistor_estimate == 10 + 2 + 6);
  CHECK(m.kind_counts.at(GateKind::Xor2) == 1);

  Netlist consts({{"a", B}}, {{"f", B}, {"g", B}});
  consts.connect_output("f", consts.add_gate(GateKind::Const1, {}));
  consts.connect_output("g", consts.input_net("a"));
  consts.validate();
  const auto c = metrics(consts, default_cost_table());
  CHECK(c.gate_count == 0);
  CHECK(c.depth == 0);

  CostTable partial = default_cost_table();
  partial.erase(GateKind::Xor2);
  CHECK(error_of([&] { (void)metrics(small_netlist(), partial); }) ==
        NetlistErrc::MissingCostEntry);
}

TEST_CASE("gate-list permutation preserves behavior and metrics") {
  Netlist base({{"a", B}, {"b", B}, {"q", Q}}, {{"f", B}, {"r", Q}});
  const NetId a = base.input_net("a"), b = base.input_net("b"), q = base.input_net("q");
  const NetId d = base.add_gate(GateKind::Dlc2, {q});
  const NetId x = base.add_gate(GateKind::Xor2, {a, d});
  const NetId y = base.add_gate(GateKind::Nand2, {x, b});
  const NetId z = base.add_gate(GateKind::BMux2, {y, a, d});
  base.connect_output("f", z);
  base.connect_output("r", base.add_gate(GateKind::QMux4, {q, base.add_qconst(3), q,
                                                           base.add_gate(GateKind::B2Q, {z, y}),
                                                           base.add_qconst(0)}));
  base.validate();
  const auto table = truth_table(base);
  const auto m = metrics(base, default_cost_table());

  std::vector<std::size_t> order(base.gates().size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    Netlist shuffled = base;
    shuffled.permute_gates(order);
    shuffled.validate();
    CHECK(truth_table(shuffled) == table);
    const auto sm = metrics(shuffled, default_cost_table());
    CHECK(sm.gate_count == m.gate_count);
    CHECK(sm.depth == m.depth);
    CHECK(sm.transistor_estimate == m.transistor_estimate);
    CHECK(sm.depth <= sm.gate_count);
  }
}

TEST_CASE("instantiate copies a validated sub-netlist") {
  const Netlist sub = small_netlist();
  Netlist top({{"p", B}, {"q", B}}, {{"o", B}});
  const NetId p = top.input_net("p"), q = top.input_net("q");
  const std::array<NetId, 3> pins{p, q, p};
  top.connect_output("o", top.instantiate(sub, pins).front());
  top.validate();
  for (Level a = 0; a < 2; ++a) {
    for (Level b = 0; b < 2; ++b) {
      CHECK(top.evaluate(std::vector<Level>{a, b}).front() == ((a ^ b) & a));
    }
  }
}

TEST_CASE("JSON round trip") {
  Netlist n({{"q", Q}, {"s", B}}, {{"o", Q}, {"p", B}});
  const NetId q = n.input_net("q"), s = n.input_net("s");
  const NetId d = n.add_gate(GateKind::Dlc3, {q});
  n.connect_output("p", n.add_gate(GateKind::AndN2, {d, s}));
  n.connect_output("o", n.add_gate(GateKind::QMux4, {q, n.add_qconst(1), q, n.add_qconst(3), q}));
  n.validate();

  const std::string text = export_json(n);
  const Netlist back = import_json(text);
  CHECK(truth_table(back) == truth_table(n));
  CHECK(export_json(back) == text);

  auto doc = nlohmann::json::parse(text);
  CHECK(doc["inputs"][0]["type"] == "quat");
  std::reverse(doc["gates"].begin(), doc["gates"].end());
  CHECK(truth_table(netlist_from_json(doc)) == truth_table(n));
}

TEST_CASE("JSON import errors") {
  const char* cyclic = R"({"inputs":[{"name":"a","type":"bin"}],
    "outputs":[{"name":"f","type":"bin","net":1}],
    "gates":[{"id":0,"kind":"AND2","inputs":[0,2],"output":1},
             {"id":1,"kind":"NOT","inputs":[1],"output":2}]})";
  CHECK(error_of([&] { (void)import_json(cyclic); }) == NetlistErrc::CombinationalCycle);

  const char* dangling = R"({"inputs":[{"name":"a","type":"bin"}],
    "outputs":[{"name":"f","type":"bin","net":1}],
    "gates":[{"id":0,"kind":"AND2","inputs":[0,5],"output":1}]})";
  CHECK(error_of([&] { (void)import_json(dangling); }) == NetlistErrc::UnknownNet);

  const char* bad_kind = R"({"inputs":[],"outputs":[],"gates":[{"id":0,"kind":"XOR9","inputs":[],"output":0}]})";
  CHECK(error_of([&] { (void)import_json(bad_kind); }) == NetlistErrc::MalformedDocument);

  const char* undriven = R"({"inputs":[{"name":"a","type":"bin"}],
    "outputs":[{"name":"f","type":"bin","net":null}], "gates":[]})";
  CHECK(error_of([&] { (void)import_json(undriven); }) == NetlistErrc::UndrivenOutput);

  CHECK(error_of([&] { (void)import_json("{not json"); }) == NetlistErrc::MalformedDocument);
}

TEST_CASE("cost table JSON") {
  const auto costs = cost_table_from_json(nlohmann::json::parse(R"({"XOR2": 12, "AND2": 6})"));
  CHECK(costs.at(GateKind::Xor2) == 12);
  CHECK(costs.size() == 2);
  CHECK(cost_table_from_json(to_json(default_cost_table())) == default_cost_table());
  CHECK(error_of([] { (void)cost_table_from_json(nlohmann::json::parse(R"({"FOO": 1})")); }) ==
        NetlistErrc::MalformedDocument);
  CHECK(error_of([] { (void)cost_table_from_json(nlohmann::json::parse(R"({"NOT": -1})")); }) ==
        NetlistErrc::MalformedDocument);
}
