#pragma once

// Gate-level constructions of the quaternary converter and arithmetic
// circuits, with a registry keyed by stable circuit names.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvq/arith.hpp"
#include "mvq/netlist.hpp"

namespace mvq {

enum class CircuitId {
  Q2B,
  B2Q,
  Mod4Add,
  Mod4Sub,
  Mod4Mul,
  Mod4Neg,
  Mod4Dbl,
  Gf4Add,
  Gf4MulSop,
  Gf4MulMux,
};

inline constexpr std::array<CircuitId, 10> kAllCircuits = {
    CircuitId::Q2B,     CircuitId::B2Q,     CircuitId::Mod4Add, CircuitId::Mod4Sub,
    CircuitId::Mod4Mul, CircuitId::Mod4Neg, CircuitId::Mod4Dbl, CircuitId::Gf4Add,
    CircuitId::Gf4MulSop, CircuitId::Gf4MulMux};

[[nodiscard]] std::string_view to_string(CircuitId id);
[[nodiscard]] std::optional<CircuitId> circuit_from_string(std::string_view name);

/// Threshold voltages of the analog down-literal and binary-to-quaternary
/// cells. Descriptive only; evaluation never reads them.
struct DeviceParams {
  struct Dlc {
    double vtp;
    double vtn;
  };
  std::array<Dlc, 3> dlc;
  std::array<double, 4> b2q_transistors;  // M1..M4
};

inline constexpr DeviceParams kDeviceParams{
    {{{-2.2, 0.2}, {-1.2, 1.2}, {0.2, 2.2}}},
    {-0.6, 0.6, -1.2, 0.6},
};

// Converters.
[[nodiscard]] Netlist build_q2b();
[[nodiscard]] Netlist build_b2q();

// Binary cores over (x1, x2[, y1, y2]).
[[nodiscard]] Netlist build_mod4_adder();
[[nodiscard]] Netlist build_mod4_subtractor();
[[nodiscard]] Netlist build_mod4_multiplier();
[[nodiscard]] Netlist build_mod4_negator();
[[nodiscard]] Netlist build_mod4_doubler();
[[nodiscard]] Netlist build_gf4_adder();
[[nodiscard]] Netlist build_gf4_mul_sop();

/// Quaternary X, Y -> Q built from three 4:1 quaternary multiplexers.
[[nodiscard]] Netlist build_gf4_mul_mux();

/// Wraps a binary core with a q2b converter per operand and a b2q converter
/// on the result. Throws NetlistError(PortShapeMismatch) for other shapes.
[[nodiscard]] Netlist compose_with_converters(const Netlist& core);

[[nodiscard]] Netlist build(CircuitId id);

/// The arithmetic operation a circuit implements, if any.
[[nodiscard]] std::optional<OpKind> op_kind(CircuitId id);

/// True for circuits whose ports carry the binary encoding of quaternary
/// operands; these are wrapped with converters for the quaternary view.
[[nodiscard]] bool has_binary_core(CircuitId id);

/// The circuit as seen from quaternary ports.
[[nodiscard]] Netlist quaternary_view(CircuitId id);

/// Reference outputs for `build(id)` computed from the arithmetic oracles.
[[nodiscard]] std::vector<Level> expected_outputs(CircuitId id, std::span<const Level> inputs);

/// Reference outputs for `quaternary_view(id)`.
[[nodiscard]] std::vector<Level> expected_quaternary_outputs(CircuitId id,
                                                             std::span<const Level> inputs);

struct Counterexample {
  std::vector<Level> inputs;
  std::vector<Level> expected;
  std::vector<Level> actual;
};

struct VerifyResult {
  std::size_t vectors = 0;
  std::size_t mismatches = 0;
  std::optional<Counterexample> first_failure;
  [[nodiscard]] bool passed() const { return mismatches == 0; }
};

/// Exhaustively compares `netlist` against the oracle for `id`. The netlist
/// must have the same port shape as `build(id)`.
[[nodiscard]] VerifyResult verify(CircuitId id, const Netlist& netlist);

struct PublishedCount {
  int transistors;
  std::string_view note;
};

/// Published transistor totals; they use an unstated per-gate cost basis and
/// are carried as reference metadata only.
[[nodiscard]] std::optional<PublishedCount> published_transistor_count(CircuitId id);

/// Metrics of `build(id)` with the published reference count attached.
[[nodiscard]] Metrics circuit_metrics(CircuitId id, const CostTable& costs);

}  // namespace mvq
