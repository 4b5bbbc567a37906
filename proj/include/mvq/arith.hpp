#pragma once

// Quaternary values, their two-bit natural encoding, and the reference
// definitions of modulo-4 and GF(4) arithmetic.
//
// Everything here is table- or definition-driven and shares no code with
// netlist evaluation, so these functions serve as independent oracles for
// the circuit builders.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace mvq {

/// A single quaternary logic level in {0, 1, 2, 3}.
class Quat {
public:
  constexpr Quat() = default;
  constexpr explicit Quat(int value) : value_(checked(value)) {}

  [[nodiscard]] constexpr int value() const { return value_; }

  friend constexpr bool operator==(Quat, Quat) = default;
  friend constexpr auto operator<=>(Quat, Quat) = default;

  static constexpr std::array<Quat, 4> all() { return {Quat{0}, Quat{1}, Quat{2}, Quat{3}}; }

private:
  static constexpr std::uint8_t checked(int value) {
    if (value < 0 || value > 3) {
      throw std::out_of_range("quaternary level out of range");
    }
    return static_cast<std::uint8_t>(value);
  }

  std::uint8_t value_ = 0;
};

/// Natural binary encoding of a Quat: x1 is the msb, x2 the lsb.
struct BitPair {
  bool x1 = false;
  bool x2 = false;

  friend constexpr bool operator==(BitPair, BitPair) = default;
};

enum class OpKind { Mod4Add, Mod4Sub, Mod4Mul, Mod4Neg, Mod4Double, Gf4Add, Gf4Mul };

inline constexpr std::array<OpKind, 7> kAllOpKinds = {
    OpKind::Mod4Add, OpKind::Mod4Sub,    OpKind::Mod4Mul, OpKind::Mod4Neg,
    OpKind::Mod4Double, OpKind::Gf4Add, OpKind::Gf4Mul};

[[nodiscard]] constexpr bool is_unary(OpKind kind) {
  return kind == OpKind::Mod4Neg || kind == OpKind::Mod4Double;
}

[[nodiscard]] std::string_view to_string(OpKind kind);

[[nodiscard]] Quat mod4_add(Quat a, Quat b);
/// a - b (mod 4); the subtrahend is the second argument.
[[nodiscard]] Quat mod4_sub(Quat a, Quat b);
[[nodiscard]] Quat mod4_mul(Quat a, Quat b);
[[nodiscard]] Quat mod4_neg(Quat a);
[[nodiscard]] Quat mod4_double(Quat a);

/// Bitwise XOR of the natural encodings.
[[nodiscard]] Quat gf4_add(Quat a, Quat b);
/// GF(4) product from the multiplication table (rows indexed by a).
[[nodiscard]] Quat gf4_mul(Quat a, Quat b);
/// GF(4) product computed as polynomial multiplication over GF(2) reduced
/// modulo t^2 + t + 1. Independent of the table in gf4_mul.
[[nodiscard]] Quat gf4_mul_poly(Quat a, Quat b);

/// Multiplicative inverse in GF(4); nullopt for zero.
[[nodiscard]] std::optional<Quat> gf4_inverse(Quat a);

[[nodiscard]] BitPair encode_q2b(Quat q);
[[nodiscard]] Quat decode_b2q(BitPair p);

/// Oracle dispatch. Unary kinds ignore `b`.
[[nodiscard]] Quat apply(OpKind kind, Quat a, Quat b = Quat{0});

/// Evaluates the published minimal bit-level function for `kind` literally as
/// written. Unary kinds ignore `y`.
[[nodiscard]] BitPair bitwise_formula(OpKind kind, BitPair x, BitPair y = {});

}  // namespace mvq
