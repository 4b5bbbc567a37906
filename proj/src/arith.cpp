#include "mvq/arith.hpp"

namespace mvq {

namespace {

// Row a, column b.
constexpr int kGf4MulTable[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};

constexpr int kGf4Modulus = 0b111;  // t^2 + t + 1

}  // namespace

std::string_view to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Mod4Add: return "mod4-add";
    case OpKind::Mod4Sub: return "mod4-sub";
    case OpKind::Mod4Mul: return "mod4-mul";
    case OpKind::Mod4Neg: return "mod4-neg";
    case OpKind::Mod4Double: return "mod4-dbl";
    case OpKind::Gf4Add: return "gf4-add";
    case OpKind::Gf4Mul: return "gf4-mul";
  }
  return "?";
}

Quat mod4_add(Quat a, Quat b) { return Quat{(a.value() + b.value()) % 4}; }

Quat mod4_sub(Quat a, Quat b) { return Quat{(a.value() + 4 - b.value()) % 4}; }

Quat mod4_mul(Quat a, Quat b) { return Quat{(a.value() * b.value()) % 4}; }

Quat mod4_neg(Quat a) { return Quat{(4 - a.value()) % 4}; }

Quat mod4_double(Quat a) { return Quat{(2 * a.value()) % 4}; }

Quat gf4_add(Quat a, Quat b) { return Quat{a.value() ^ b.value()}; }

Quat gf4_mul(Quat a, Quat b) { return Quat{kGf4MulTable[a.value()][b.value()]}; }

Quat gf4_mul_poly(Quat a, Quat b) {
  // Carry-less product of two degree-1 polynomials has degree at most 2.
  int product = 0;
  for (int bit = 0; bit < 2; ++bit) {
    if ((b.value() >> bit) & 1) {
      product ^= a.value() << bit;
    }
  }
  if (product & 0b100) {
    product ^= kGf4Modulus;
  }
  return Quat{product};
}

std::optional<Quat> gf4_inverse(Quat a) {
  for (Quat candidate : Quat::all()) {
    if (gf4_mul(a, candidate) == Quat{1}) {
      return candidate;
    }
  }
  return std::nullopt;
}

BitPair encode_q2b(Quat q) { return BitPair{(q.value() & 2) != 0, (q.value() & 1) != 0}; }

Quat decode_b2q(BitPair p) { return Quat{2 * int{p.x1} + int{p.x2}}; }

Quat apply(OpKind kind, Quat a, Quat b) {
  switch (kind) {
    case OpKind::Mod4Add: return mod4_add(a, b);
    case OpKind::Mod4Sub: return mod4_sub(a, b);
    case OpKind::Mod4Mul: return mod4_mul(a, b);
    case OpKind::Mod4Neg: return mod4_neg(a);
    case OpKind::Mod4Double: return mod4_double(a);
    case OpKind::Gf4Add: return gf4_add(a, b);
    case OpKind::Gf4Mul: return gf4_mul(a, b);
  }
  throw std::invalid_argument("unknown operation kind");
}

BitPair bitwise_formula(OpKind kind, BitPair x, BitPair y) {
  const bool x1 = x.x1, x2 = x.x2, y1 = y.x1, y2 = y.x2;
  switch (kind) {
    case OpKind::Mod4Add:
      return {(x1 != y1) != (x2 && y2), x2 != y2};
    case OpKind::Mod4Sub:
      return {(x1 != y1) != (!x2 && y2), x2 != y2};
    case OpKind::Mod4Mul:
      return {(x1 && y2) != (x2 && y1), x2 && y2};
    case OpKind::Mod4Neg:
      return {x1 != x2, x2};
    case OpKind::Mod4Double:
      return {x2, false};
    case OpKind::Gf4Add:
      return {x1 != y1, x2 != y2};
    case OpKind::Gf4Mul: {
      const bool m1 = (x1 && !y1 && y2) || (x1 && !x2 && y1 && !y2) || (!x1 && x2 && y1) ||
                      (x2 && y1 && y2);
      return {m1, (x1 && y1) != (x2 && y2)};
    }
  }
  throw std::invalid_argument("unknown operation kind");
}

}  // namespace mvq
