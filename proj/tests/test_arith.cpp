#include <doctest.h>

#include "mvq/arith.hpp"

using namespace mvq;

namespace {

Quat q(int v) { return Quat{v}; }

}  // namespace

TEST_CASE("Quat rejects out-of-range levels") {
  CHECK_THROWS_AS(Quat{4}, std::out_of_range);
  CHECK_THROWS_AS(Quat{-1}, std::out_of_range);
  CHECK(Quat{3}.value() == 3);
}

TEST_CASE("modulo-4 examples") {
  CHECK(mod4_add(q(2), q(3)) == q(1));
  CHECK(mod4_add(q(3), q(3)) == q(2));
  CHECK(mod4_sub(q(2), q(3)) == q(3));
  CHECK(mod4_sub(q(1), q(2)) == q(3));
  CHECK(mod4_mul(q(3), q(3)) == q(1));
  CHECK(mod4_mul(q(2), q(3)) == q(2));
  CHECK(mod4_neg(q(1)) == q(3));
  CHECK(mod4_neg(q(0)) == q(0));
  CHECK(mod4_neg(q(2)) == q(2));
  CHECK(mod4_double(q(1)) == q(2));
  CHECK(mod4_double(q(3)) == q(2));
  for (Quat a : Quat::all()) {
    CHECK(mod4_add(q(0), a) == a);
    CHECK(mod4_sub(a, q(0)) == a);
    CHECK(mod4_mul(a, q(0)) == q(0));
  }
  CHECK(mod4_double(q(0)) == q(0));
}

TEST_CASE("addition and subtraction tables match the published grids") {
  // Addition grid rows y, columns x; subtraction rows x (minuend), columns y.
  const int add[4][4] = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  const int mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}};
  const int sub[4][4] = {{0, 3, 2, 1}, {1, 0, 3, 2}, {2, 1, 0, 3}, {3, 2, 1, 0}};
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(mod4_add(q(x), q(y)).value() == add[y][x]);
      CHECK(mod4_mul(q(x), q(y)).value() == mul[y][x]);
      CHECK(mod4_sub(q(x), q(y)).value() == sub[x][y]);
    }
  }
}

TEST_CASE("GF(4) examples") {
  CHECK(gf4_add(q(2), q(3)) == q(1));
  CHECK(gf4_add(q(1), q(2)) == q(3));
  CHECK(gf4_mul(q(2), q(2)) == q(3));
  CHECK(gf4_mul(q(3), q(3)) == q(2));
  CHECK(gf4_mul_poly(q(2), q(2)) == q(3));
  CHECK(gf4_mul_poly(q(2), q(3)) == q(1));
  for (Quat a : Quat::all()) {
    CHECK(gf4_add(a, a) == q(0));
    CHECK(gf4_mul(q(1), a) == a);
    CHECK(gf4_mul_poly(q(0), a) == q(0));
  }
}

TEST_CASE("GF(4) addition equals XOR of the raw encodings") {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      CHECK(gf4_add(q(a), q(b)).value() == (a ^ b));
    }
  }
}

TEST_CASE("multiplexer row sequences") {
  const int rows[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(gf4_mul(q(x), q(y)).value() == rows[x][y]);
      CHECK(gf4_mul_poly(q(x), q(y)).value() == rows[x][y]);
    }
  }
}

TEST_CASE("encoding round trip") {
  CHECK(encode_q2b(q(2)) == BitPair{true, false});
  CHECK(encode_q2b(q(0)) == BitPair{false, false});
  CHECK(encode_q2b(q(3)) == BitPair{true, true});
  CHECK(decode_b2q({false, true}) == q(1));
  CHECK(decode_b2q({false, false}) == q(0));
  CHECK(decode_b2q({true, false}) == q(2));
  for (Quat a : Quat::all()) {
    CHECK(decode_b2q(encode_q2b(a)) == a);
  }
  for (int bits = 0; bits < 4; ++bits) {
    const BitPair p{(bits & 2) != 0, (bits & 1) != 0};
    CHECK(encode_q2b(decode_b2q(p)) == p);
  }
}

TEST_CASE("ring axioms modulo 4, all triples") {
  for (Quat a : Quat::all()) {
    for (Quat b : Quat::all()) {
      CHECK(mod4_add(a, b) == mod4_add(b, a));
      CHECK(mod4_mul(a, b) == mod4_mul(b, a));
      CHECK(mod4_sub(a, b) == mod4_add(a, mod4_neg(b)));
      for (Quat c : Quat::all()) {
        CHECK(mod4_add(mod4_add(a, b), c) == mod4_add(a, mod4_add(b, c)));
        CHECK(mod4_mul(mod4_mul(a, b), c) == mod4_mul(a, mod4_mul(b, c)));
        CHECK(mod4_mul(a, mod4_add(b, c)) == mod4_add(mod4_mul(a, b), mod4_mul(a, c)));
      }
    }
    CHECK(mod4_neg(a) == mod4_sub(q(0), a));
    CHECK(mod4_neg(a) == mod4_mul(q(3), a));
    CHECK(mod4_double(a) == mod4_add(a, a));
    CHECK(mod4_double(a) == mod4_mul(q(2), a));
  }
}

TEST_CASE("field axioms for GF(4), all triples") {
  for (Quat a : Quat::all()) {
    for (Quat b : Quat::all()) {
      CHECK(gf4_add(a, b) == gf4_add(b, a));
      CHECK(gf4_mul(a, b) == gf4_mul(b, a));
      CHECK(gf4_mul_poly(a, b) == gf4_mul(a, b));
      for (Quat c : Quat::all()) {
        CHECK(gf4_add(gf4_add(a, b), c) == gf4_add(a, gf4_add(b, c)));
        CHECK(gf4_mul(gf4_mul(a, b), c) == gf4_mul(a, gf4_mul(b, c)));
        CHECK(gf4_mul(a, gf4_add(b, c)) == gf4_add(gf4_mul(a, b), gf4_mul(a, c)));
      }
    }
    const auto inv = gf4_inverse(a);
    if (a == q(0)) {
      CHECK_FALSE(inv.has_value());
    } else {
      REQUIRE(inv.has_value());
      CHECK(gf4_mul(a, *inv) == q(1));
    }
  }
}

TEST_CASE("published bit formulas agree with the oracles") {
  CHECK(bitwise_formula(OpKind::Mod4Mul, {true, false}, {true, true}) == BitPair{true, false});
  CHECK(bitwise_formula(OpKind::Gf4Mul, {true, false}, {true, false}) == BitPair{true, true});
  CHECK(bitwise_formula(OpKind::Mod4Neg, {false, false}) == BitPair{false, false});

  int vectors = 0;
  for (OpKind kind : kAllOpKinds) {
    for (Quat a : Quat::all()) {
      for (Quat b : Quat::all()) {
        if (is_unary(kind) && b != q(0)) {
          continue;
        }
        const BitPair r = bitwise_formula(kind, encode_q2b(a), encode_q2b(b));
        CHECK_MESSAGE(decode_b2q(r) == apply(kind, a, b),
                      to_string(kind) << " " << a.value() << "," << b.value());
        ++vectors;
      }
    }
  }
  CHECK(vectors == 5 * 16 + 2 * 4);
}

TEST_CASE("unary dispatch ignores the second operand") {
  for (Quat a : Quat::all()) {
    for (Quat b : Quat::all()) {
      CHECK(apply(OpKind::Mod4Neg, a, b) == mod4_neg(a));
      CHECK(apply(OpKind::Mod4Double, a, b) == mod4_double(a));
      CHECK(bitwise_formula(OpKind::Mod4Neg, encode_q2b(a), encode_q2b(b)) ==
            bitwise_formula(OpKind::Mod4Neg, encode_q2b(a)));
    }
  }
}
