#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mvq/arith.hpp"
#include "mvq/audit.hpp"
#include "mvq/minimizer.hpp"
#include "mvq/pla.hpp"
#include "min_oracle.hpp"

using namespace mvq;
using oracle::brute_cover_cost;
using oracle::brute_primes;

namespace {

const std::vector<std::string> kNames{"x1", "x2", "y1", "y2"};

std::vector<std::string> names_for(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i + 1));
  }
  return names;
}

TruthTableSpec random_spec(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::vector<Tri> out(std::size_t{1} << n);
  for (auto& t : out) {
    const int r = pick(rng);
    t = r < 4 ? Tri::Zero : (r < 8 ? Tri::One : Tri::DontCare);
  }
  return TruthTableSpec(names_for(n), out);
}

TruthTableSpec bit_of(OpKind kind, int bit) {
  return TruthTableSpec::from_function(kNames, [=](std::uint32_t row) {
    const Quat x{static_cast<int>(row >> 2)};
    const Quat y{static_cast<int>(row & 3)};
    return ((apply(kind, x, y).value() >> (1 - bit)) & 1) != 0;
  });
}

}  // namespace

TEST_CASE("cube basics") {
  const Cube c = Cube::parse("1-0-");
  CHECK(c.str() == "1-0-");
  CHECK(c.literal_count() == 2);
  CHECK(c.dash_count() == 2);
  CHECK(c.covers(0b1000));
  CHECK_FALSE(c.covers(0b1110));
  CHECK(c.render(kNames) == "x1 y1'");
  CHECK(Cube(4).render(kNames) == "1");
  CHECK(Cube::minterm(4, 0b0101).str() == "0101");
  CHECK(Cube::parse("1---").contains(c));
  CHECK_FALSE(c.contains(Cube::parse("1---")));
  CHECK(Cube::adjacent(Cube::parse("1100"), Cube::parse("1101")));
  CHECK_FALSE(Cube::adjacent(Cube::parse("1100"), Cube::parse("1111")));
  CHECK(Cube::merge(Cube::parse("1100"), Cube::parse("1101")).str() == "110-");
  CHECK(Cube::parse("1---") < Cube::parse("0---"));
  CHECK(Cube::parse("0---") < Cube::parse("----"));
  CHECK_THROWS((void)Cube::parse("10x"));
}

TEST_CASE("spec construction") {
  CHECK_THROWS((void)TruthTableSpec({"a", "b"}, {Tri::Zero}));
  const auto spec = TruthTableSpec::from_function({"a", "b"}, [](std::uint32_t r) { return r == 2; });
  CHECK(spec.at(2) == Tri::One);
  CHECK(spec.bit(2, 0));
  CHECK_FALSE(spec.bit(2, 1));
}

TEST_CASE("prime implicant examples") {
  const auto m2 = bit_of(OpKind::Mod4Mul, 1);
  const auto primes = prime_implicants(m2);
  REQUIRE(primes.size() == 1);
  CHECK(primes[0].str() == "-1-1");

  const TruthTableSpec zero(kNames, std::vector<Tri>(16, Tri::Zero));
  CHECK(prime_implicants(zero).empty());
  CHECK(minimize_exact(zero).render(kNames) == "0");

  const auto a2 = bit_of(OpKind::Mod4Add, 1);
  std::set<std::string> got;
  for (const auto& p : prime_implicants(a2)) {
    got.insert(p.str());
  }
  CHECK(got == std::set<std::string>{"-1-0", "-0-1"});
  CHECK(minimize_exact(a2).render(kNames) == "x2 y2' + x2' y2");

  const TruthTableSpec one(kNames, std::vector<Tri>(16, Tri::One));
  const auto taut = minimize_exact(one);
  CHECK(taut.term_count() == 1);
  CHECK(taut.literal_count() == 0);
  CHECK(taut.render(kNames) == "1");
}

TEST_CASE("GF(4) product high bit stays within the published literal budget") {
  const auto m1 = bit_of(OpKind::Gf4Mul, 0);
  const auto sop = minimize_exact(m1);
  CHECK(check_equiv(sop, m1));
  CHECK(sop.literal_count() <= 13);
}

TEST_CASE("primes match the brute-force definition on every 3-variable spec") {
  int specs = 0;
  for (int code = 0; code < 6561; ++code) {
    std::vector<Tri> out(8);
    int c = code;
    for (auto& t : out) {
      t = static_cast<Tri>(c % 3);
      c /= 3;
    }
    const TruthTableSpec spec(names_for(3), out);
    auto primes = prime_implicants(spec);
    std::sort(primes.begin(), primes.end());
    REQUIRE(primes == brute_primes(spec));
    ++specs;
  }
  CHECK(specs == 6561);
}

TEST_CASE("exact cover is minimal on every 3-variable spec") {
  for (int code = 0; code < 6561; code += 7) {
    std::vector<Tri> out(8);
    int c = code;
    for (auto& t : out) {
      t = static_cast<Tri>(c % 3);
      c /= 3;
    }
    const TruthTableSpec spec(names_for(3), out);
    const auto sop = minimize_exact(spec);
    REQUIRE(check_equiv(sop, spec));
    const auto [terms, lits] = brute_cover_cost(spec);
    REQUIRE(sop.term_count() == terms);
    REQUIRE(sop.literal_count() == lits);
  }
}

TEST_CASE("random 4-variable specs with don't-cares") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    const auto spec = random_spec(4, rng);
    auto primes = prime_implicants(spec);
    std::sort(primes.begin(), primes.end());
    REQUIRE(primes == brute_primes(spec));
    const auto sop = minimize_exact(spec);
    REQUIRE(check_equiv(sop, spec));
    const auto [terms, lits] = brute_cover_cost(spec);
    REQUIRE(sop.term_count() == terms);
    REQUIRE(sop.literal_count() == lits);
    for (const auto& c : sop.cubes()) {
      CHECK(std::binary_search(primes.begin(), primes.end(), c));
    }
  }
}

TEST_CASE("minimization is deterministic") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = random_spec(5, rng);
    const auto a = minimize_exact(spec);
    const auto b = minimize_exact(spec);
    CHECK(a == b);
    CHECK(a.render(spec.var_names()) == b.render(spec.var_names()));
    CHECK(recognize_xor(a, spec.var_names()).rendering ==
          recognize_xor(b, spec.var_names()).rendering);
  }
}

TEST_CASE("check_equiv") {
  const auto a2 = bit_of(OpKind::Mod4Add, 1);
  CHECK(check_equiv(SopExpr(4, {Cube::parse("-1-0"), Cube::parse("-0-1")}), a2));
  CHECK_FALSE(check_equiv(SopExpr(4, {Cube::parse("-1-0")}), a2));

  std::vector<Tri> out(4, Tri::Zero);
  out[3] = Tri::One;
  out[2] = Tri::DontCare;
  const TruthTableSpec spec({"a", "b"}, out);
  CHECK(check_equiv(SopExpr(2, {Cube::parse("1-")}), spec));
  CHECK(check_equiv(SopExpr(2, {Cube::parse("11")}), spec));
  CHECK_FALSE(check_equiv(SopExpr(2, {Cube::parse("-1")}), spec));
  CHECK(minimize_exact(spec).render(spec.var_names()) == "a");
}

TEST_CASE("sum of products normalization") {
  const SopExpr e(3, {Cube::parse("11-"), Cube::parse("1--"), Cube::parse("1--")});
  CHECK(e.term_count() == 1);
  CHECK(e.cubes()[0].str() == "1--");
  CHECK(e.two_input_gates() == 0);
  const SopExpr f(4, {Cube::parse("-1-0"), Cube::parse("-0-1")});
  CHECK(f.two_input_gates() == 3);
}

TEST_CASE("XOR recognition") {
  const auto a2 = minimize_exact(bit_of(OpKind::Mod4Add, 1));
  const auto r = recognize_xor(a2, kNames);
  CHECK(r.rendering == "x2 ^ y2");
  CHECK(r.two_input_gates == 1);
  CHECK(r.factored);
  CHECK(r.equivalent);

  const auto m1 = minimize_exact(bit_of(OpKind::Mod4Mul, 0));
  const auto rm = recognize_xor(m1, kNames);
  CHECK(rm.rendering == "(x1 y2) ^ (x2 y1)");
  CHECK(rm.two_input_gates == 3);
  CHECK(rm.equivalent);

  const SopExpr plain(4, {Cube::parse("11--")});
  const auto rp = recognize_xor(plain, kNames);
  CHECK_FALSE(rp.factored);
  CHECK(rp.rendering == "x1 x2");
}

TEST_CASE("XOR recognition preserves the function") {
  std::mt19937 rng(99);
  for (int n : {3, 4, 5, 7, 8}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto spec = random_spec(n, rng);
      const auto sop = minimize_exact(spec);
      const auto r = recognize_xor(sop, spec.var_names());
      CHECK(r.equivalent);
      for (std::uint32_t row = 0; row < spec.row_count(); ++row) {
        REQUIRE(r.expr.evaluate(row) == sop.evaluate(row));
      }
      CHECK(r.two_input_gates <= sop.two_input_gates());
    }
  }
}

TEST_CASE("XOR recognition on all published output bits") {
  for (OpKind kind : kAllOpKinds) {
    for (int bit = 0; bit < 2; ++bit) {
      const auto spec = bit_of(kind, bit);
      const auto sop = minimize_exact(spec);
      const auto r = recognize_xor(sop, kNames);
      CHECK(check_equiv(r.expr, spec));
    }
  }
  const auto gf = recognize_xor(minimize_exact(bit_of(OpKind::Gf4Mul, 1)), kNames);
  CHECK(gf.rendering == "(x1 y1) ^ (x2 y2)");
}

TEST_CASE("PLA parsing") {
  const auto spec = parse_pla(".i 4\n.o 1\n.ilb x1 x2 y1 y2\n-1-1 1\n.e\n");
  CHECK(spec == bit_of(OpKind::Mod4Mul, 1));

  const auto dc = parse_pla("# comment\n.i 2\n.o 1\n11 1\n10 -\n.e\n");
  CHECK(dc.var_names() == std::vector<std::string>{"x1", "x2"});
  CHECK(dc.at(2) == Tri::DontCare);
  CHECK(dc.at(0) == Tri::Zero);
  CHECK(minimize_exact(dc).render(dc.var_names()) == "x1");

  CHECK(default_var_names(4) == kNames);
  CHECK(default_var_names(3) == std::vector<std::string>{"v1", "v2", "v3"});

  const auto round = parse_pla(write_pla(dc));
  CHECK(round.outputs() == dc.outputs());
}

TEST_CASE("PLA errors") {
  auto code_line = [](const char* text) {
    try {
      (void)parse_pla(text);
    } catch (const PlaError& e) {
      return std::make_pair(e.code(), e.line());
    }
    FAIL("expected PlaError");
    return std::make_pair(PlaErrc::ParseError, std::size_t{0});
  };
  CHECK(code_line(".i 2\n.o 1\n111 1\n") == std::make_pair(PlaErrc::ParseError, std::size_t{3}));
  CHECK(code_line(".i 2\n.o 2\n11 11\n").first == PlaErrc::UnsupportedFeature);
  CHECK(code_line(".i 2\n.o 1\n.type fr\n").first == PlaErrc::UnsupportedFeature);
  CHECK(code_line(".i 2\n.o 1\n1x 1\n").second == 3);
  CHECK(code_line(".i 2\n.o 1\n11 1\n11 0\n").first == PlaErrc::ParseError);
  CHECK(code_line("11 1\n").first == PlaErrc::ParseError);
  CHECK(code_line(".i 2\n.o 1\n.ilb a\n").first == PlaErrc::ParseError);
  CHECK(code_line(".i 9\n.o 1\n").first == PlaErrc::UnsupportedFeature);
}

TEST_CASE("published expression audit") {
  const auto rows = audit_published_functions();
  REQUIRE(rows.size() == 14);
  for (const auto& row : rows) {
    CHECK_MESSAGE(row.equivalent, row.function);
    CHECK(check_equiv(row.exact, row.spec));
    CHECK(row.factored.equivalent);
    for (const auto& form : row.published) {
      CHECK(check_equiv(form, row.spec));
    }
    if (row.published_sop_literals) {
      CHECK_MESSAGE(row.exact.literal_count() <= *row.published_sop_literals, row.function);
    }
  }
  const std::string table = format_audit(rows);
  CHECK(table.find("14/14") != std::string::npos);
}
