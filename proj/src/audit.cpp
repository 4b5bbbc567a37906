#include "mvq/audit.hpp"

#include <algorithm>
#include <sstream>

#include "mvq/arith.hpp"

namespace mvq {

namespace {

struct PublishedBit {
  const char* function;
  OpKind op;
  bool msb;
  // Final form: XOR of these cubes if `xor_form`, else their sum.
  bool xor_form;
  std::vector<const char*> final_cubes;
  // Sum-of-products form when it was published separately.
  std::vector<const char*> sop_cubes;
};

std::vector<Cube> cubes_of(const std::vector<const char*>& texts) {
  std::vector<Cube> cubes;
  for (const char* t : texts) {
    cubes.push_back(Cube::parse(t));
  }
  return cubes;
}

const std::vector<PublishedBit>& published_bits() {
  // Cube columns: x1 x2 y1 y2 (binary operations) or x1 x2 (unary).
  static const std::vector<PublishedBit> bits = {
      {"mod4 a1", OpKind::Mod4Add, true, true, {"1---", "--1-", "-1-1"}, {}},
      {"mod4 a2", OpKind::Mod4Add, false, true, {"-1--", "---1"}, {}},
      {"mod4 m1", OpKind::Mod4Mul, true, true, {"1--1", "-11-"}, {"1-01", "10-1", "011-", "-110"}},
      {"mod4 m2", OpKind::Mod4Mul, false, false, {"-1-1"}, {"-1-1"}},
      {"mod4 s1", OpKind::Mod4Sub, true, true, {"1---", "--1-", "-0-1"}, {}},
      {"mod4 s2", OpKind::Mod4Sub, false, true, {"-1--", "---1"}, {"-1-0", "-0-1"}},
      {"mod4 n1", OpKind::Mod4Neg, true, true, {"1-", "-1"}, {}},
      {"mod4 n2", OpKind::Mod4Neg, false, false, {"-1"}, {"-1"}},
      {"mod4 d1", OpKind::Mod4Double, true, false, {"-1"}, {"-1"}},
      {"mod4 d2", OpKind::Mod4Double, false, false, {}, {}},
      {"gf4 a1", OpKind::Gf4Add, true, true, {"1---", "--1-"}, {}},
      {"gf4 a2", OpKind::Gf4Add, false, true, {"-1--", "---1"}, {}},
      {"gf4 m1", OpKind::Gf4Mul, true, false, {"1-01", "1010", "011-", "-111"},
       {"1-01", "1010", "011-", "-111"}},
      {"gf4 m2", OpKind::Gf4Mul, false, true, {"1-1-", "-1-1"}, {}},
  };
  return bits;
}

TruthTableSpec oracle_spec(OpKind op, bool msb) {
  const bool unary = is_unary(op);
  std::vector<std::string> names =
      unary ? std::vector<std::string>{"x1", "x2"}
            : std::vector<std::string>{"x1", "x2", "y1", "y2"};
  return TruthTableSpec::from_function(std::move(names), [&](std::uint32_t row) {
    // Natural encoding puts x in the high half of the row index.
    const Quat x{static_cast<int>(unary ? row : row >> 2)};
    const Quat y{static_cast<int>(unary ? 0 : row & 3)};
    const BitPair r = encode_q2b(apply(op, x, y));
    return msb ? r.x1 : r.x2;
  });
}

}  // namespace

std::vector<AuditRow> audit_published_functions() {
  std::vector<AuditRow> rows;
  for (const auto& bit : published_bits()) {
    TruthTableSpec spec = oracle_spec(bit.op, bit.msb);
    const int n = spec.n_vars();

    std::vector<FactoredExpr> forms;
    if (bit.xor_form) {
      forms.push_back(FactoredExpr::xor_of(n, cubes_of(bit.final_cubes)));
    } else {
      forms.push_back(FactoredExpr::from_sop(SopExpr(n, cubes_of(bit.final_cubes))));
    }
    std::optional<int> sop_literals;
    if (!bit.sop_cubes.empty() || !bit.xor_form) {
      const SopExpr sop(n, cubes_of(bit.sop_cubes));
      sop_literals = sop.literal_count();
      if (bit.xor_form) {
        forms.push_back(FactoredExpr::from_sop(sop));
      }
    }

    const bool equivalent = std::all_of(forms.begin(), forms.end(), [&](const FactoredExpr& f) {
      return check_equiv(f, spec);
    });
    SopExpr exact = minimize_exact(spec);
    XorReport factored = recognize_xor(exact, spec.var_names());
    std::string rendering = forms.front().render(spec.var_names());
    const int gates = forms.front().two_input_gates();
    rows.push_back(AuditRow{bit.function, std::move(spec), std::move(forms), std::move(rendering),
                            gates, sop_literals, std::move(exact), std::move(factored),
                            equivalent});
  }
  return rows;
}

std::string format_audit(const std::vector<AuditRow>& rows) {
  std::vector<std::vector<std::string>> cells = {
      {"bit", "published", "gates", "sop-lit", "exact t/l", "exact xor form", "gates", "equiv"}};
  int passed = 0;
  for (const auto& row : rows) {
    cells.push_back({row.function, row.published_rendering, std::to_string(row.published_gates),
                     row.published_sop_literals ? std::to_string(*row.published_sop_literals) : "-",
                     std::to_string(row.exact.term_count()) + "/" +
                         std::to_string(row.exact.literal_count()),
                     row.factored.rendering, std::to_string(row.factored.two_input_gates),
                     row.equivalent ? "yes" : "NO"});
    passed += row.equivalent ? 1 : 0;
  }
  std::vector<std::size_t> widths(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      widths[c] = std::max(widths[c], line[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) {
        out << std::string(widths[c] - line[c].size() + 2, ' ');
      }
    }
    out << '\n';
  }
  out << passed << "/" << rows.size() << " published expressions equivalent\n";
  return out.str();
}

}  // namespace mvq
