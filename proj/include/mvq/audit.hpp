#pragma once

// Re-derives every published output-bit equation from the arithmetic
// oracles and checks the published forms against the derived tables.

#include <optional>
#include <string>
#include <vector>

#include "mvq/minimizer.hpp"

namespace mvq {

struct AuditRow {
  std::string function;  // e.g. "mod4 a1"
  TruthTableSpec spec;   // tabulated from the arithmetic oracle
  /// Published forms; the first is the final (gate-level) one. Some bits
  /// were published both as a sum of products and in XOR form.
  std::vector<FactoredExpr> published;
  std::string published_rendering;
  int published_gates = 0;
  /// Literal count of the published sum-of-products form, when one exists.
  std::optional<int> published_sop_literals;
  SopExpr exact;
  XorReport factored;
  bool equivalent = false;  // every published form matches the table
};

/// The 14 rows: mod-4 a1 a2 m1 m2 s1 s2 n1 n2 d1 d2, GF(4) a1 a2 m1 m2.
[[nodiscard]] std::vector<AuditRow> audit_published_functions();

[[nodiscard]] std::string format_audit(const std::vector<AuditRow>& rows);

}  // namespace mvq
