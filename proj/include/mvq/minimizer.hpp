#pragma once

// Exact two-level minimization: Quine-McCluskey prime implicants followed by
// an exact minimum cover (branch and bound), plus an XOR-recognition pass.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mvq {

inline constexpr int kMaxSpecVars = 8;

enum class Tri : std::uint8_t { Zero, One, DontCare };

/// A single-output boolean function with don't-cares. Row i assigns
/// variable 0 to the most significant bit of i.
class TruthTableSpec {
public:
  TruthTableSpec(std::vector<std::string> var_names, std::vector<Tri> outputs);

  /// Tabulates `fn` over all 2^n rows.
  static TruthTableSpec from_function(std::vector<std::string> var_names,
                                      const std::function<bool(std::uint32_t row)>& fn);

  [[nodiscard]] int n_vars() const { return static_cast<int>(names_.size()); }
  [[nodiscard]] std::uint32_t row_count() const { return std::uint32_t{1} << n_vars(); }
  [[nodiscard]] const std::vector<std::string>& var_names() const { return names_; }
  [[nodiscard]] const std::vector<Tri>& outputs() const { return outputs_; }
  [[nodiscard]] Tri at(std::uint32_t row) const { return outputs_.at(row); }

  /// Value of variable `var` in row `row`.
  [[nodiscard]] bool bit(std::uint32_t row, int var) const {
    return ((row >> (n_vars() - 1 - var)) & 1U) != 0;
  }

  friend bool operator==(const TruthTableSpec&, const TruthTableSpec&) = default;

private:
  std::vector<std::string> names_;
  std::vector<Tri> outputs_;
};

/// A product term over up to kMaxSpecVars variables.
class Cube {
public:
  enum class Lit : std::uint8_t { Zero, One, Dash };

  /// The all-dash cube (tautology) over n variables.
  explicit Cube(int n_vars);
  static Cube minterm(int n_vars, std::uint32_t row);
  /// Parses "1-0-" style strings (one character per variable).
  static Cube parse(std::string_view text);

  [[nodiscard]] int n_vars() const { return n_; }
  [[nodiscard]] Lit literal(int var) const;
  [[nodiscard]] Cube with(int var, Lit lit) const;
  [[nodiscard]] int literal_count() const;
  [[nodiscard]] int dash_count() const { return n_ - literal_count(); }
  [[nodiscard]] bool covers(std::uint32_t row) const { return (row & care_) == value_; }
  /// True if every minterm of `other` is a minterm of this cube.
  [[nodiscard]] bool contains(const Cube& other) const;
  [[nodiscard]] std::uint32_t care_mask() const { return care_; }
  [[nodiscard]] std::uint32_t value_mask() const { return value_; }
  [[nodiscard]] std::string str() const;
  /// Space-separated literals, primes for complements; "1" for the tautology.
  [[nodiscard]] std::string render(std::span<const std::string> names) const;

  /// Merges two cubes that differ in exactly one cared-for variable.
  [[nodiscard]] static bool adjacent(const Cube& a, const Cube& b);
  [[nodiscard]] static Cube merge(const Cube& a, const Cube& b);

  friend bool operator==(const Cube&, const Cube&) = default;
  /// Variable 0 first; per variable One < Zero < Dash.
  friend std::strong_ordering operator<=>(const Cube& a, const Cube& b);

private:
  Cube(int n_vars, std::uint32_t care, std::uint32_t value)
      : n_(static_cast<std::uint8_t>(n_vars)), care_(care), value_(value) {}

  std::uint8_t n_;
  std::uint32_t care_;   // bit (n-1-var) set iff var is a literal
  std::uint32_t value_;  // polarity of cared bits
};

/// Sum of products. Cubes are kept sorted, unique and irredundant under
/// single-cube containment.
class SopExpr {
public:
  explicit SopExpr(int n_vars, std::vector<Cube> cubes = {});

  [[nodiscard]] int n_vars() const { return n_; }
  [[nodiscard]] const std::vector<Cube>& cubes() const { return cubes_; }
  [[nodiscard]] int term_count() const { return static_cast<int>(cubes_.size()); }
  [[nodiscard]] int literal_count() const;
  [[nodiscard]] bool evaluate(std::uint32_t row) const;
  /// Two-input AND/OR gates needed for a direct realization.
  [[nodiscard]] int two_input_gates() const;
  /// "0" for the empty cover.
  [[nodiscard]] std::string render(std::span<const std::string> names) const;

  friend bool operator==(const SopExpr&, const SopExpr&) = default;

private:
  int n_;
  std::vector<Cube> cubes_;
};

/// OR of terms, each `factor & (xors[0] ^ xors[1] ^ ...)`. A term with no
/// XOR operands is just its factor. Covers plain SOPs and XOR-of-products.
class FactoredExpr {
public:
  struct Term {
    Cube factor;
    std::vector<Cube> xors;
    friend bool operator==(const Term&, const Term&) = default;
  };

  FactoredExpr(int n_vars, std::vector<Term> terms);
  static FactoredExpr from_sop(const SopExpr& sop);
  static FactoredExpr xor_of(int n_vars, std::vector<Cube> operands);

  [[nodiscard]] int n_vars() const { return n_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool evaluate(std::uint32_t row) const;
  [[nodiscard]] int literal_count() const;
  [[nodiscard]] int two_input_gates() const;
  /// Number of distinct complemented variables.
  [[nodiscard]] int inverters() const;
  [[nodiscard]] std::string render(std::span<const std::string> names) const;

private:
  int n_;
  std::vector<Term> terms_;
};

[[nodiscard]] std::vector<Cube> prime_implicants(const TruthTableSpec& spec);

/// Minimum cover ordered by (terms, literals, cube list).
[[nodiscard]] SopExpr minimize_exact(const TruthTableSpec& spec);

/// True iff `expr` matches `spec` on every row that is not a don't-care.
[[nodiscard]] bool check_equiv(const SopExpr& expr, const TruthTableSpec& spec);
[[nodiscard]] bool check_equiv(const FactoredExpr& expr, const TruthTableSpec& spec);

struct XorReport {
  FactoredExpr expr;
  std::string rendering;
  int two_input_gates = 0;
  bool factored = false;    // false when the input passed through unchanged
  bool equivalent = false;  // exhaustive check against the input SOP
};

/// Best-effort XOR factoring. Searches for an XOR of two or three products
/// equal to the whole function, then falls back to pairing cubes of the form
/// c a b' + c a' b into c (a ^ b).
[[nodiscard]] XorReport recognize_xor(const SopExpr& expr,
                                      std::span<const std::string> names);

}  // namespace mvq
