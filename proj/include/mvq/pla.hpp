#pragma once

// Single-output subset of the Berkeley PLA text format:
//
//   .i 4
//   .o 1
//   .ilb x1 x2 y1 y2     (optional)
//   01-1 1
//   .e
//
// Input columns may use '-' to stand for both values. Rows that are not
// listed are 0. An output of '-' marks a don't-care.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvq/minimizer.hpp"

namespace mvq {

enum class PlaErrc { ParseError, UnsupportedFeature };

class PlaError : public std::runtime_error {
public:
  PlaError(PlaErrc code, std::size_t line, const std::string& detail);
  [[nodiscard]] PlaErrc code() const { return code_; }
  /// 1-based; 0 when the problem is not tied to a line.
  [[nodiscard]] std::size_t line() const { return line_; }

private:
  PlaErrc code_;
  std::size_t line_;
};

/// Names used when a file has no .ilb line: x1 x2 for two inputs,
/// x1 x2 y1 y2 for four, v1..vn otherwise.
[[nodiscard]] std::vector<std::string> default_var_names(int n_vars);

[[nodiscard]] TruthTableSpec parse_pla(std::string_view text);

/// One row per minterm, on-set and don't-cares only.
[[nodiscard]] std::string write_pla(const TruthTableSpec& spec);

}  // namespace mvq
