#include "mvq/pla.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace mvq {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    tokens.push_back(token);
  }
  return tokens;
}

std::optional<int> parse_int(const std::string& text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

PlaError::PlaError(PlaErrc code, std::size_t line, const std::string& detail)
    : std::runtime_error((code == PlaErrc::ParseError ? "ParseError" : "UnsupportedFeature") +
                         (line > 0 ? " at line " + std::to_string(line) : std::string()) + ": " +
                         detail),
      code_(code),
      line_(line) {}

std::vector<std::string> default_var_names(int n_vars) {
  if (n_vars == 2) {
    return {"x1", "x2"};
  }
  if (n_vars == 4) {
    return {"x1", "x2", "y1", "y2"};
  }
  std::vector<std::string> names;
  for (int i = 1; i <= n_vars; ++i) {
    names.push_back("v" + std::to_string(i));
  }
  return names;
}

TruthTableSpec parse_pla(std::string_view text) {
  std::optional<int> n_inputs;
  std::vector<std::string> names;
  std::vector<std::optional<Tri>> cells;
  bool ended = false;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    const auto tokens = split(raw);
    if (tokens.empty()) {
      continue;
    }
    if (ended) {
      throw PlaError(PlaErrc::ParseError, line_no, "content after .e");
    }
    const std::string& head = tokens.front();
    if (head == ".i") {
      const auto n = tokens.size() == 2 ? parse_int(tokens[1]) : std::nullopt;
      if (!n || *n < 1 || n_inputs) {
        throw PlaError(PlaErrc::ParseError, line_no, ".i needs one positive count");
      }
      if (*n > kMaxSpecVars) {
        throw PlaError(PlaErrc::UnsupportedFeature, line_no,
                       "at most " + std::to_string(kMaxSpecVars) + " inputs");
      }
      n_inputs = *n;
      cells.assign(std::size_t{1} << *n, std::nullopt);
    } else if (head == ".o") {
      const auto n = tokens.size() == 2 ? parse_int(tokens[1]) : std::nullopt;
      if (!n) {
        throw PlaError(PlaErrc::ParseError, line_no, ".o needs one count");
      }
      if (*n != 1) {
        throw PlaError(PlaErrc::UnsupportedFeature, line_no, "only single-output files");
      }
    } else if (head == ".ilb") {
      names.assign(tokens.begin() + 1, tokens.end());
    } else if (head == ".ob" || head == ".p" || head == ".type") {
      if (head == ".type" && (tokens.size() != 2 || tokens[1] != "fd")) {
        throw PlaError(PlaErrc::UnsupportedFeature, line_no, "only .type fd");
      }
    } else if (head == ".e" || head == ".end") {
      ended = true;
    } else if (head.starts_with('.')) {
      throw PlaError(PlaErrc::UnsupportedFeature, line_no, "directive " + head);
    } else {
      if (!n_inputs) {
        throw PlaError(PlaErrc::ParseError, line_no, "row before .i");
      }
      if (tokens.size() != 2) {
        throw PlaError(PlaErrc::ParseError, line_no, "row needs an input and an output field");
      }
      const std::string& bits = tokens[0];
      const std::string& out = tokens[1];
      if (bits.size() != static_cast<std::size_t>(*n_inputs)) {
        throw PlaError(PlaErrc::ParseError, line_no,
                       "input field has " + std::to_string(bits.size()) + " columns, expected " +
                           std::to_string(*n_inputs));
      }
      if (bits.find_first_not_of("01-") != std::string::npos) {
        throw PlaError(PlaErrc::ParseError, line_no, "input field must use 0, 1 or -");
      }
      if (out.size() != 1 || std::string_view("01-").find(out[0]) == std::string_view::npos) {
        throw PlaError(PlaErrc::ParseError, line_no, "output field must be 0, 1 or -");
      }
      const Tri value = out[0] == '1' ? Tri::One : out[0] == '0' ? Tri::Zero : Tri::DontCare;
      const Cube cube = Cube::parse(bits);
      for (std::uint32_t row = 0; row < cells.size(); ++row) {
        if (!cube.covers(row)) {
          continue;
        }
        if (cells[row] && *cells[row] != value) {
          throw PlaError(PlaErrc::ParseError, line_no, "row conflicts with an earlier row");
        }
        cells[row] = value;
      }
    }
  }
  if (!n_inputs) {
    throw PlaError(PlaErrc::ParseError, 0, "missing .i");
  }
  if (names.empty()) {
    names = default_var_names(*n_inputs);
  } else if (names.size() != static_cast<std::size_t>(*n_inputs)) {
    throw PlaError(PlaErrc::ParseError, 0, ".ilb name count does not match .i");
  }
  std::vector<Tri> outputs;
  outputs.reserve(cells.size());
  for (const auto& cell : cells) {
    outputs.push_back(cell.value_or(Tri::Zero));
  }
  return TruthTableSpec(std::move(names), std::move(outputs));
}

std::string write_pla(const TruthTableSpec& spec) {
  std::ostringstream out;
  out << ".i " << spec.n_vars() << "\n.o 1\n.ilb";
  for (const auto& name : spec.var_names()) {
    out << ' ' << name;
  }
  out << '\n';
  for (std::uint32_t row = 0; row < spec.row_count(); ++row) {
    if (spec.at(row) == Tri::Zero) {
      continue;
    }
    out << Cube::minterm(spec.n_vars(), row).str() << ' '
        << (spec.at(row) == Tri::One ? '1' : '-') << '\n';
  }
  out << ".e\n";
  return out.str();
}

}  // namespace mvq
