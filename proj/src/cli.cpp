#include "mvq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvq/audit.hpp"
#include "mvq/circuits.hpp"
#include "mvq/minimizer.hpp"
#include "mvq/netlist_json.hpp"
#include "mvq/pla.hpp"

namespace mvq::cli {

namespace fs = std::filesystem;

namespace {

class CliError : public std::runtime_error {
public:
  CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  [[nodiscard]] int code() const { return code_; }

private:
  int code_;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  auto text = read_file(path);
  if (!text) {
    throw CliError(kIoError, "cannot read " + path);
  }
  return *text;
}

void write_output(const std::string& path, const std::string& content,
                  const std::optional<std::string>& output_dir, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  fs::path target(path);
  if (output_dir && target.is_relative()) {
    target = fs::path(*output_dir) / target;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file || !(file << content) || !file.flush()) {
    throw CliError(kIoError, "cannot write " + target.string());
  }
}

CircuitId parse_circuit(const std::string& name) {
  if (auto id = circuit_from_string(name)) {
    return *id;
  }
  std::string known;
  for (auto id : kAllCircuits) {
    known += (known.empty() ? "" : ", ") + std::string(to_string(id));
  }
  throw CliError(kUsage, "unknown circuit '" + name + "' (known: " + known + ")");
}

CostTable load_costs(const Config& config, std::ostream& err) {
  if (!config.cost_table) {
    return default_cost_table();
  }
  const auto text = read_file(*config.cost_table);
  if (!text) {
    err << "warning: cost table " << *config.cost_table << " not found, using defaults\n";
    return default_cost_table();
  }
  try {
    return cost_table_from_json(nlohmann::json::parse(*text));
  } catch (const std::exception& e) {
    throw CliError(kUsage, "bad cost table " + *config.cost_table + ": " + e.what());
  }
}

VoltageMap load_voltages(const Config& config, std::ostream& err) {
  if (!config.voltage_map) {
    return VoltageMap{};
  }
  const auto text = read_file(*config.voltage_map);
  if (!text) {
    err << "warning: voltage map " << *config.voltage_map << " not found, using defaults\n";
    return VoltageMap{};
  }
  try {
    return voltage_map_from_json(nlohmann::json::parse(*text));
  } catch (const std::exception& e) {
    throw CliError(kUsage, "bad voltage map " + *config.voltage_map + ": " + e.what());
  }
}

std::string lower(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string join_levels(const std::vector<PortSpec>& ports, const std::vector<Level>& levels,
                        std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (i > 0) {
      s += sep;
    }
    s += ports[i].name + "=" + std::to_string(levels[i]);
  }
  return s;
}

void print_rows(const TruthTable& table, std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& p : table.inputs) {
    names.push_back(p.name);
  }
  const std::size_t split = names.size();
  for (const auto& p : table.outputs) {
    names.push_back(p.name);
  }
  auto emit = [&](auto cell) {
    std::string line;
    for (std::size_t c = 0; c < names.size(); ++c) {
      if (c == split) {
        line += c == 0 ? "| " : " | ";
      } else if (c > 0) {
        line += ' ';
      }
      std::string text = cell(c);
      if (c + 1 < names.size()) {
        text.resize(std::max(text.size(), names[c].size()), ' ');
      }
      line += text;
    }
    out << line << '\n';
  };
  emit([&](std::size_t c) { return names[c]; });
  for (const auto& row : table.rows) {
    emit([&](std::size_t c) {
      return std::to_string(c < split ? row.inputs[c] : row.outputs[c - split]);
    });
  }
}

bool is_binary_op_grid(const TruthTable& table) {
  return table.inputs.size() == 2 && table.outputs.size() == 1 &&
         table.inputs[0].type == SignalType::Quaternary &&
         table.inputs[1].type == SignalType::Quaternary &&
         table.outputs[0].type == SignalType::Quaternary;
}

void print_grid(const TruthTable& table, std::ostream& out) {
  const auto& x = table.inputs[0].name;
  const auto& y = table.inputs[1].name;
  out << table.outputs[0].name << " = f(" << x << ", " << y << "), rows " << x << ", columns "
      << y << '\n';
  out << x << "\\" << y << " |";
  for (int c = 0; c < 4; ++c) {
    out << ' ' << c;
  }
  out << "\n----+--------\n";
  for (int r = 0; r < 4; ++r) {
    out << r << "   |";
    for (int c = 0; c < 4; ++c) {
      out << ' ' << int{table.rows[static_cast<std::size_t>(4 * r + c)].outputs[0]};
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_table(const std::string& name, bool bits, std::ostream& out) {
  const CircuitId id = parse_circuit(name);
  const TruthTable table = truth_table(bits ? build(id) : quaternary_view(id));
  out << to_string(id) << (bits ? " (binary ports)" : "") << '\n';
  if (is_binary_op_grid(table)) {
    print_grid(table, out);
  } else {
    print_rows(table, out);
  }
  return kOk;
}

int cmd_verify(const std::string& target, const std::optional<std::string>& netlist_path,
               std::ostream& out) {
  std::vector<CircuitId> ids;
  if (target == "all") {
    if (netlist_path) {
      throw CliError(kUsage, "--netlist needs a single circuit");
    }
    ids.assign(kAllCircuits.begin(), kAllCircuits.end());
  } else {
    ids.push_back(parse_circuit(target));
  }

  std::size_t passed = 0;
  for (CircuitId id : ids) {
    Netlist netlist = build(id);
    if (netlist_path) {
      try {
        netlist = import_json(read_input(*netlist_path));
      } catch (const NetlistError& e) {
        throw CliError(kUsage, *netlist_path + ": " + e.what());
      }
    }
    VerifyResult result;
    try {
      result = verify(id, netlist);
    } catch (const NetlistError& e) {
      throw CliError(kUsage, e.what());
    }
    out << (result.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(12) << to_string(id)
        << ' ' << (result.vectors - result.mismatches) << '/' << result.vectors << '\n';
    if (const auto& cex = result.first_failure) {
      const auto outs = netlist.output_specs();
      out << "      counterexample: " << join_levels(netlist.inputs(), cex->inputs, " ")
          << " -> expected " << join_levels(outs, cex->expected, " ") << ", got "
          << join_levels(outs, cex->actual, " ") << '\n';
    }
    passed += result.passed() ? 1 : 0;
  }
  out << passed << '/' << ids.size() << " PASS\n";
  return passed == ids.size() ? kOk : kFailure;
}

int cmd_metrics(const std::string& name, const Config& config, std::ostream& out,
                std::ostream& err) {
  const CircuitId id = parse_circuit(name);
  Metrics m;
  try {
    m = circuit_metrics(id, load_costs(config, err));
  } catch (const NetlistError& e) {
    throw CliError(kUsage, e.what());
  }
  out << "circuit=" << to_string(id) << '\n';
  out << "gates=" << m.gate_count << " depth=" << m.depth
      << " transistors_est=" << m.transistor_estimate << '\n';
  out << "kinds:";
  for (const auto& [kind, count] : m.kind_counts) {
    out << ' ' << lower(to_string(kind)) << '=' << count;
  }
  out << '\n';
  if (m.reference_transistors) {
    out << "reference_transistors=" << *m.reference_transistors << '\n';
    out << "note: " << m.reference_note << '\n';
  } else {
    out << "reference_transistors=none\n";
  }
  return kOk;
}

int cmd_minimize(const std::string& path, bool with_xor, std::ostream& out) {
  TruthTableSpec spec = [&] {
    try {
      return parse_pla(read_input(path));
    } catch (const PlaError& e) {
      throw CliError(kUsage, path + ": " + e.what());
    }
  }();
  const SopExpr sop = minimize_exact(spec);
  out << sop.render(spec.var_names()) << '\n';
  if (with_xor) {
    out << recognize_xor(sop, spec.var_names()).rendering << '\n';
  }
  return kOk;
}

int cmd_audit(std::ostream& out) {
  const auto rows = audit_published_functions();
  out << format_audit(rows);
  const bool ok =
      std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.equivalent; });
  return ok ? kOk : kFailure;
}

int cmd_sim(const std::string& name, const std::optional<std::string>& csv_path,
            const std::optional<std::string>& vcd_path, bool volts, const Config& config,
            std::ostream& out, std::ostream& err) {
  const CircuitId id = parse_circuit(name);
  const Netlist netlist = build(id);
  std::string scope(to_string(id));
  std::replace(scope.begin(), scope.end(), '-', '_');
  const Trace trace = run(netlist, sweep_all(netlist), scope);

  const bool default_csv = !csv_path && !vcd_path;
  if (csv_path || default_csv) {
    const std::string csv =
        volts ? voltage_view(trace, load_voltages(config, err)) : export_csv(trace);
    write_output(csv_path.value_or("-"), csv, config.output_dir, out);
  }
  if (vcd_path) {
    write_output(*vcd_path, export_vcd(trace), config.output_dir, out);
  }
  return kOk;
}

int cmd_compare(const std::string& a_name, const std::string& b_name, std::ostream& out) {
  const CircuitId a = parse_circuit(a_name);
  const CircuitId b = parse_circuit(b_name);
  const TruthTable ta = truth_table(quaternary_view(a));
  const TruthTable tb = truth_table(quaternary_view(b));
  auto types = [](const std::vector<PortSpec>& ports) {
    std::vector<SignalType> t;
    for (const auto& p : ports) {
      t.push_back(p.type);
    }
    return t;
  };
  if (types(ta.inputs) != types(tb.inputs) || types(ta.outputs) != types(tb.outputs)) {
    throw CliError(kUsage, std::string(to_string(a)) + " and " + std::string(to_string(b)) +
                               " have different port shapes");
  }
  for (std::size_t r = 0; r < ta.rows.size(); ++r) {
    if (ta.rows[r].outputs != tb.rows[r].outputs) {
      auto levels = [](const std::vector<Level>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
          s += (i ? "," : "") + std::to_string(v[i]);
        }
        return s;
      };
      out << "DIFFER at " << join_levels(ta.inputs, ta.rows[r].inputs, ",") << ": "
          << to_string(a) << '=' << levels(ta.rows[r].outputs) << ' ' << to_string(b) << '='
          << levels(tb.rows[r].outputs) << '\n';
      return kFailure;
    }
  }
  out << "EQUAL (" << ta.rows.size() << " vectors)\n";
  return kOk;
}

}  // namespace

Config load_config(const std::string& path, std::ostream& err) {
  Config config;
  const auto text = read_file(path);
  if (!text) {
    err << "warning: config " << path << " not found, using defaults\n";
    return config;
  }
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string& value) {
    const fs::path p(value);
    return (p.is_relative() && value != "-" ? base / p : p).string();
  };
  std::istringstream in(*text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CliError(kUsage, path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "cost_table") {
      config.cost_table = resolve(value);
    } else if (key == "voltage_map") {
      config.voltage_map = resolve(value);
    } else if (key == "output_dir") {
      config.output_dir = resolve(value);
    } else {
      throw CliError(kUsage, path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return config;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternary arithmetic circuits: verification, metrics, minimization, traces",
               "mvq"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file");

  std::string circuit, circuit_b, pla_path;
  bool bits = false, with_xor = false, volts = false;
  std::optional<std::string> netlist_path, csv_path, vcd_path;

  auto* table = app.add_subcommand("table", "print a circuit's truth table");
  table->add_option("circuit", circuit)->required();
  table->add_flag("--bits", bits, "show the binary-encoded ports");

  auto* verify_cmd = app.add_subcommand("verify", "compare circuits against the oracles");
  verify_cmd->add_option("circuit", circuit, "circuit name or 'all'")->required();
  verify_cmd->add_option("--netlist", netlist_path, "JSON netlist to check instead");

  auto* metrics_cmd = app.add_subcommand("metrics", "gate count, depth and transistor estimate");
  metrics_cmd->add_option("circuit", circuit)->required();

  auto* minimize = app.add_subcommand("minimize", "exact two-level minimization of a PLA file");
  minimize->add_option("file", pla_path, "PLA file or '-'")->required();
  minimize->add_flag("--xor", with_xor, "also print the XOR-factored form");

  auto* audit = app.add_subcommand("audit", "check the published output-bit equations");

  auto* sim = app.add_subcommand("sim", "exhaustive sweep exported as CSV and/or VCD");
  sim->add_option("circuit", circuit)->required();
  sim->add_option("--csv", csv_path, "CSV output path or '-'");
  sim->add_option("--vcd", vcd_path, "VCD output path or '-'");
  sim->add_flag("--volts", volts, "write voltages instead of levels in the CSV");

  auto* compare = app.add_subcommand("compare", "quaternary-level equivalence of two circuits");
  compare->add_option("a", circuit)->required();
  compare->add_option("b", circuit_b)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const Config config = config_path.empty() ? Config{} : load_config(config_path, err);
    if (*table) return cmd_table(circuit, bits, out);
    if (*verify_cmd) return cmd_verify(circuit, netlist_path, out);
    if (*metrics_cmd) return cmd_metrics(circuit, config, out, err);
    if (*minimize) return cmd_minimize(pla_path, with_xor, out);
    if (*audit) return cmd_audit(out);
    if (*sim) return cmd_sim(circuit, csv_path, vcd_path, volts, config, out, err);
    if (*compare) return cmd_compare(circuit, circuit_b, out);
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mvq::cli
