#include "scgame/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace scg {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string fmt_ll(long long v) { return std::to_string(v); }

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void validate(const ArchitectureConfig& cfg) {
  if (cfg.distance < 3 || cfg.distance % 2 == 0)
    throw std::invalid_argument("architecture: distance must be odd and >= 3");
  if (cfg.grid_cells < 0 || cfg.t_factories < 0 || cfg.y_factories < 0 ||
      cfg.cells_per_t_factory < 0 || cfg.cells_per_y_factory < 0)
    throw std::invalid_argument("architecture: negative counts");
}

struct Row {
  std::string quantity, value, formula;
};

std::vector<Row> report_rows(const Estimate& e) {
  const ArchitectureConfig& c = e.config;
  std::vector<Row> rows;
  rows.push_back({"name", c.name, ""});
  rows.push_back({"distance", std::to_string(c.distance), ""});
  rows.push_back({"qubits_per_cell", std::to_string(e.qubits_per_cell),
                  c.qubits_per_cell_override >= 0 ? "override" : "2*d^2 - 1"});
  rows.push_back({"grid_qubits", fmt_ll(e.grid_qubits),
                  "grid_cells * qubits_per_cell"});
  rows.push_back({"t_factory_qubits", fmt_ll(e.t_factory_qubits),
                  "t_factories * cells_per_t_factory * qubits_per_cell"});
  rows.push_back({"y_factory_qubits", fmt_ll(e.y_factory_qubits),
                  "y_factories * cells_per_y_factory * qubits_per_cell"});
  rows.push_back({"computed_qubit_total", fmt_ll(e.computed_qubit_total),
                  "grid + T factories + Y factories"});
  if (e.declared_qubit_total >= 0) {
    rows.push_back({"declared_qubit_total", fmt_ll(e.declared_qubit_total),
                    "declared in config"});
    rows.push_back({"qubit_total_mismatch", e.qubit_total_mismatch ? "yes" : "no",
                    "computed != declared"});
  }
  rows.push_back({"tau_cycle_us", fmt(e.tau_cycle * 1e6),
                  c.tau_cycle_override >= 0
                      ? "override"
                      : "tau_r + max(tau_H, tau_M, tau_CX) + 2*tau_SE"});
  if (c.t_factories > 0)
    rows.push_back({"tau_factory_us", fmt(e.tau_factory * 1e6),
                    "conveyor steps * tau_mv with feed stalls"});
  rows.push_back({"throughput_raw", fmt(e.throughput_raw),
                  c.throughput_override >= 0
                      ? "override"
                      : "t_factories * tau_cycle / tau_factory"});
  rows.push_back({"throughput_floor", fmt(e.throughput_floor), "floor(throughput_raw)"});
  rows.push_back({"effective_depth", fmt(e.effective_depth),
                  c.declared_depth >= 0 ? "declared"
                                        : "max(layers, t_count / throughput_floor)"});
  rows.push_back({"runtime_seconds", fmt(e.runtime_seconds),
                  "effective_depth * tau_cycle"});
  if (!e.feasible) rows.push_back({"infeasible", e.infeasible_reason, ""});
  return rows;
}

}  // namespace

Estimate estimate(const ArchitectureConfig& cfg) {
  validate(cfg);
  Estimate e;
  e.config = cfg;
  e.qubits_per_cell = cfg.qubits_per_cell_override >= 0
                          ? cfg.qubits_per_cell_override
                          : 2 * cfg.distance * cfg.distance - 1;
  const long long per_cell = e.qubits_per_cell;
  e.grid_qubits = cfg.grid_cells * per_cell;
  e.t_factory_qubits =
      static_cast<long long>(cfg.t_factories) * cfg.cells_per_t_factory * per_cell;
  e.y_factory_qubits =
      static_cast<long long>(cfg.y_factories) * cfg.cells_per_y_factory * per_cell;
  e.computed_qubit_total = e.grid_qubits + e.t_factory_qubits + e.y_factory_qubits;
  e.declared_qubit_total = cfg.declared_qubit_total;
  e.qubit_total_mismatch =
      cfg.declared_qubit_total >= 0 && cfg.declared_qubit_total != e.computed_qubit_total;

  const DurationTable& tm = cfg.factory.timing;
  if (cfg.tau_cycle_override >= 0) {
    e.tau_cycle = cfg.tau_cycle_override;
  } else {
    double longest = std::max(std::max(tm.tau_h, tm.tau_cx), std::max(tm.tau_mx, tm.tau_mz));
    e.tau_cycle = tm.tau_r + longest + 2.0 * tm.tau_se;
  }
  if (e.tau_cycle <= 0) throw std::invalid_argument("architecture: tau_cycle <= 0");

  if (cfg.t_factories > 0) {
    e.tau_factory = simulate_t_factory(cfg.factory).total_seconds;
    e.throughput_raw = aggregate_throughput(cfg.t_factories, e.tau_factory, e.tau_cycle);
  }
  if (cfg.throughput_override >= 0) e.throughput_raw = cfg.throughput_override;
  e.throughput_floor = std::floor(e.throughput_raw);

  SyntheticWorkload wl = synthetic_workload(cfg.workload);
  if (cfg.declared_depth >= 0) {
    e.effective_depth = cfg.declared_depth;
  } else if (wl.t_count > 0 && e.throughput_floor < 1) {
    e.feasible = false;
    e.infeasible_reason = "factories cannot sustain one magic state per cycle";
    return e;
  } else {
    AggregateModel m;
    m.depth = wl.depth;
    m.t_count = wl.t_count;
    m.states_per_cycle = std::max(1.0, e.throughput_floor);
    m.tau_cycle = e.tau_cycle;
    e.effective_depth = aggregate_makespan(m).effective_depth;
  }
  e.runtime_seconds = e.effective_depth * e.tau_cycle;
  return e;
}

ArchitectureConfig table1_baseline() {
  ArchitectureConfig cfg;
  cfg.name = "table1";
  cfg.declared_qubit_total = 76475;
  return cfg;
}

ArchitectureConfig zoned_baseline() {
  ArchitectureConfig cfg;
  cfg.name = "zoned-baseline";
  cfg.t_factories = 0;
  cfg.y_factories = 0;
  // Syndrome extraction shares the cell with its readout partners, so each
  // cell carries double the data-patch qubits minus the shared corner.
  cfg.qubits_per_cell_override = 4 * cfg.distance * cfg.distance - 3;
  cfg.tau_cycle_override = 900e-6;
  cfg.throughput_override = 1.5;
  cfg.declared_depth = 6.6e7;
  return cfg;
}

ArchitectureConfig preset(const std::string& name) {
  if (name == "table1") return table1_baseline();
  if (name == "zoned-baseline") return zoned_baseline();
  throw std::invalid_argument("unknown preset: " + name);
}

namespace {

[[noreturn]] void config_fail(int line, const std::string& what) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ArchitectureConfig load_architecture_config(std::istream& in,
                                            const ArchitectureConfig& base) {
  ArchitectureConfig cfg = base;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) config_fail(lineno, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) config_fail(lineno, "expected key = value");

    auto as_int = [&]() {
      try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
      } catch (const std::exception&) {
        config_fail(lineno, "bad integer '" + value + "'");
      }
    };
    auto as_double = [&]() {
      try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
      } catch (const std::exception&) {
        config_fail(lineno, "bad number '" + value + "'");
      }
    };

    if (key == "name") cfg.name = value;
    else if (key == "distance") cfg.distance = static_cast<int>(as_int());
    else if (key == "grid_cells") cfg.grid_cells = static_cast<int>(as_int());
    else if (key == "t_factories") cfg.t_factories = static_cast<int>(as_int());
    else if (key == "y_factories") cfg.y_factories = static_cast<int>(as_int());
    else if (key == "cells_per_t_factory") cfg.cells_per_t_factory = static_cast<int>(as_int());
    else if (key == "cells_per_y_factory") cfg.cells_per_y_factory = static_cast<int>(as_int());
    else if (key == "declared_qubit_total") cfg.declared_qubit_total = as_int();
    else if (key == "workload.width") cfg.workload.width = static_cast<int>(as_int());
    else if (key == "workload.t_count") cfg.workload.t_count = as_double();
    else if (key == "workload.t_per_layer") cfg.workload.t_per_layer = as_double();
    else if (key == "factory.n_mb") cfg.factory.n_mb = static_cast<int>(as_int());
    else if (key == "factory.reorder") cfg.factory.reorder = as_int() != 0;
    else if (key == "factory.tau_inject") cfg.factory.tau_inject = as_double();
    else if (key == "tau_cycle") cfg.tau_cycle_override = as_double();
    else if (key == "throughput") cfg.throughput_override = as_double();
    else if (key == "declared_depth") cfg.declared_depth = as_double();
    else if (key == "qubits_per_cell") cfg.qubits_per_cell_override = static_cast<int>(as_int());
    else config_fail(lineno, "unknown key '" + key + "'");
  }
  return cfg;
}

ArchitectureConfig load_architecture_config_file(const std::string& path,
                                                 const ArchitectureConfig& base) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  return load_architecture_config(f, base);
}

std::string format_architecture_config(const ArchitectureConfig& cfg) {
  std::ostringstream out;
  out << "name = " << cfg.name << '\n'
      << "distance = " << cfg.distance << '\n'
      << "grid_cells = " << cfg.grid_cells << '\n'
      << "t_factories = " << cfg.t_factories << '\n'
      << "y_factories = " << cfg.y_factories << '\n'
      << "cells_per_t_factory = " << cfg.cells_per_t_factory << '\n'
      << "cells_per_y_factory = " << cfg.cells_per_y_factory << '\n';
  if (cfg.declared_qubit_total >= 0)
    out << "declared_qubit_total = " << cfg.declared_qubit_total << '\n';
  out << "workload.width = " << cfg.workload.width << '\n'
      << "workload.t_count = " << fmt(cfg.workload.t_count) << '\n'
      << "workload.t_per_layer = " << fmt(cfg.workload.t_per_layer) << '\n'
      << "factory.n_mb = " << cfg.factory.n_mb << '\n'
      << "factory.reorder = " << (cfg.factory.reorder ? 1 : 0) << '\n';
  if (cfg.factory.tau_inject >= 0)
    out << "factory.tau_inject = " << fmt(cfg.factory.tau_inject) << '\n';
  if (cfg.tau_cycle_override >= 0)
    out << "tau_cycle = " << fmt(cfg.tau_cycle_override) << '\n';
  if (cfg.throughput_override >= 0)
    out << "throughput = " << fmt(cfg.throughput_override) << '\n';
  if (cfg.declared_depth >= 0)
    out << "declared_depth = " << fmt(cfg.declared_depth) << '\n';
  if (cfg.qubits_per_cell_override >= 0)
    out << "qubits_per_cell = " << cfg.qubits_per_cell_override << '\n';
  return out.str();
}

std::string emit_table(const Estimate& e) {
  auto rows = report_rows(e);
  std::size_t wq = 0, wv = 0;
  for (const Row& r : rows) {
    wq = std::max(wq, r.quantity.size());
    wv = std::max(wv, r.value.size());
  }
  std::ostringstream out;
  for (const Row& r : rows) {
    out << r.quantity << std::string(wq - r.quantity.size(), ' ') << "  "
        << r.value << std::string(wv - r.value.size(), ' ');
    if (!r.formula.empty()) out << "  " << r.formula;
    out << '\n';
  }
  return out.str();
}

std::string emit_csv(const Estimate& e) {
  std::ostringstream out;
  out << "quantity,value,formula\n";
  for (const Row& r : report_rows(e)) {
    out << r.quantity << ',' << r.value << ",\"" << r.formula << "\"\n";
  }
  return out.str();
}

std::string emit_json(const Estimate& e) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": \"" << json_escape(e.config.name) << "\",\n";
  out << "  \"distance\": " << e.config.distance << ",\n";
  out << "  \"qubits_per_cell\": " << e.qubits_per_cell << ",\n";
  out << "  \"grid_qubits\": " << e.grid_qubits << ",\n";
  out << "  \"t_factory_qubits\": " << e.t_factory_qubits << ",\n";
  out << "  \"y_factory_qubits\": " << e.y_factory_qubits << ",\n";
  out << "  \"computed_qubit_total\": " << e.computed_qubit_total << ",\n";
  if (e.declared_qubit_total >= 0) {
    out << "  \"declared_qubit_total\": " << e.declared_qubit_total << ",\n";
    out << "  \"qubit_total_mismatch\": " << (e.qubit_total_mismatch ? "true" : "false")
        << ",\n";
  }
  out << "  \"tau_cycle_seconds\": " << fmt(e.tau_cycle) << ",\n";
  out << "  \"tau_factory_seconds\": " << fmt(e.tau_factory) << ",\n";
  out << "  \"throughput_raw\": " << fmt(e.throughput_raw) << ",\n";
  out << "  \"throughput_floor\": " << fmt(e.throughput_floor) << ",\n";
  out << "  \"effective_depth\": " << fmt(e.effective_depth) << ",\n";
  out << "  \"runtime_seconds\": " << fmt(e.runtime_seconds) << ",\n";
  out << "  \"feasible\": " << (e.feasible ? "true" : "false");
  if (!e.feasible)
    out << ",\n  \"infeasible_reason\": \"" << json_escape(e.infeasible_reason) << "\"";
  out << "\n}\n";
  return out.str();
}

}  // namespace scg
