#pragma once

// End-to-end resource accounting for a logical architecture: physical
// qubits per cell and per block, the logical cycle time, factory throughput,
// and total runtime for a workload. Derived quantities can be pinned by
// overrides so alternative layouts (for example a zoned machine with shared
// readout) can be described with the same report shape.

#include <iosfwd>
#include <string>

#include "scgame/compiler.hpp"
#include "scgame/factory_sim.hpp"

namespace scg {

struct ArchitectureConfig {
  std::string name = "table1";
  int distance = 9;
  int grid_cells = 100;  // logical data cells
  int t_factories = 25;
  int y_factories = 50;
  int cells_per_t_factory = 13;
  int cells_per_y_factory = 2;
  long long declared_qubit_total = -1;  // < 0: none declared
  WorkloadSpec workload;
  FactoryConfig factory = FactoryConfig::defaults();

  // Overrides; negative values mean "derive".
  double tau_cycle_override = -1.0;   // seconds
  double throughput_override = -1.0;  // states per cycle
  double declared_depth = -1.0;       // effective layer count
  int qubits_per_cell_override = -1;
};

struct Estimate {
  ArchitectureConfig config;

  int qubits_per_cell = 0;
  long long grid_qubits = 0;
  long long t_factory_qubits = 0;
  long long y_factory_qubits = 0;
  long long computed_qubit_total = 0;
  long long declared_qubit_total = -1;
  bool qubit_total_mismatch = false;

  double tau_cycle = 0;        // seconds
  double tau_factory = 0;      // seconds, one T factory
  double throughput_raw = 0;   // states per cycle across all T factories
  double throughput_floor = 0; // whole states available per cycle
  double effective_depth = 0;
  double runtime_seconds = 0;

  bool feasible = true;
  std::string infeasible_reason;
};

Estimate estimate(const ArchitectureConfig& cfg);

ArchitectureConfig table1_baseline();
ArchitectureConfig zoned_baseline();
ArchitectureConfig preset(const std::string& name);  // throws on unknown name

// "key = value" lines over a base config; '#' starts a comment. Keys use
// dots for nesting (workload.t_count, factory.n_mb).
ArchitectureConfig load_architecture_config(std::istream& in,
                                            const ArchitectureConfig& base);
ArchitectureConfig load_architecture_config_file(const std::string& path,
                                                 const ArchitectureConfig& base);
std::string format_architecture_config(const ArchitectureConfig& cfg);

// Aligned quantity/value/formula table.
std::string emit_table(const Estimate& e);
std::string emit_csv(const Estimate& e);
std::string emit_json(const Estimate& e);

}  // namespace scg
